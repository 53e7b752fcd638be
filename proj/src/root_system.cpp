#include "bcspline/root_system.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "bcspline/text.hpp"

namespace bcspline {

std::string to_string(LieType t) { return t == LieType::B ? "B" : "C"; }

LieType parse_lie_type(std::string_view text) {
  text = trim(text);
  if (text == "B" || text == "b") return LieType::B;
  if (text == "C" || text == "c") return LieType::C;
  throw std::invalid_argument("unknown Lie type '" + std::string(text) + "' (expected B or C)");
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

namespace {

int last_multiplier(LieType t) { return t == LieType::B ? 1 : 2; }

EVector normalized_direction(EVector v) {
  int g = 0;
  for (int x : v) g = std::gcd(g, std::abs(x));
  if (g == 0) throw std::invalid_argument("zero vector has no direction");
  for (int& x : v) x /= g;
  if (!is_positive(v))
    for (int& x : v) x = -x;
  return v;
}

}  // namespace

Root simple_root(LieType type, int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("simple root index out of range");
  Root r{type, std::vector<int>(n, 0)};
  r.coords[i - 1] = 1;
  return r;
}

EVector to_evector(const Root& r) {
  const int n = r.rank();
  const auto& c = r.coords;
  EVector v(n, 0);
  for (int k = 0; k < n; ++k) {
    if (k + 1 < n) {
      v[k] += c[k];
      v[k + 1] -= c[k];
    } else {
      v[k] += last_multiplier(r.type) * c[k];
    }
  }
  return v;
}

Root from_evector(LieType type, const EVector& v) {
  const int n = static_cast<int>(v.size());
  Root r{type, std::vector<int>(n, 0)};
  int prev = 0;
  for (int k = 0; k < n; ++k) {
    if (k + 1 < n) {
      r.coords[k] = v[k] + prev;
    } else {
      const int m = last_multiplier(type);
      if ((v[k] + prev) % m != 0) {
        throw std::invalid_argument("vector is not in the " + to_string(type) + " root lattice");
      }
      r.coords[k] = (v[k] + prev) / m;
    }
    prev = r.coords[k];
  }
  return r;
}

bool is_positive(const EVector& v) {
  for (int x : v)
    if (x != 0) return x > 0;
  throw std::invalid_argument("zero vector has no sign");
}

EVector act(const SignedPerm& w, const EVector& v) {
  if (w.rank() != static_cast<int>(v.size())) throw std::invalid_argument("act: rank mismatch");
  EVector out(v.size(), 0);
  for (int i = 1; i <= w.rank(); ++i) {
    const int image = w(i);
    out[std::abs(image) - 1] += image > 0 ? v[i - 1] : -v[i - 1];
  }
  return out;
}

EVector act(const SignedPerm& w, const Root& r) { return act(w, to_evector(r)); }

SignedPerm root_to_reflection(const Root& r) {
  const EVector v = to_evector(r);
  const int n = r.rank();
  std::vector<int> support;
  for (int k = 0; k < n; ++k)
    if (v[k] != 0) support.push_back(k + 1);
  const bool ok = !support.empty() && is_positive(v) &&
                  ((support.size() == 1 && v[support[0] - 1] == last_multiplier(r.type)) ||
                   (support.size() == 2 && v[support[0] - 1] == 1 && std::abs(v[support[1] - 1]) == 1));
  if (!ok) throw std::invalid_argument(format_root(r) + " is not a positive root");
  if (support.size() == 1) return transposition(support[0], -support[0], n);
  const int i = support[0], j = support[1];
  return v[j - 1] < 0 ? transposition(i, j, n) : transposition(i, -j, n);
}

bool poset_leq(const Root& a, const Root& b) {
  if (a.type != b.type) throw std::invalid_argument("poset_leq: type mismatch");
  if (a.rank() != b.rank()) throw std::invalid_argument("poset_leq: rank mismatch");
  for (int k = 0; k < a.rank(); ++k)
    if (b.coords[k] < a.coords[k]) return false;
  return true;
}

std::string format_root(const Root& r) {
  std::string out = "[";
  const bool wide = std::any_of(r.coords.begin(), r.coords.end(), [](int c) { return c < 0 || c > 9; });
  for (std::size_t k = 0; k < r.coords.size(); ++k) {
    if (wide && k) out += ",";
    out += std::to_string(r.coords[k]);
  }
  return out + "]";
}

Root parse_root(std::string_view text, LieType type) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') text.remove_prefix(1);
  if (!text.empty() && text.back() == ']') text.remove_suffix(1);
  Root r{type, {}};
  if (text.find(',') != std::string_view::npos) {
    r.coords = parse_int_list(text);
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("malformed root '" + std::string(text) + "'");
      r.coords.push_back(ch - '0');
    }
  }
  if (r.coords.empty()) throw std::invalid_argument("empty root");
  return r;
}

RootSystem::RootSystem(LieType type, int n) : type_(type), n_(n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<EVector> vs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      EVector minus(n, 0), plus(n, 0);
      minus[i] = 1;
      minus[j] = -1;
      plus[i] = 1;
      plus[j] = 1;
      vs.push_back(minus);
      vs.push_back(plus);
    }
    EVector single(n, 0);
    single[i] = last_multiplier(type);
    vs.push_back(single);
  }
  for (const auto& v : vs) roots_.push_back(from_evector(type, v));
  std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords > b.coords;
  });
  for (int idx = 0; idx < size(); ++idx) {
    evectors_.push_back(to_evector(roots_[idx]));
    reflections_.push_back(root_to_reflection(roots_[idx]));
    by_coords_.emplace(roots_[idx].coords, idx);
    by_direction_.emplace(normalized_direction(evectors_[idx]), idx);
  }
  leq_.resize(static_cast<std::size_t>(size()) * size());
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) leq_[a * size() + b] = poset_leq(roots_[a], roots_[b]);
}

int RootSystem::index(const Root& r) const {
  if (r.type != type_ || r.rank() != n_) throw std::invalid_argument("root of wrong type or rank");
  auto it = by_coords_.find(r.coords);
  if (it == by_coords_.end()) {
    throw std::invalid_argument(format_root(r) + " is not a positive root of " + to_string(type_) +
                                std::to_string(n_));
  }
  return it->second;
}

int RootSystem::index_of_reflection(const SignedPerm& t) const {
  for (int idx = 0; idx < size(); ++idx)
    if (reflections_[idx] == t) return idx;
  return -1;
}

int RootSystem::index_of_evector(const EVector& v) const {
  if (static_cast<int>(v.size()) != n_) return -1;
  if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) return -1;
  auto it = by_direction_.find(normalized_direction(v));
  return it == by_direction_.end() ? -1 : it->second;
}

const RootSystem& root_system(LieType type, int n) {
  static std::map<std::pair<int, int>, std::unique_ptr<RootSystem>> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& slot = cache[{static_cast<int>(type), n}];
  if (!slot) slot = std::make_unique<RootSystem>(type, n);
  return *slot;
}

std::vector<Root> positive_roots(LieType type, int n) { return root_system(type, n).roots(); }

}  // namespace bcspline
