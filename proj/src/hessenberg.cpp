#include "bcspline/hessenberg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "bcspline/group_table.hpp"
#include "bcspline/text.hpp"

namespace bcspline {

// ---- TSet -------------------------------------------------------------------

TSet::TSet(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > 31) throw std::invalid_argument("t-set rank must be in [1,31]");
  if (n < 32 && (bits >> n) != 0) throw std::invalid_argument("t-set index exceeds rank");
}

TSet TSet::from_indices(int n, const std::vector<int>& indices) {
  std::uint32_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > n) {
      throw std::invalid_argument("t" + std::to_string(i) + " is not defined for n=" + std::to_string(n));
    }
    bits |= 1u << (i - 1);
  }
  return TSet(n, bits);
}

std::vector<int> TSet::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (has(i)) out.push_back(i);
  return out;
}

std::string format_tset(const TSet& t) {
  if (t.empty()) return "{}";
  std::string out;
  for (int i : t.indices()) {
    if (!out.empty()) out += ",";
    out += "t" + std::to_string(i);
  }
  return out;
}

TSet parse_tset(std::string_view text, int n) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') text.remove_prefix(1);
  if (!text.empty() && text.back() == '}') text.remove_suffix(1);
  text = trim(text);
  if (text.empty() || text == "\xE2\x88\x85" || text == "none") return TSet(n, 0);
  std::vector<int> indices;
  for (auto piece : split(text, ',')) {
    piece = trim(piece);
    if (!piece.empty() && (piece.front() == 't' || piece.front() == 'T')) piece.remove_prefix(1);
    const auto parsed = parse_int_list(piece);
    if (parsed.size() != 1) throw std::invalid_argument("malformed t-set entry");
    indices.push_back(parsed[0]);
  }
  return TSet::from_indices(n, indices);
}

// ---- HessenbergSpace --------------------------------------------------------

namespace {

void check_rank(int n) {
  if (n < 1 || n * n > 64) throw std::invalid_argument("Hessenberg spaces supported for 1 <= n <= 8");
}

std::uint64_t simple_mask(int n) { return n >= 64 ? ~0ull : (1ull << n) - 1; }

std::uint64_t down_closure(const RootSystem& rs, std::uint64_t gens) {
  std::uint64_t out = simple_mask(rs.rank());
  for (int b = 0; b < rs.size(); ++b) {
    if (!(gens >> b & 1u)) continue;
    for (int a = 0; a < rs.size(); ++a)
      if (rs.leq(a, b)) out |= 1ull << a;
  }
  return out;
}

}  // namespace

HessenbergSpace HessenbergSpace::from_roots(LieType type, int n, const std::vector<Root>& roots) {
  check_rank(n);
  const auto& rs = root_system(type, n);
  std::uint64_t mask = 0;
  for (const auto& r : roots) {
    if (r.type != type || r.rank() != n) {
      throw std::invalid_argument("root " + format_root(r) + " has the wrong rank or type");
    }
    mask |= 1ull << rs.index(r);
  }
  for (int i = 0; i < n; ++i) {
    if (!(mask >> i & 1u)) {
      throw std::invalid_argument("missing simple root " + format_root(rs.root(i)));
    }
  }
  for (int b = 0; b < rs.size(); ++b) {
    if (!(mask >> b & 1u)) continue;
    for (int a = 0; a < rs.size(); ++a) {
      if (rs.leq(a, b) && !(mask >> a & 1u)) {
        throw std::invalid_argument("not downward closed: " + format_root(rs.root(b)) + " is present but " +
                                    format_root(rs.root(a)) + " is not");
      }
    }
  }
  return HessenbergSpace(type, n, mask);
}

HessenbergSpace HessenbergSpace::from_generators(LieType type, int n, const std::vector<Root>& generators) {
  check_rank(n);
  const auto& rs = root_system(type, n);
  std::uint64_t gens = 0;
  for (const auto& r : generators) gens |= 1ull << rs.index(r);
  return HessenbergSpace(type, n, down_closure(rs, gens));
}

HessenbergSpace HessenbergSpace::from_tset(LieType type, const TSet& t) {
  const int n = t.rank();
  check_rank(n);
  if (n < 2) throw std::invalid_argument("t-sets need n >= 2");
  const auto& rs = root_system(type, n);
  std::uint64_t gens = 0;
  for (int i : t.indices()) gens |= 1ull << t_root_index(type, n, i);
  HessenbergSpace h(type, n, down_closure(rs, gens));
  if (t_set(h) != t) {
    throw std::invalid_argument("t-set " + format_tset(t) + " is not realized by any type " + to_string(type) +
                                " Hessenberg space");
  }
  return h;
}

HessenbergSpace HessenbergSpace::delta(LieType type, int n) {
  check_rank(n);
  return HessenbergSpace(type, n, simple_mask(n));
}

HessenbergSpace HessenbergSpace::full(LieType type, int n) {
  check_rank(n);
  return HessenbergSpace(type, n, n * n == 64 ? ~0ull : (1ull << (n * n)) - 1);
}

bool HessenbergSpace::contains(const Root& r) const { return contains(system().index(r)); }

int HessenbergSpace::size() const { return std::popcount(mask_); }

std::vector<Root> HessenbergSpace::roots() const {
  std::vector<Root> out;
  const auto& rs = system();
  for (int k = 0; k < rs.size(); ++k)
    if (contains(k)) out.push_back(rs.root(k));
  return out;
}

std::string format_ideal(const HessenbergSpace& h) {
  std::string out;
  for (const auto& r : h.roots()) {
    if (!out.empty()) out += ";";
    out += format_root(r);
  }
  return out;
}

HessenbergSpace parse_ideal(std::string_view text, LieType type, int n) {
  std::vector<Root> gens;
  for (auto piece : split(text, ';')) {
    piece = trim(piece);
    if (piece.empty()) continue;
    Root r = parse_root(piece, type);
    if (r.rank() != n) {
      throw std::invalid_argument("root " + std::string(piece) + " does not have rank " + std::to_string(n));
    }
    gens.push_back(std::move(r));
  }
  return HessenbergSpace::from_generators(type, n, gens);
}

std::vector<HessenbergSpace> enumerate_hessenberg(LieType type, int n) {
  check_rank(n);
  const auto& rs = root_system(type, n);
  std::vector<HessenbergSpace> out;
  // roots are indexed by height, so everything below root k has a smaller index
  auto rec = [&](auto&& self, int k, std::uint64_t mask) -> void {
    if (k == rs.size()) {
      out.push_back(HessenbergSpace::from_roots(type, n, [&] {
        std::vector<Root> rts;
        for (int a = 0; a < rs.size(); ++a)
          if (mask >> a & 1u) rts.push_back(rs.root(a));
        return rts;
      }()));
      return;
    }
    self(self, k + 1, mask);
    bool allowed = true;
    for (int a = 0; a < k && allowed; ++a)
      if (rs.leq(a, k) && !(mask >> a & 1u)) allowed = false;
    if (allowed) self(self, k + 1, mask | 1ull << k);
  };
  rec(rec, n, simple_mask(n));
  std::sort(out.begin(), out.end(), [](const HessenbergSpace& a, const HessenbergSpace& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.mask() < b.mask();
  });
  return out;
}

std::vector<SignedPerm> reflections(const HessenbergSpace& h) {
  std::vector<SignedPerm> out;
  const auto& rs = h.system();
  for (int k = 0; k < rs.size(); ++k)
    if (h.contains(k)) out.push_back(rs.reflection(k));
  return out;
}

SignedPerm t_reflection(int i, int n) {
  if (n < 2 || i < 1 || i > n) throw std::invalid_argument("t_i needs n >= 2 and i in [n]");
  if (i <= n - 2) return transposition(i, i + 2, n);
  if (i == n - 1) return transposition(n - 1, -(n - 1), n);
  return transposition(n - 1, -n, n);
}

int t_root_index(LieType type, int n, int i) {
  const int idx = root_system(type, n).index_of_reflection(t_reflection(i, n));
  if (idx < 0) throw std::logic_error("t_i has no root");
  return idx;
}

TSet t_set(const HessenbergSpace& h) {
  std::uint32_t bits = 0;
  for (int i = 1; i <= h.rank(); ++i)
    if (h.contains(t_root_index(h.type(), h.rank(), i))) bits |= 1u << (i - 1);
  return TSet(h.rank(), bits);
}

bool realizable(LieType type, const TSet& t) {
  try {
    HessenbergSpace::from_tset(type, t);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<Root> h_inversions(const SignedPerm& w, const HessenbergSpace& h) {
  if (w.rank() != h.rank()) throw std::invalid_argument("h_inversions: rank mismatch");
  std::vector<Root> out;
  const auto& rs = h.system();
  for (int k = 0; k < rs.size(); ++k)
    if (h.contains(k) && !is_positive(act(w, rs.evector(k)))) out.push_back(rs.root(k));
  return out;
}

const std::vector<std::uint64_t>& inversion_masks(LieType type, int n) {
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<std::uint64_t>>> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& slot = cache[{static_cast<int>(type), n}];
  if (!slot) {
    const auto& g = group_table(n);
    const auto& rs = root_system(type, n);
    auto masks = std::make_unique<std::vector<std::uint64_t>>(g.size(), 0);
    for (int idx = 0; idx < g.size(); ++idx)
      for (int k = 0; k < rs.size(); ++k)
        if (!is_positive(act(g.element(idx), rs.evector(k)))) (*masks)[idx] |= 1ull << k;
    slot = std::move(masks);
  }
  return *slot;
}

std::vector<SignedPerm> h_descent_oracle(const HessenbergSpace& h, int i) {
  const int n = h.rank();
  if (i < 1 || i > n) throw std::invalid_argument("descent index out of range");
  const auto& g = group_table(n);
  const auto& masks = inversion_masks(h.type(), n);
  // alpha_i has root index i-1
  const std::uint64_t target = 1ull << (i - 1);
  std::vector<SignedPerm> out;
  for (int idx = 0; idx < g.size(); ++idx)
    if ((masks[idx] & h.mask()) == target) out.push_back(g.element(idx));
  return out;
}

// ---- closed forms -----------------------------------------------------------

namespace {

std::vector<int> up(int j, int i) {
  std::vector<int> w;
  for (int k = j; k <= i; ++k) w.push_back(k);
  return w;
}

std::vector<int> down(int j, int i) {
  std::vector<int> w;
  for (int k = j; k >= i; --k) w.push_back(k);
  return w;
}

// s_j ... s_n ... s_i
std::vector<int> through_n(int j, int i, int n) {
  std::vector<int> w = up(j, n);
  for (int k = n - 1; k >= i; --k) w.push_back(k);
  return w;
}

enum class Case { Single, Up, Down, Pair, LongTail, ShortTail, Coset };

Case descent_case(const TSet& t, int i) {
  const int n = t.rank();
  if (n < 2 || i < 1 || i > n) throw std::invalid_argument("descent index out of range");
  if (i <= n - 2) {
    const bool a = t.has(i - 1), b = t.has(i);
    if (a && b) return Case::Single;
    if (b) return Case::Up;
    if (a) return Case::Down;
    return Case::Coset;
  }
  if (i == n - 1) {
    const bool a = t.has(n - 2), b = t.has(n - 1), c = t.has(n);
    if (a && b) return Case::Single;
    if (b) return Case::Up;
    if (a && c) return Case::Pair;
    if (a) return Case::LongTail;
    if (c) return Case::ShortTail;
    return Case::Coset;
  }
  if (t.has(n)) return Case::Single;
  if (t.has(n - 1)) return Case::Up;
  return Case::Coset;
}

mpz_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

std::string h_descent_case(const TSet& t, int i) {
  switch (descent_case(t, i)) {
    case Case::Single: return "single";
    case Case::Up: return "ascending";
    case Case::Down: return "descending";
    case Case::Pair: return "pair";
    case Case::LongTail: return "long-tail";
    case Case::ShortTail: return "short-tail";
    case Case::Coset: return "coset";
  }
  return "";
}

std::vector<SignedPerm> h_descent_formula(const TSet& t, int i) {
  const int n = t.rank();
  std::vector<std::vector<int>> words;
  switch (descent_case(t, i)) {
    case Case::Single:
      words.push_back({i});
      break;
    case Case::Up:
      for (int j = 1; j <= i; ++j) words.push_back(up(j, i));
      break;
    case Case::Down:
      for (int j = i; j <= n; ++j) words.push_back(down(j, i));
      for (int j = 1; j <= n - 1; ++j) words.push_back(through_n(j, i, n));
      break;
    case Case::Pair:
      words = {{n, n - 1}, {n - 1}};
      break;
    case Case::LongTail:
      words.push_back({n - 1});
      for (int j = 1; j <= n; ++j) words.push_back(through_n(j, n - 1, n));
      break;
    case Case::ShortTail:
      words.push_back({n, n - 1});
      for (int j = 1; j <= n - 1; ++j) words.push_back(up(j, n - 1));
      break;
    case Case::Coset: {
      const auto& g = group_table(n);
      std::vector<SignedPerm> out;
      for (int idx : g.min_coset_reps(i))
        if (!g.element(idx).is_identity()) out.push_back(g.element(idx));
      return out;
    }
  }
  const auto& g = group_table(n);
  std::vector<int> idxs;
  for (const auto& w : words) idxs.push_back(g.index(SignedPerm::from_word(w, n)));
  std::sort(idxs.begin(), idxs.end());
  idxs.erase(std::unique(idxs.begin(), idxs.end()), idxs.end());
  std::vector<SignedPerm> out;
  for (int idx : idxs) out.push_back(g.element(idx));
  return out;
}

mpz_class h_descent_size(const TSet& t, int i) {
  const int n = t.rank();
  switch (descent_case(t, i)) {
    case Case::Single: return 1;
    case Case::Up: return i;
    case Case::Down: return (n - i + 1) + (n - 1);
    case Case::Pair: return 2;
    case Case::LongTail: return n + 1;
    case Case::ShortTail: return n;
    case Case::Coset: {
      mpz_class pow2 = 1;
      pow2 <<= i;
      return pow2 * binom(n, i) - 1;
    }
  }
  return 0;
}

bool IndexClassification::is_uncovered(int i) const {
  return std::find(uncovered.begin(), uncovered.end(), i) != uncovered.end();
}
bool IndexClassification::is_surrounded(int i) const {
  return std::find(surrounded.begin(), surrounded.end(), i) != surrounded.end();
}
bool IndexClassification::is_shaded(int i) const {
  return std::find(shaded.begin(), shaded.end(), i) != shaded.end();
}

IndexClassification classify(const TSet& t) {
  const int n = t.rank();
  if (n < 2) throw std::invalid_argument("classify needs n >= 2");
  IndexClassification out;
  for (int i = 1; i <= n; ++i) {
    const bool uncovered = i != n - 1 ? (!t.has(i - 1) && !t.has(i))
                                      : (!t.has(n - 2) && !t.has(n - 1) && !t.has(n));
    bool later = false;
    for (int m = i + 1; m <= n; ++m) later = later || t.has(m);
    const bool surrounded = i <= n - 2 && t.has(i - 1) && !t.has(i) && later;
    const bool shaded = t.has(i) || (i == n - 1 && t.has(n));
    if (uncovered) out.uncovered.push_back(i);
    if (surrounded) out.surrounded.push_back(i);
    if (shaded) out.shaded.push_back(i);
  }
  out.c = t.has(n) ? 0 : 1;
  out.d = (!t.has(n - 1) && t.has(n)) ? 1 : 0;
  return out;
}

int dim_degree_one(const HessenbergSpace& h) {
  int total = h.rank();
  for (int i = 1; i <= h.rank(); ++i) total += static_cast<int>(h_descent_oracle(h, i).size());
  return total;
}

mpz_class dim_degree_one_formula(const TSet& t) {
  mpz_class total = t.rank();
  for (int i = 1; i <= t.rank(); ++i) total += h_descent_size(t, i);
  return total;
}

}  // namespace bcspline
