#include "bcspline/signed_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "bcspline/text.hpp"

namespace bcspline {

SignedPerm::SignedPerm(std::vector<int> window) : window_(std::move(window)) {
  const int n = rank();
  if (n < 1) throw std::invalid_argument("signed permutation must have rank >= 1");
  std::vector<bool> seen(n + 1, false);
  for (int v : window_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[a]) {
      throw std::invalid_argument("window " + join_ints(window_, ",") +
                                  " is not a signed permutation");
    }
    seen[a] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  SignedPerm p;
  p.window_ = std::move(w);
  return p;
}

SignedPerm SignedPerm::simple(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("simple reflection index out of range");
  SignedPerm s = identity(n);
  if (i < n) {
    std::swap(s.window_[i - 1], s.window_[i]);
  } else {
    s.window_[n - 1] = -n;
  }
  return s;
}

SignedPerm SignedPerm::from_word(const std::vector<int>& word, int n) {
  SignedPerm w = identity(n);
  for (int i : word) {
    if (i < 1 || i > n) throw std::invalid_argument("simple reflection index out of range");
    // right multiplication by s_i acts on positions
    if (i < n) {
      std::swap(w.window_[i - 1], w.window_[i]);
    } else {
      w.window_[n - 1] = -w.window_[n - 1];
    }
  }
  return w;
}

int SignedPerm::operator()(int k) const {
  if (k == 0 || std::abs(k) > rank()) {
    throw std::out_of_range("element " + std::to_string(k) + " outside [±" +
                            std::to_string(rank()) + "]");
  }
  return k > 0 ? window_[k - 1] : -window_[-k - 1];
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (window_[i] != i + 1) return false;
  return true;
}

std::uint64_t SignedPerm::key() const {
  std::uint64_t k = 0;
  for (int v : window_) k = (k << 5) | static_cast<std::uint64_t>(v + 16);
  return k;
}

SignedPerm compose(const SignedPerm& u, const SignedPerm& w) {
  if (u.rank() != w.rank()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<int> out(w.rank());
  for (int i = 0; i < w.rank(); ++i) out[i] = u(w.window()[i]);
  return SignedPerm(std::move(out));
}

SignedPerm inverse(const SignedPerm& w) {
  std::vector<int> out(w.rank());
  for (int i = 1; i <= w.rank(); ++i) {
    const int v = w.window()[i - 1];
    out[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return SignedPerm(std::move(out));
}

int apply(const SignedPerm& w, int k) { return w(k); }

SignedPerm transposition(int i, int j, int n) {
  if (i == 0 || j == 0 || std::abs(i) > n || std::abs(j) > n || (std::abs(i) == std::abs(j) && i != -j)) {
    throw std::invalid_argument("invalid transposition (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
  }
  SignedPerm e = SignedPerm::identity(n);
  std::vector<int> w = e.window();
  if (i == -j) {
    w[std::abs(i) - 1] = -w[std::abs(i) - 1];
    return SignedPerm(std::move(w));
  }
  // i -> j and j -> i, extended by w(-k) = -w(k)
  auto set = [&](int from, int to) {
    if (from > 0) w[from - 1] = to;
    else w[-from - 1] = -to;
  };
  set(i, j);
  set(j, i);
  return SignedPerm(std::move(w));
}

namespace {

// Sign of w applied to e_i + c e_j (c = +-1, i < j): positive iff the first nonzero entry is.
bool sends_negative(const std::vector<int>& win, int i, int j, int c) {
  const int a = win[i], b = c * win[j];
  return std::abs(a) < std::abs(b) ? a < 0 : b < 0;
}

}  // namespace

int length(const SignedPerm& w) {
  const int n = w.rank();
  const auto& win = w.window();
  int len = 0;
  for (int i = 0; i < n; ++i) {
    if (win[i] < 0) ++len;
    for (int j = i + 1; j < n; ++j) {
      if (sends_negative(win, i, j, -1)) ++len;
      if (sends_negative(win, i, j, 1)) ++len;
    }
  }
  return len;
}

std::vector<int> descent_set(const SignedPerm& w) {
  const int n = w.rank();
  const auto& win = w.window();
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (sends_negative(win, i - 1, i, -1)) out.push_back(i);
  if (win[n - 1] < 0) out.push_back(n);
  return out;
}

std::vector<int> neg_set(const SignedPerm& w) {
  std::vector<int> out;
  for (int v : w.window())
    if (v < 0) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

SignedCycleType signed_cycle_type(const SignedPerm& w) {
  const int n = w.rank();
  std::vector<bool> seen(n + 1, false);
  std::vector<int> pos, neg;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    int len = 0, sign = 1, k = start;
    do {
      seen[k] = true;
      const int v = w.window()[k - 1];
      if (v < 0) sign = -sign;
      k = std::abs(v);
      ++len;
    } while (k != start);
    (sign > 0 ? pos : neg).push_back(len);
  }
  return {Partition(pos), Partition(neg)};
}

std::string format_window(const SignedPerm& w) { return join_ints(w.window(), ","); }

SignedPerm parse_window(std::string_view text) { return SignedPerm(parse_int_list(text)); }

std::string format_cycle_type(const SignedCycleType& t) {
  return format_parts(t.lambda) + "|" + format_parts(t.mu);
}

SignedCycleType parse_cycle_type(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw std::invalid_argument("cycle type must look like 'lambda|mu'");
  }
  return {parse_parts(text.substr(0, bar)), parse_parts(text.substr(bar + 1))};
}

}  // namespace bcspline
