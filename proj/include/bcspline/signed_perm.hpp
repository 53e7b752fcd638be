#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bcspline/partition.hpp"

namespace bcspline {

/// A signed permutation of [±n], stored as its window (w(1),...,w(n)).
class SignedPerm {
public:
  SignedPerm() = default;
  /// Throws std::invalid_argument unless |window| is a permutation of [n].
  explicit SignedPerm(std::vector<int> window);

  static SignedPerm identity(int n);
  /// Simple generator s_i: swaps i,i+1 for i<n, negates n for i=n.
  static SignedPerm simple(int i, int n);
  /// Product s_{word[0]} s_{word[1]} ...
  static SignedPerm from_word(const std::vector<int>& word, int n);

  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }

  /// w(k) for k in [±n].
  int operator()(int k) const;
  int apply(int k) const { return (*this)(k); }

  bool is_identity() const;
  /// Injective 64-bit key for n <= 12.
  std::uint64_t key() const;

  // Lexicographic on windows; integer order on entries is the total order -n<...<-1<1<...<n.
  auto operator<=>(const SignedPerm&) const = default;

private:
  std::vector<int> window_;
};

struct SignedPermHash {
  std::size_t operator()(const SignedPerm& w) const { return std::hash<std::uint64_t>{}(w.key()); }
};

/// (u∘w)(i) = u(w(i)).
SignedPerm compose(const SignedPerm& u, const SignedPerm& w);
SignedPerm inverse(const SignedPerm& w);
int apply(const SignedPerm& w, int k);

/// The transposition (i,j): swaps i<->j and -i<->-j. Use j = -i for (i,-i).
SignedPerm transposition(int i, int j, int n);

/// Number of positive roots sent to negative roots.
int length(const SignedPerm& w);
/// Right descents {i : length(w s_i) < length(w)}.
std::vector<int> descent_set(const SignedPerm& w);
/// Negative window entries in increasing order.
std::vector<int> neg_set(const SignedPerm& w);

struct SignedCycleType {
  Partition lambda;
  Partition mu;
  int rank() const { return lambda.size() + mu.size(); }
  auto operator<=>(const SignedCycleType&) const = default;
};

SignedCycleType signed_cycle_type(const SignedPerm& w);

/// "2,-1"
std::string format_window(const SignedPerm& w);
SignedPerm parse_window(std::string_view text);
/// "2|1", with empty sides rendered as "".
std::string format_cycle_type(const SignedCycleType& t);
SignedCycleType parse_cycle_type(std::string_view text);

}  // namespace bcspline
