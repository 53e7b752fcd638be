#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "bcspline/signed_perm.hpp"

namespace bcspline {

/// Largest rank for which the full group is enumerated.
inline constexpr int kMaxTableRank = 6;

struct ConjugacyClass {
  SignedCycleType type;
  SignedPerm representative;
  mpz_class size;
};

/// All of W_n in lexicographic window order, with per-element data cached.
class GroupTable {
public:
  explicit GroupTable(int n);

  int rank() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<SignedPerm>& elements() const { return elements_; }
  const SignedPerm& element(int idx) const { return elements_[idx]; }
  /// Throws std::out_of_range if w has the wrong rank.
  int index(const SignedPerm& w) const;

  int length(int idx) const { return length_[idx]; }
  int neg_count(int idx) const { return neg_count_[idx]; }
  int inverse(int idx) const { return inverse_[idx]; }
  int class_of(int idx) const { return class_of_[idx]; }
  /// Index of w·s_i.
  int right_simple(int idx, int i) const { return right_simple_[(i - 1) * size() + idx]; }
  int multiply(int a, int b) const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_index(const SignedCycleType& t) const;

  /// Minimal length representatives of W / (S_i x W_{n-i}).
  std::vector<int> min_coset_reps(int i) const;

private:
  int n_;
  std::vector<SignedPerm> elements_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> length_, neg_count_, inverse_, class_of_, right_simple_;
  std::vector<ConjugacyClass> classes_;
};

/// Shared immutable table; built on first use. Requires 1 <= n <= kMaxTableRank.
const GroupTable& group_table(int n);

/// All signed cycle types of rank n in the canonical class order (identity class first).
std::vector<SignedCycleType> signed_cycle_types(int n);

/// Class size 2^n n! / z, with z the centralizer order of the type.
mpz_class class_size_formula(const SignedCycleType& t);

/// A representative built directly from the cycle type (consecutive cycles).
SignedPerm cycle_type_representative(const SignedCycleType& t);

/// Conjugacy classes; lexicographically least representatives by scan for n <= kMaxTableRank,
/// constructed representatives and closed-form sizes beyond.
std::vector<ConjugacyClass> conjugacy_classes(int n);

/// Minimal coset representatives as elements.
std::vector<SignedPerm> min_coset_reps(int n, int i);

mpz_class group_order(int n);

}  // namespace bcspline
