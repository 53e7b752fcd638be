#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "bcspline/root_system.hpp"

namespace bcspline {

/// Subset of {t_1,...,t_n}, bit i-1 for t_i. t_0 is never present.
class TSet {
public:
  TSet() = default;
  TSet(int n, std::uint32_t bits);
  static TSet from_indices(int n, const std::vector<int>& indices);
  static TSet full(int n) { return TSet(n, (n >= 32 ? ~0u : (1u << n) - 1)); }

  int rank() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  /// False for i outside [n], so t_0 reads as absent.
  bool has(int i) const { return i >= 1 && i <= n_ && (bits_ >> (i - 1) & 1u); }
  std::vector<int> indices() const;
  bool empty() const { return bits_ == 0; }

  auto operator<=>(const TSet&) const = default;

private:
  int n_ = 0;
  std::uint32_t bits_ = 0;
};

/// "t1,t5", or "{}" when empty.
std::string format_tset(const TSet& t);
/// Accepts "t1,t5", "1,5", "{t1,t5}", "{}", "" and the empty-set sign.
TSet parse_tset(std::string_view text, int n);

/// A lower order ideal of positive roots containing the simple roots.
class HessenbergSpace {
public:
  /// Validates the explicit root list; errors name the offending root.
  static HessenbergSpace from_roots(LieType type, int n, const std::vector<Root>& roots);
  /// Downward closure of the generators together with the simple roots.
  static HessenbergSpace from_generators(LieType type, int n, const std::vector<Root>& generators);
  /// Smallest ideal with the given t-set. Throws if the type cannot realize it.
  static HessenbergSpace from_tset(LieType type, const TSet& t);
  static HessenbergSpace delta(LieType type, int n);
  static HessenbergSpace full(LieType type, int n);

  LieType type() const { return type_; }
  int rank() const { return n_; }
  /// Bit k set iff root_system(type, n).root(k) belongs to H.
  std::uint64_t mask() const { return mask_; }
  bool contains(int root_idx) const { return mask_ >> root_idx & 1u; }
  bool contains(const Root& r) const;
  int size() const;
  std::vector<Root> roots() const;
  const RootSystem& system() const { return root_system(type_, n_); }

  bool operator==(const HessenbergSpace&) const = default;

private:
  HessenbergSpace(LieType type, int n, std::uint64_t mask) : type_(type), n_(n), mask_(mask) {}
  LieType type_;
  int n_;
  std::uint64_t mask_;
};

/// "[100];[010];[110]" in root-system order.
std::string format_ideal(const HessenbergSpace& h);
/// Generators separated by ';', closed downward.
HessenbergSpace parse_ideal(std::string_view text, LieType type, int n);

/// Every Hessenberg space of the given type and rank, each once.
std::vector<HessenbergSpace> enumerate_hessenberg(LieType type, int n);

std::vector<SignedPerm> reflections(const HessenbergSpace& h);

/// Root index of t_i in the root system of the given type.
int t_root_index(LieType type, int n, int i);
SignedPerm t_reflection(int i, int n);
TSet t_set(const HessenbergSpace& h);
/// Whether some Hessenberg space of this type has exactly this t-set.
bool realizable(LieType type, const TSet& t);

std::vector<Root> h_inversions(const SignedPerm& w, const HessenbergSpace& h);

/// Bitmask over root indices of the positive roots w sends negative, per group element.
const std::vector<std::uint64_t>& inversion_masks(LieType type, int n);

/// All w whose only H-inversion is alpha_i, by scanning W_n. Sorted by group index.
std::vector<SignedPerm> h_descent_oracle(const HessenbergSpace& h, int i);
/// The closed-form case split, built from explicit reduced words. Sorted by group index.
std::vector<SignedPerm> h_descent_formula(const TSet& t, int i);
/// Closed-form |D_H(i)|, valid for any n.
mpz_class h_descent_size(const TSet& t, int i);

/// Which case of the closed form applies, as a short tag (for reports).
std::string h_descent_case(const TSet& t, int i);

struct IndexClassification {
  std::vector<int> uncovered;
  std::vector<int> surrounded;
  std::vector<int> shaded;
  int c = 0;
  int d = 0;

  bool is_uncovered(int i) const;
  bool is_surrounded(int i) const;
  bool is_shaded(int i) const;
};

IndexClassification classify(const TSet& t);

/// n + sum of |D_H(i)| computed by the oracle.
int dim_degree_one(const HessenbergSpace& h);
/// n + sum of closed-form sizes; any n.
mpz_class dim_degree_one_formula(const TSet& t);

}  // namespace bcspline
