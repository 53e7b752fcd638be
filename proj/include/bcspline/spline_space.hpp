#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bcspline/group_table.hpp"
#include "bcspline/hessenberg.hpp"

namespace bcspline {

/// Homogeneous linear polynomial sum c_i x_i with rational coefficients.
class LinearPoly {
public:
  LinearPoly() = default;
  explicit LinearPoly(int n) : coeffs_(n) {}
  explicit LinearPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {}
  /// x_k for k in [±n], with x_{-k} = -x_k.
  static LinearPoly var(int k, int n);
  static LinearPoly from_evector(const EVector& v);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  const mpq_class& coeff(int i) const { return coeffs_[i - 1]; }
  mpq_class& coeff(int i) { return coeffs_[i - 1]; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  LinearPoly& operator+=(const LinearPoly& o);
  LinearPoly& operator-=(const LinearPoly& o);
  LinearPoly& operator*=(const mpq_class& c);
  friend LinearPoly operator+(LinearPoly a, const LinearPoly& b) { return a += b; }
  friend LinearPoly operator-(LinearPoly a, const LinearPoly& b) { return a -= b; }
  friend LinearPoly operator*(const mpq_class& c, LinearPoly a) { return a *= c; }
  bool operator==(const LinearPoly&) const = default;

private:
  std::vector<mpq_class> coeffs_;
};

/// w x_i = x_{w(i)}.
LinearPoly act(const SignedPerm& w, const LinearPoly& p);
/// p is a rational multiple of l (zero counts).
bool proportional(const LinearPoly& p, const LinearPoly& l);
/// "1*x1 - 1*x2", "0" for zero.
std::string format_poly(const LinearPoly& p);

/// A degree-one spline: one linear polynomial per element of W_n, indexed as in group_table(n).
class Spline {
public:
  Spline() = default;
  explicit Spline(int n);

  int rank() const { return n_; }
  int size() const { return static_cast<int>(data_.size()) / (n_ == 0 ? 1 : n_); }
  LinearPoly at(int idx) const;
  LinearPoly at(const SignedPerm& w) const;
  void set(int idx, const LinearPoly& p);
  /// Coefficient of x_k at element idx.
  const mpq_class& coeff(int idx, int k) const { return data_[idx * n_ + k - 1]; }
  mpq_class& coeff(int idx, int k) { return data_[idx * n_ + k - 1]; }
  const std::vector<mpq_class>& data() const { return data_; }

  bool is_zero() const;
  std::vector<int> support() const;

  Spline& operator+=(const Spline& o);
  Spline& operator-=(const Spline& o);
  Spline& operator*=(const mpq_class& c);
  friend Spline operator+(Spline a, const Spline& b) { return a += b; }
  friend Spline operator-(Spline a, const Spline& b) { return a -= b; }
  friend Spline operator*(const mpq_class& c, Spline a) { return a *= c; }
  bool operator==(const Spline&) const = default;

private:
  int n_ = 0;
  std::vector<mpq_class> data_;
};

/// w(alpha) read as a linear polynomial.
LinearPoly edge_label(const SignedPerm& w, const Root& alpha);
/// The case table for labels of the edge (w, w t), t a signed transposition; used as a cross-check.
LinearPoly edge_label_cases(const SignedPerm& w, const SignedPerm& t);

struct EdgeViolation {
  int element;  // group index of w
  int root;     // root index of alpha
};

std::optional<EdgeViolation> find_violation(const Spline& rho, const HessenbergSpace& h);
bool is_spline(const Spline& rho, const HessenbergSpace& h);

/// Subsets of [±n] of size i without a pair {k,-k}, lexicographic on sorted content.
std::vector<std::vector<int>> unbalanced_sets(int i, int n);

Spline t_spline(int i, int n);
Spline r_spline(int i, int n);
Spline f_spline(int i, const std::vector<int>& A, int n);
Spline y_spline(int i, int k, int n);
Spline g_spline(int i, int n);
Spline h_spline(int n);

/// Hypotheses under which each family is a spline for the given t-set.
bool f_hypothesis(const TSet& t, int i);
bool y_hypothesis(const TSet& t, int i);
bool g_hypothesis(const TSet& t);
bool h_hypothesis(const TSet& t);

/// The five relation groups. Each returns the number of identities checked and fails fast.
struct RelationReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
RelationReport check_relations(int n);
/// y_{p,k} + sum_{p<i<=n} sum_{A ∋ k} f_i^A + g_{-k} == 0, with y_0 = 0.
bool relation_p4(int p, int k, int n);

enum class BasisRole { generating, left, right, permutohedral, direct };
std::string to_string(BasisRole r);

struct BasisBundle {
  BasisRole role = BasisRole::generating;
  std::vector<Spline> splines;
  std::vector<std::string> tags;
  int size() const { return static_cast<int>(splines.size()); }
};

BasisBundle generating_set(const HessenbergSpace& h);
/// Throw std::invalid_argument for H = Delta.
BasisBundle left_basis(const HessenbergSpace& h);
BasisBundle right_basis(const HessenbergSpace& h);
BasisBundle permutohedral_basis(int n);

/// Exact basis of M_H^1 from the edge conditions: coordinate j of a spline is its value at
/// free_coords[j] (flat index idx*n + k-1), and splines[j] is the unique spline taking value 1
/// there and 0 at the other free coordinates.
struct SplineSpace {
  int n = 0;
  BasisBundle basis;
  std::vector<int> free_coords;
  int dim() const { return basis.size(); }
  /// Coordinates of a spline already known to lie in M_H^1.
  std::vector<mpq_class> coordinates(const Spline& rho) const;
};
SplineSpace solve_spline_space(const HessenbergSpace& h);

/// Rank over Q by fraction-free elimination.
int rank(const std::vector<Spline>& splines);
/// Rank of the coordinate vectors inside a solved space.
int rank_in(const SplineSpace& space, const std::vector<Spline>& splines);

/// Unique coefficients of rho in the basis. Throws std::invalid_argument if rho is outside
/// the span or the basis is dependent.
std::vector<mpq_class> expand(const Spline& rho, const BasisBundle& basis);

/// Elements of minimal length in the support. Throws on the zero spline.
std::vector<SignedPerm> shortest_support(const Spline& rho);

/// For each w with a single H-inversion, whether some spline vanishes at every other element of
/// length <= l(w) and is nonzero at w. Returns the elements lacking such a spline.
std::vector<SignedPerm> missing_triangular_witnesses(const HessenbergSpace& h, const SplineSpace& space);

/// Dimension of the degree-zero piece: the number of components of the edge graph of H.
int degree_zero_dim(const HessenbergSpace& h);

/// "window TAB polynomial" per group element.
std::string dump_spline(const Spline& rho);

}  // namespace bcspline
