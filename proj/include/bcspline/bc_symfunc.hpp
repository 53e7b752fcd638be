#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "bcspline/characters.hpp"
#include "bcspline/partition.hpp"

namespace bcspline {

/// Index (lambda, mu) of a product b_lambda(x) b_mu(y).
struct PartitionPair {
  Partition lambda;
  Partition mu;
  int size() const { return lambda.size() + mu.size(); }
  bool operator==(const PartitionPair&) const = default;
};

/// Larger |lambda| first, then lambda and mu in decreasing lexicographic order.
struct PairOrder {
  bool operator()(const PartitionPair& a, const PartitionPair& b) const;
};

/// "2,1|3"; the empty side is left blank.
std::string format_key(const PartitionPair& k);
PartitionPair parse_key(std::string_view text);

enum class SymBasis { P, H, S };
std::string to_string(SymBasis b);

/// Element of Lambda_n(x,y) in one of the product bases p, h or s.
class BCSymFunc {
public:
  BCSymFunc() = default;
  BCSymFunc(int n, SymBasis basis) : n_(n), basis_(basis) {}

  int degree() const { return n_; }
  SymBasis basis() const { return basis_; }
  const std::map<PartitionPair, mpq_class, PairOrder>& terms() const { return terms_; }
  mpq_class coeff(const PartitionPair& k) const;
  bool is_zero() const { return terms_.empty(); }

  /// Throws std::invalid_argument on a key of the wrong degree.
  void add(const PartitionPair& k, const mpq_class& c);

  BCSymFunc& operator+=(const BCSymFunc& o);
  BCSymFunc& operator*=(const mpq_class& c);
  friend BCSymFunc operator+(BCSymFunc a, const BCSymFunc& b) { return a += b; }
  friend BCSymFunc operator*(const mpq_class& c, BCSymFunc a) { return a *= c; }
  bool operator==(const BCSymFunc&) const = default;

private:
  int n_ = 0;
  SymBasis basis_ = SymBasis::P;
  std::map<PartitionPair, mpq_class, PairOrder> terms_;
};

/// The single basis element b_{lambda,mu}.
BCSymFunc basis_element(SymBasis b, const Partition& lambda, const Partition& mu);

/// (1 / 2^n n!) sum_w f(w) p_lambda(w)(x+y) p_mu(w)(x-y), expanded in p(x)p(y).
BCSymFunc frobenius_bc(const ClassFunction& f);

/// Rows are partitions of k in partitions_of order; row lambda holds p_lambda in the h basis.
/// Computed through monomial coefficients.
const std::vector<std::vector<mpq_class>>& p_to_h_matrix(int k);
/// The same matrix from Newton's identity k h_k = sum_i p_i h_{k-i}.
std::vector<std::vector<mpq_class>> p_to_h_newton(int k);

BCSymFunc p_to_h(const BCSymFunc& f);
/// h_lambda = sum over rho of p_rho / z_rho, factorwise.
BCSymFunc h_to_p(const BCSymFunc& f);

/// Semistandard tableaux of shape gamma and content lambda. Throws on a size mismatch.
long kostka(const Partition& gamma, const Partition& lambda);

BCSymFunc h_to_s(const BCSymFunc& f);

struct TableRowReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// Frobenius images of 1, delta, chi, s, h_k and the type D coset character against their
/// product expansions.
TableRowReport verify_table_rows(int n);

struct PositivityReport {
  bool positive = true;
  std::vector<std::pair<PartitionPair, mpq_class>> negative;
};
PositivityReport h_positivity(const BCSymFunc& f);

/// "h[2,1|∅] + 2 h[1|1,1]"; "0" for zero.
std::string format_symfunc(const BCSymFunc& f);
/// {basis, terms: [{key, coeff}]} with coefficients as strings.
nlohmann::json to_json(const BCSymFunc& f);

}  // namespace bcspline
