#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "bcspline/spline_space.hpp"

namespace bcspline {

/// Rational values on conjugacy classes, in the order of conjugacy_classes(n).
class ClassFunction {
public:
  ClassFunction() = default;
  explicit ClassFunction(int n);
  ClassFunction(int n, std::vector<mpq_class> values);

  int rank() const { return n_; }
  int num_classes() const { return static_cast<int>(values_.size()); }
  const std::vector<mpq_class>& values() const { return values_; }
  const mpq_class& operator[](int c) const { return values_[c]; }
  mpq_class& operator[](int c) { return values_[c]; }
  /// Value at the identity class.
  const mpq_class& dim() const { return values_.front(); }

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const mpq_class& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const mpq_class& c, ClassFunction a) { return a *= c; }
  bool operator==(const ClassFunction&) const = default;

private:
  int n_ = 0;
  std::vector<mpq_class> values_;
};

/// Evaluates f at one element per class.
template <class F>
ClassFunction class_function_from(int n, F&& f);

enum class CharKind { trivial, delta, defining, h, s };

/// trivial 1, delta (-1)^|Neg|, defining chi, h_i (fixed unbalanced i-sets), s (|w(k)| = k count).
ClassFunction named_char(CharKind kind, int n, int i = 0);

/// a*1 + sum_{i in I} h_i + b*h_1 + c*s + d*delta + chi_coeff*chi - one_offset*1.
struct CharacterExpression {
  int n = 0;
  int a = 0;
  std::vector<int> I;
  int b = 0;
  int c = 0;
  int d = 0;
  int chi = 0;
  int one_offset = 0;

  bool operator==(const CharacterExpression&) const = default;
};

enum class Side { left, right };
std::string to_string(Side s);
Side parse_side(std::string_view text);

/// The closed form read off the index classification; the empty t-set uses the permutohedral form.
CharacterExpression formula_char(const TSet& t, Side side);
ClassFunction evaluate(const CharacterExpression& e);
/// Value at the identity, from the named dimensions.
long expression_dim(const CharacterExpression& e);

/// "2*1 + h1 + h2 + delta", "chi + h1 + s - 2*1"; h terms merged by index.
std::string format_expression(const CharacterExpression& e);
/// Inverse of format_expression up to term order. Negative h, s or delta terms are rejected.
CharacterExpression parse_expression(std::string_view text, int n);

/// (w.rho)(v) = w(rho(w^{-1} v)).
Spline dot_action(const SignedPerm& w, const Spline& rho);

/// Trace of w on M_H^1 through the solved basis.
mpq_class trace_on(const SplineSpace& space, const SignedPerm& w);

/// Quotient character: trace minus chi (left) or minus n (right).
ClassFunction computed_char(const SplineSpace& space, Side side);
ClassFunction computed_char(const HessenbergSpace& h, Side side);

/// Same computation through an arbitrary basis of M_H^1 via expand; slow, meant for small n.
ClassFunction computed_char_via(const BasisBundle& basis, Side side);

// ---- implementation ---------------------------------------------------------

template <class F>
ClassFunction class_function_from(int n, F&& f) {
  const auto classes = conjugacy_classes(n);
  std::vector<mpq_class> values;
  values.reserve(classes.size());
  for (const auto& c : classes) values.push_back(mpq_class(f(c.representative)));
  return ClassFunction(n, std::move(values));
}

}  // namespace bcspline
