#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bcspline/bc_symfunc.hpp"

namespace bcspline {

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string name) : name(std::move(name)) {}

  std::string name;
  long checked = 0;
  long failed = 0;
  /// First few counterexamples, in a deterministic order.
  std::vector<std::string> failures;
  double seconds = 0;

  bool passed() const { return failed == 0; }
  void expect(bool ok, const std::function<std::string()>& what);
};

/// Runs f(0..count-1) on up to `jobs` threads; results keep index order.
void parallel_for(int count, int jobs, const std::function<void(int)>& f);

/// Identity, inverses and associativity; exhaustive for n <= 3, `samples` random triples otherwise.
SuiteResult suite_group_laws(int n, int samples = 1000, unsigned seed = 1);
/// Root-count length against breadth-first word length, and coset representative counts 2^i C(n,i).
SuiteResult suite_lengths(int n);
/// Positive roots biject onto the signed transpositions; each reflection negates its root.
SuiteResult suite_roots(LieType type, int n);
/// Oracle against closed form for every Hessenberg space and every i.
SuiteResult suite_descents(LieType type, int n, int jobs = 1);
/// Generating-set rank against n + sum |D_H(i)|, and the direct solve against the oracle.
SuiteResult suite_dimension(LieType type, int n, int jobs = 1);
SuiteResult suite_relations(int n);
/// Family splines are splines whenever their hypotheses hold.
SuiteResult suite_families(LieType type, int n, int jobs = 1);
/// Transformation rules for the families under the dot action; exhaustive for n <= 3.
SuiteResult suite_dot_action(int n, int samples = 1000, unsigned seed = 1);
/// Computed characters against the closed form, both sides, every space.
SuiteResult suite_characters(LieType type, int n, int jobs = 1);
SuiteResult suite_frobenius(int n);
/// h-positivity of the Frobenius image of the computed left character, every space.
SuiteResult suite_positivity(LieType type, int n, int jobs = 1);
/// Closed-form sizes against the explicit closed-form sets, every realizable t-set (n <= 6).
SuiteResult suite_formula_consistency(LieType type, int n);
/// Oracle against closed form on the smallest space with the given t-set.
SuiteResult suite_descent_sample(LieType type, const TSet& t);

/// Whether the type realizes the t-set; explicit for n <= 8, by the boundary rule beyond.
bool tset_realizable(LieType type, const TSet& t);

}  // namespace bcspline
