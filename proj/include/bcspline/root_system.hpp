#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bcspline/signed_perm.hpp"

namespace bcspline {

enum class LieType { B, C };

std::string to_string(LieType t);
/// Accepts "B"/"C" in either case.
LieType parse_lie_type(std::string_view text);

/// Integer vector in the standard basis e_1..e_n.
using EVector = std::vector<int>;

/// A root in simple-root coordinates [c_1 ... c_n].
struct Root {
  LieType type = LieType::B;
  std::vector<int> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  int height() const;
  auto operator<=>(const Root&) const = default;
};

/// Simple root alpha_i of the given type and rank.
Root simple_root(LieType type, int n, int i);

EVector to_evector(const Root& r);
/// Throws std::invalid_argument if v is not an integral combination of simple roots.
Root from_evector(LieType type, const EVector& v);

/// First nonzero entry positive. Throws on the zero vector.
bool is_positive(const EVector& v);
/// w e_i = sign(w(i)) e_{|w(i)|}.
EVector act(const SignedPerm& w, const EVector& v);
EVector act(const SignedPerm& w, const Root& r);

/// e_i - e_j -> (i,j), e_i + e_j -> (i,-j), e_i or 2e_i -> (i,-i). Throws unless r is positive.
SignedPerm root_to_reflection(const Root& r);

/// b - a is a non-negative combination of simple roots. Throws on type or rank mismatch.
bool poset_leq(const Root& a, const Root& b);

/// "[122]"
std::string format_root(const Root& r);
/// Parses "[122]" (brackets optional); digits are single coordinates unless comma separated.
Root parse_root(std::string_view text, LieType type);

/// The positive roots of one type and rank in a fixed order: by height, then coordinates
/// descending, so that alpha_1..alpha_n come first.
class RootSystem {
public:
  RootSystem(LieType type, int n);

  LieType type() const { return type_; }
  int rank() const { return n_; }
  int size() const { return static_cast<int>(roots_.size()); }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int idx) const { return roots_[idx]; }
  const EVector& evector(int idx) const { return evectors_[idx]; }
  const SignedPerm& reflection(int idx) const { return reflections_[idx]; }

  /// Index of a positive root; throws std::invalid_argument if r is not one.
  int index(const Root& r) const;
  /// Index of the root whose reflection is t; -1 if t is not a reflection.
  int index_of_reflection(const SignedPerm& t) const;
  /// Index of the positive root proportional to v (sign ignored); -1 if none.
  int index_of_evector(const EVector& v) const;

  bool leq(int a, int b) const { return leq_[a * size() + b]; }

private:
  LieType type_;
  int n_;
  std::vector<Root> roots_;
  std::vector<EVector> evectors_;
  std::vector<SignedPerm> reflections_;
  std::map<std::vector<int>, int> by_coords_;
  std::map<std::vector<int>, int> by_direction_;
  std::vector<bool> leq_;
};

/// Shared immutable instance per (type, n).
const RootSystem& root_system(LieType type, int n);

std::vector<Root> positive_roots(LieType type, int n);

}  // namespace bcspline
