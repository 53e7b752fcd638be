#include <doctest.h>

#include <set>

#include "bcspline/group_table.hpp"
#include "bcspline/root_system.hpp"

using namespace bcspline;

namespace {

Root R(LieType t, std::string_view s) { return parse_root(s, t); }
SignedPerm W(std::vector<int> w) { return SignedPerm(std::move(w)); }

}  // namespace

TEST_CASE("positive root counts") {
  CHECK(positive_roots(LieType::B, 3).size() == 9);
  CHECK(positive_roots(LieType::C, 3).size() == 9);
  for (int n = 1; n <= 6; ++n) {
    CHECK(static_cast<int>(positive_roots(LieType::B, n).size()) == n * n);
    CHECK(static_cast<int>(positive_roots(LieType::C, n).size()) == n * n);
  }
  const auto& rs = root_system(LieType::B, 3);
  CHECK(format_root(rs.root(0)) == "[100]");
  CHECK(format_root(rs.root(1)) == "[010]");
  CHECK(format_root(rs.root(2)) == "[001]");
}

TEST_CASE("coordinate conversions") {
  CHECK(to_evector(R(LieType::B, "[122]")) == EVector{1, 1, 0});
  CHECK(to_evector(R(LieType::C, "[221]")) == EVector{2, 0, 0});
  CHECK(to_evector(R(LieType::C, "[011]")) == EVector{0, 1, 1});
  CHECK(from_evector(LieType::B, {0, 0, 1}) == R(LieType::B, "[001]"));
  CHECK_THROWS_AS(from_evector(LieType::C, {0, 0, 1}), std::invalid_argument);
  for (LieType t : {LieType::B, LieType::C})
    for (const auto& r : positive_roots(t, 4)) CHECK(from_evector(t, to_evector(r)) == r);
  CHECK(parse_root("122", LieType::B) == R(LieType::B, "[122]"));
  CHECK_THROWS(parse_root("[1x2]", LieType::B));
}

TEST_CASE("root to reflection") {
  CHECK(root_to_reflection(R(LieType::B, "[122]")) == transposition(1, -2, 3));
  CHECK(root_to_reflection(R(LieType::C, "[221]")) == transposition(1, -1, 3));
  CHECK(root_to_reflection(R(LieType::B, "[100]")) == transposition(1, 2, 3));
  CHECK_THROWS_AS(root_to_reflection(R(LieType::B, "[101]")), std::invalid_argument);

  for (int n = 1; n <= 4; ++n) {
    std::set<SignedPerm> transpositions;
    for (int i = 1; i <= n; ++i) {
      transpositions.insert(transposition(i, -i, n));
      for (int j = i + 1; j <= n; ++j) {
        transpositions.insert(transposition(i, j, n));
        transpositions.insert(transposition(i, -j, n));
      }
    }
    for (LieType t : {LieType::B, LieType::C}) {
      std::set<SignedPerm> image;
      for (const auto& r : positive_roots(t, n)) image.insert(root_to_reflection(r));
      CHECK(image == transpositions);
      for (int i = 1; i <= n; ++i) {
        const auto s = root_to_reflection(simple_root(t, n, i));
        CHECK(s == (i < n ? SignedPerm::simple(i, n) : transposition(n, -n, n)));
        CHECK(s == SignedPerm::simple(i, n));
      }
    }
  }
}

TEST_CASE("action on roots") {
  // s_n(alpha_{n-1}) = alpha_{n-1} + 2 alpha_n in B
  const auto s3 = SignedPerm::simple(3, 3);
  CHECK(from_evector(LieType::B, act(s3, simple_root(LieType::B, 3, 2))) == R(LieType::B, "[012]"));
  // s_{n-1}(alpha_n) = 2 alpha_{n-1} + alpha_n in C
  const auto s2 = SignedPerm::simple(2, 3);
  CHECK(from_evector(LieType::C, act(s2, simple_root(LieType::C, 3, 3))) == R(LieType::C, "[021]"));
  for (const auto& r : positive_roots(LieType::B, 3))
    CHECK(act(SignedPerm::identity(3), r) == to_evector(r));

  CHECK(is_positive({1, -1}));
  CHECK_FALSE(is_positive({0, 0, -1}));
  CHECK_THROWS_AS(is_positive({0, 0}), std::invalid_argument);
  CHECK_FALSE(is_positive(act(W({-1, 2}), simple_root(LieType::B, 2, 1))));
  // a reflection negates its own root
  for (LieType t : {LieType::B, LieType::C})
    for (const auto& r : positive_roots(t, 3)) {
      EVector v = to_evector(r);
      for (int& x : v) x = -x;
      CHECK(act(root_to_reflection(r), r) == v);
    }
}

TEST_CASE("inversion count matches length in both types") {
  for (int n = 1; n <= 4; ++n) {
    const auto& g = group_table(n);
    for (LieType t : {LieType::B, LieType::C}) {
      const auto& rs = root_system(t, n);
      for (int idx = 0; idx < g.size(); ++idx) {
        int inv = 0;
        for (int a = 0; a < rs.size(); ++a) {
          const EVector v = act(g.element(idx), rs.evector(a));
          CHECK(rs.index_of_evector(v) >= 0);
          if (!is_positive(v)) ++inv;
        }
        CHECK(inv == g.length(idx));
      }
    }
  }
}

TEST_CASE("root poset") {
  CHECK(poset_leq(R(LieType::B, "[011]"), R(LieType::B, "[012]")));
  CHECK(poset_leq(R(LieType::C, "[011]"), R(LieType::C, "[021]")));
  CHECK_FALSE(poset_leq(R(LieType::C, "[021]"), R(LieType::C, "[011]")));
  for (const auto& r : positive_roots(LieType::C, 4)) CHECK(poset_leq(r, r));
  CHECK_THROWS_AS(poset_leq(R(LieType::B, "[011]"), R(LieType::C, "[011]")), std::invalid_argument);

  // (2,-3) sits above (2,-2) in B and below it in C
  for (LieType t : {LieType::B, LieType::C}) {
    const auto& rs = root_system(t, 3);
    const int a = rs.index_of_reflection(transposition(2, -2, 3));
    const int b = rs.index_of_reflection(transposition(2, -3, 3));
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    if (t == LieType::B) {
      CHECK(rs.leq(a, b));
      CHECK_FALSE(rs.leq(b, a));
    } else {
      CHECK(rs.leq(b, a));
      CHECK_FALSE(rs.leq(a, b));
    }
  }
}
