#include <doctest.h>

#include <map>
#include <random>

#include "bcspline/characters.hpp"

using namespace bcspline;

namespace {

SignedPerm W(std::vector<int> w) { return SignedPerm(std::move(w)); }
LinearPoly X(int k, int n) { return LinearPoly::var(k, n); }

Spline example_spline() {
  const int n = 2;
  const std::map<std::vector<int>, LinearPoly> values = {
      {{1, 2}, LinearPoly(n)},        {{2, 1}, X(1, n) - X(2, n)}, {{2, -1}, X(-1, n) - X(2, n)},
      {{-1, 2}, LinearPoly(n)},       {{1, -2}, LinearPoly(n)},    {{-2, 1}, LinearPoly(n)},
      {{-2, -1}, X(1, n)},            {{-1, -2}, X(2, n)}};
  Spline s(n);
  const auto& g = group_table(n);
  for (const auto& [win, p] : values) s.set(g.index(W(win)), p);
  return s;
}

int class_of(const SignedCycleType& t, int n) {
  const auto classes = conjugacy_classes(n);
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].type == t) return static_cast<int>(c);
  FAIL("class not found");
  return -1;
}

// Coefficient of q^i in the product over positive cycles of (1 + 2 q^r).
long h_by_cycles(const SignedCycleType& t, int i) {
  std::vector<long> poly(t.rank() + 1, 0);
  poly[0] = 1;
  for (int r : t.lambda.parts())
    for (int d = t.rank(); d >= r; --d) poly[d] += 2 * poly[d - r];
  return poly[i];
}

bool only_tn_near_end(const TSet& t) {
  const int n = t.rank();
  return n >= 3 && t.has(n) && !t.has(n - 1) && !t.has(n - 2);
}

std::vector<std::vector<int>> signed_subsets(int i, int n) { return unbalanced_sets(i, n); }

}  // namespace

TEST_CASE("named characters") {
  const auto chi3 = named_char(CharKind::defining, 3);
  CHECK(chi3[class_of({Partition({1, 1, 1}), Partition()}, 3)] == 3);
  CHECK(chi3[class_of({Partition(), Partition({1, 1, 1})}, 3)] == -3);
  CHECK(named_char(CharKind::h, 4, 2).dim() == 24);
  for (int n = 1; n <= 5; ++n) {
    CHECK(named_char(CharKind::h, n, 1) - named_char(CharKind::defining, n) == named_char(CharKind::s, n));
    const auto one = named_char(CharKind::trivial, n);
    for (const auto& v : one.values()) CHECK(v == 1);
  }
  CHECK_THROWS_AS(named_char(CharKind::h, 3), std::invalid_argument);
  CHECK_THROWS_AS(named_char(CharKind::s, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(named_char(CharKind::h, 3, 4), std::invalid_argument);
}

TEST_CASE("h characters agree with the cycle product") {
  for (int n = 1; n <= 6; ++n) {
    const auto classes = conjugacy_classes(n);
    for (int i = 1; i <= n; ++i) {
      const auto h = named_char(CharKind::h, n, i);
      for (std::size_t c = 0; c < classes.size(); ++c) CHECK(h[c] == h_by_cycles(classes[c].type, i));
    }
  }
}

TEST_CASE("delta and the defining character by definition") {
  for (int n = 1; n <= 4; ++n) {
    const auto& g = group_table(n);
    const auto delta = named_char(CharKind::delta, n);
    const auto chi = named_char(CharKind::defining, n);
    for (int idx = 0; idx < g.size(); ++idx) {
      const auto& w = g.element(idx);
      int fixed = 0, flipped = 0;
      for (int k = 1; k <= n; ++k) {
        fixed += w(k) == k;
        flipped += w(k) == -k;
      }
      CHECK(chi[g.class_of(idx)] == fixed - flipped);
      CHECK(delta[g.class_of(idx)] == (neg_set(w).size() % 2 ? -1 : 1));
    }
  }
}

TEST_CASE("dot action on the example spline") {
  const auto rho = example_spline();
  const auto out = dot_action(W({-2, -1}), rho);
  CHECK(out.at(W({1, 2})) == X(-2, 2));
  CHECK(out.at(W({-1, -2})) == X(1, 2) - X(2, 2));
  CHECK(dot_action(SignedPerm::identity(2), rho) == rho);
  CHECK(is_spline(out, HessenbergSpace::delta(LieType::B, 2)));
}

TEST_CASE("dot action is a group action and preserves splines") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 4; ++n) {
    const auto& g = group_table(n);
    std::uniform_int_distribution<int> pick(0, g.size() - 1);
    const auto basis = permutohedral_basis(n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto& rho = basis.splines[trial % basis.size()];
      const int u = pick(rng), v = pick(rng);
      CHECK(dot_action(g.element(g.multiply(u, v)), rho) ==
            dot_action(g.element(u), dot_action(g.element(v), rho)));
    }
  }
  for (LieType t : {LieType::B, LieType::C})
    for (int n = 2; n <= 3; ++n)
      for (const auto& h : enumerate_hessenberg(t, n)) {
        const auto space = solve_spline_space(h);
        for (const auto& w : group_table(n).elements())
          for (const auto& rho : space.basis.splines) REQUIRE(is_spline(dot_action(w, rho), h));
      }
  std::mt19937 rng4(11);
  const auto& g4 = group_table(4);
  std::uniform_int_distribution<int> pick4(0, g4.size() - 1);
  for (LieType t : {LieType::B, LieType::C}) {
    const auto spaces = enumerate_hessenberg(t, 4);
    for (int trial = 0; trial < 40; ++trial) {
      const auto& h = spaces[trial % spaces.size()];
      const auto space = solve_spline_space(h);
      const auto& rho = space.basis.splines[trial % space.dim()];
      CHECK(is_spline(dot_action(g4.element(pick4(rng4)), rho), h));
    }
  }
}

TEST_CASE("families transform by relabelling") {
  for (int n = 2; n <= 3; ++n) {
    const auto& g = group_table(n);
    for (const auto& w : g.elements()) {
      for (int i = 1; i <= n; ++i) {
        CHECK(dot_action(w, t_spline(i, n)) == t_spline(w(i), n));
        CHECK(dot_action(w, r_spline(i, n)) == r_spline(i, n));
        CHECK(dot_action(w, g_spline(i, n)) == g_spline(w(i), n));
        for (const auto& A : signed_subsets(i, n)) {
          std::vector<int> wA;
          for (int a : A) wA.push_back(w(a));
          CHECK(dot_action(w, f_spline(i, A, n)) == f_spline(i, wA, n));
        }
      }
      for (int i = 1; i < n; ++i)
        for (int k = -n; k <= n; ++k)
          if (k != 0) CHECK(dot_action(w, y_spline(i, k, n)) == y_spline(i, w(k), n));
    }
  }
}

TEST_CASE("h spline transforms by delta") {
  for (int n = 2; n <= 4; ++n) {
    const auto h = h_spline(n);
    const auto v = r_spline(n, n) - mpq_class(2) * h;
    for (const auto& w : group_table(n).elements()) {
      const bool odd = neg_set(w).size() % 2 == 1;
      CHECK(dot_action(w, h) == (odd ? r_spline(n, n) - h : h));
      CHECK(dot_action(w, v) == (odd ? mpq_class(-1) * v : v));
    }
  }
}

TEST_CASE("formula characters") {
  auto left = [](int n, std::vector<int> idx) {
    return format_expression(formula_char(TSet::from_indices(n, idx), Side::left));
  };
  auto right = [](int n, std::vector<int> idx) {
    return format_expression(formula_char(TSet::from_indices(n, idx), Side::right));
  };
  CHECK(left(4, {2}) == "1 + h1 + h4 + s");
  CHECK(left(4, {1, 4}) == "3*1 + h1 + delta");
  CHECK(left(4, {4}) == "2*1 + h1 + h2 + delta");
  CHECK(right(4, {4}) == "chi + h1 + h2 + delta - 2*1");
  CHECK(left(4, {}) == "-chi + h1 + h2 + h3 + h4");
  CHECK(right(4, {}) == "h1 + h2 + h3 + h4 - 4*1");
  CHECK(left(4, {1, 2, 3, 4}) == "4*1");
  CHECK(right(4, {1, 2, 3, 4}) == "chi");
  CHECK(right(4, {1, 2, 4}) == "chi + delta");

  const auto e8 = formula_char(TSet::from_indices(8, {2, 5, 6, 8}), Side::left);
  CHECK(format_expression(e8) == "5*1 + 2*h1 + h4 + delta");
  CHECK(e8.a == 5);
  CHECK(e8.b == 1);
  CHECK(e8.I == std::vector<int>{1, 4});
  CHECK(e8.d == 1);
  CHECK(expression_dim(e8) == 1158);
  CHECK(evaluate(e8).dim() == 1158);
  CHECK_THROWS_AS(formula_char(TSet::full(1), Side::left), std::invalid_argument);
}

TEST_CASE("evaluate") {
  CharacterExpression one{.n = 4, .a = 1};
  const auto values = evaluate(one);
  for (const auto& v : values.values()) CHECK(v == 1);
  CHECK(evaluate(parse_expression("h1 + h2 + h3 + h4 - chi", 4)).dim() == 76);
  CHECK(evaluate(parse_expression("4*1 + delta", 4)).dim() == 5);
  for (int n = 2; n <= 5; ++n)
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
      for (Side s : {Side::left, Side::right}) {
        const auto e = formula_char(TSet(n, bits), s);
        CHECK(evaluate(e).dim() == expression_dim(e));
      }
}

TEST_CASE("expression text round trip") {
  for (int n = 2; n <= 6; ++n)
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
      for (Side s : {Side::left, Side::right}) {
        const auto e = formula_char(TSet(n, bits), s);
        const auto text = format_expression(e);
        const auto back = parse_expression(text, n);
        CHECK(evaluate(back) == evaluate(e));
        CHECK(format_expression(back) == text);
      }
  CHECK(format_expression(parse_expression("0", 3)) == "0");
  CHECK_THROWS_AS(parse_expression("h5", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_expression("1 - h2", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_expression("q", 4), std::invalid_argument);
  CHECK(parse_side("left") == Side::left);
  CHECK_THROWS_AS(parse_side("up"), std::invalid_argument);
}

TEST_CASE("computed characters against the closed form") {
  int affected = 0;
  for (LieType t : {LieType::B, LieType::C})
    for (int n = 2; n <= 4; ++n)
      for (const auto& h : enumerate_hessenberg(t, n)) {
        const TSet ts = t_set(h);
        const auto space = solve_spline_space(h);
        for (Side s : {Side::left, Side::right}) {
          const auto computed = computed_char(space, s);
          CHECK(computed.dim() == dim_degree_one(h) - n);
          const bool equal = computed == evaluate(formula_char(ts, s));
          if (only_tn_near_end(ts)) {
            ++affected;
            CHECK_FALSE(equal);
          } else {
            CHECK(equal);
          }
        }
      }
  CHECK(affected > 0);
}

TEST_CASE("full space characters") {
  const auto h = HessenbergSpace::full(LieType::C, 4);
  CHECK(computed_char(h, Side::left) == mpq_class(4) * named_char(CharKind::trivial, 4));
  CHECK(computed_char(h, Side::right) == named_char(CharKind::defining, 4));
}

TEST_CASE("traces are class functions") {
  for (LieType t : {LieType::B, LieType::C})
    for (int n = 2; n <= 3; ++n) {
      const auto& g = group_table(n);
      for (const auto& h : enumerate_hessenberg(t, n)) {
        const auto space = solve_spline_space(h);
        std::map<int, mpq_class> seen;
        for (int idx = 0; idx < g.size(); ++idx) {
          const mpq_class tr = trace_on(space, g.element(idx));
          auto [it, fresh] = seen.emplace(g.class_of(idx), tr);
          if (!fresh) CHECK(it->second == tr);
        }
      }
    }
}

TEST_CASE("characters through other bases") {
  for (LieType t : {LieType::B, LieType::C})
    for (int n = 2; n <= 3; ++n)
      for (const auto& h : enumerate_hessenberg(t, n)) {
        const TSet ts = t_set(h);
        if (only_tn_near_end(ts)) continue;
        const auto basis = ts.empty() ? permutohedral_basis(n) : left_basis(h);
        for (Side s : {Side::left, Side::right}) CHECK(computed_char_via(basis, s) == computed_char(h, s));
        if (!ts.empty()) CHECK(computed_char_via(right_basis(h), Side::right) == computed_char(h, Side::right));
      }
}
