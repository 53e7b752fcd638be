// One PASS/FAIL line per acceptance criterion.
// Exit status is 0 when the set of failing criteria is exactly the known set below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "bcspline/suites.hpp"

using namespace bcspline;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// The closed-form descent sets miss elements for type C spaces containing t_n but neither
// t_{n-1} nor t_{n-2}; every criterion that compares the closed form with the spline spaces
// themselves fails on those spaces.
const std::set<int> kKnownFailures = {1, 2, 3, 6};

struct Row {
  const char* tset;
  const char* left;
  const char* right;
  long dim;
};

const Row kRankFour[] = {
    {"{}", "h1 + h2 + h3 + h4 - chi", "h1 + h2 + h3 + h4 - 4*1", 76},
    {"t1", "1 + h3 + h4 + s", "chi + h3 + h4 + s - 3*1", 53},
    {"t2", "1 + h1 + h4 + s", "chi + h1 + h4 + s - 3*1", 29},
    {"t3", "1 + h1 + h2 + s", "chi + h1 + h2 + s - 3*1", 37},
    {"t4", "2*1 + h1 + h2 + delta", "chi + h1 + h2 + delta - 2*1", 35},
    {"t1,t2", "2*1 + h4 + s", "chi + h4 + s - 2*1", 22},
    {"t1,t3", "2*1 + h1 + s", "chi + h1 + s - 2*1", 14},
    {"t1,t4", "3*1 + h1 + delta", "chi + h1 + delta - 1", 12},
    {"t2,t3", "2*1 + h1 + s", "chi + h1 + s - 2*1", 14},
    {"t2,t4", "3*1 + h1 + delta", "chi + h1 + delta - 1", 12},
    {"t3,t4", "2*1 + h1 + h2", "chi + h1 + h2 - 2*1", 34},
    {"t1,t2,t3", "3*1 + s", "chi + s - 1", 7},
    {"t1,t2,t4", "4*1 + delta", "chi + delta", 5},
    {"t1,t3,t4", "3*1 + h1", "chi + h1 - 1", 11},
    {"t2,t3,t4", "3*1 + h1", "chi + h1 - 1", 11},
    {"t1,t2,t3,t4", "4*1", "chi", 4},
};

std::string space_label(const HessenbergSpace& h) {
  return to_string(h.type()) + std::to_string(h.rank()) + " " + format_ideal(h);
}

Outcome from_suites(const std::vector<SuiteResult>& suites) {
  Outcome o;
  long checked = 0, failed = 0;
  std::string first;
  for (const auto& s : suites) {
    checked += s.checked;
    failed += s.failed;
    if (first.empty() && !s.failures.empty()) first = s.name + ": " + s.failures.front();
  }
  o.pass = failed == 0;
  o.detail = std::to_string(checked) + " checks, " + std::to_string(failed) + " failed";
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

template <class F>
std::vector<SuiteResult> per_type_and_rank(int lo, int hi, F&& f) {
  std::vector<SuiteResult> out;
  for (int n = lo; n <= hi; ++n)
    for (LieType t : {LieType::B, LieType::C}) out.push_back(f(t, n));
  return out;
}

Outcome rank_four_table() {
  Outcome o;
  int spaces = 0;
  std::vector<std::string> bad;
  std::vector<HessenbergSpace> all = enumerate_hessenberg(LieType::B, 4);
  for (auto& h : enumerate_hessenberg(LieType::C, 4)) all.push_back(std::move(h));
  for (const auto& row : kRankFour) {
    const TSet t = parse_tset(row.tset, 4);
    const auto left = parse_expression(row.left, 4);
    const auto right = parse_expression(row.right, 4);
    std::vector<std::string> why;
    const auto fl = formula_char(t, Side::left);
    const auto fr = formula_char(t, Side::right);
    if (!(evaluate(fl) == evaluate(left)) || !(evaluate(fr) == evaluate(right)))
      why.push_back("closed form " + format_expression(fl));
    if (expression_dim(left) != row.dim) why.push_back("closed-form dim");
    const auto want_left = evaluate(left);
    const auto want_right = evaluate(right);
    int realized = 0;
    for (const auto& h : all) {
      if (!(t_set(h) == t)) continue;
      ++realized;
      ++spaces;
      const auto l = computed_char(h, Side::left);
      const auto r = computed_char(h, Side::right);
      if (l.dim() != row.dim) why.push_back(space_label(h) + " dim " + l.dim().get_str());
      else if (!(l == want_left)) why.push_back(space_label(h) + " left");
      if (!(r == want_right)) why.push_back(space_label(h) + " right");
    }
    if (realized == 0) why.push_back("not realized");
    if (!why.empty()) bad.push_back(std::string(row.tset) + " (" + why.front() + ")");
  }
  o.pass = bad.empty();
  o.detail = "16 t-sets, " + std::to_string(spaces) + " spaces, " + std::to_string(bad.size()) + " mismatched";
  for (const auto& b : bad) o.detail += "; " + b;
  return o;
}

Outcome rank_eight_formula() {
  Outcome o;
  const TSet t = parse_tset("t2,t5,t6,t8", 8);
  const auto e = formula_char(t, Side::left);
  const auto text = format_expression(e);
  const auto dim = expression_dim(e);
  const auto at_identity = evaluate(e).dim();
  o.pass = text == "5*1 + 2*h1 + h4 + delta" && dim == 1158 && at_identity == 1158;
  o.detail = text + ", dim " + std::to_string(dim) + ", value at identity " + at_identity.get_str();
  return o;
}

Outcome frobenius_checks() {
  Outcome o;
  const auto chi = frobenius_bc(named_char(CharKind::defining, 3));
  const auto want = basis_element(SymBasis::H, Partition({2}), Partition({1}));
  std::vector<SuiteResult> suites;
  for (int n = 2; n <= 4; ++n) suites.push_back(suite_frobenius(n));
  o = from_suites(suites);
  const bool chi_ok = p_to_h(chi) == want;
  o.pass = o.pass && chi_ok;
  o.detail = "chi at n=3 is " + format_symfunc(p_to_h(chi)) + "; " + o.detail;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "rank-4 characters and dimensions", 60, rank_four_table},
      {2, "descent oracle equals closed form", 30,
       [] { return from_suites(per_type_and_rank(2, 4, [](LieType t, int n) { return suite_descents(t, n); })); }},
      {3, "dimension law", 0,
       [] { return from_suites(per_type_and_rank(2, 4, [](LieType t, int n) { return suite_dimension(t, n); })); }},
      {4, "relation identities", 0,
       [] { return from_suites({suite_relations(2), suite_relations(3), suite_relations(4)}); }},
      {5, "dot-action rules", 0,
       [] { return from_suites({suite_dot_action(2), suite_dot_action(3), suite_dot_action(4, 1000, 1)}); }},
      {6, "characters equal closed form", 0,
       [] { return from_suites(per_type_and_rank(2, 4, [](LieType t, int n) { return suite_characters(t, n); })); }},
      {7, "rank-8 closed form", 1, rank_eight_formula},
      {8, "Frobenius images", 0, frobenius_checks},
      {9, "h-positivity", 0,
       [] { return from_suites(per_type_and_rank(2, 4, [](LieType t, int n) { return suite_positivity(t, n); })); }},
      {10, "group and root properties", 0,
       [] {
         std::vector<SuiteResult> s;
         for (int n = 2; n <= 4; ++n) {
           s.push_back(suite_group_laws(n));
           s.push_back(suite_lengths(n));
           s.push_back(suite_roots(LieType::B, n));
           s.push_back(suite_roots(LieType::C, n));
         }
         return from_suites(s);
       }},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs > c.limit) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit)) + " s budget";
    }
    if (!o.pass) failed.insert(c.id);
    std::printf("%s %2d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
  }
  std::printf("%zu of %zu criteria passed\n", criteria.size() - failed.size(), criteria.size());
  if (failed != kKnownFailures) {
    std::printf("failing criteria differ from the known set\n");
    return 1;
  }
  std::printf("failing criteria match the known set\n");
  return 0;
}
