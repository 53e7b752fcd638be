#include "bcspline/characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bcspline/text.hpp"

namespace bcspline {

ClassFunction::ClassFunction(int n) : n_(n), values_(signed_cycle_types(n).size()) {}

ClassFunction::ClassFunction(int n, std::vector<mpq_class> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != signed_cycle_types(n).size()) throw std::invalid_argument("wrong number of class values");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  if (o.n_ != n_) throw std::invalid_argument("class functions of different ranks");
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] += o.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  if (o.n_ != n_) throw std::invalid_argument("class functions of different ranks");
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] -= o.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const mpq_class& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

namespace {

int slot(int k, int n) { return k > 0 ? k - 1 : n - k - 1; }

// Unbalanced i-subsets of [±n] as bitmasks over 2n slots.
std::vector<std::uint32_t> unbalanced_masks(int i, int n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t support = 0; support < (1u << n); ++support) {
    if (__builtin_popcount(support) != i) continue;
    for (std::uint32_t signs = support;; signs = (signs - 1) & support) {
      std::uint32_t mask = 0;
      for (int k = 1; k <= n; ++k)
        if (support >> (k - 1) & 1) mask |= 1u << slot((signs >> (k - 1) & 1) ? -k : k, n);
      out.push_back(mask);
      if (signs == 0) break;
    }
  }
  return out;
}

int count_fixed_sets(const SignedPerm& w, const std::vector<std::uint32_t>& masks) {
  const int n = w.rank();
  std::vector<int> image(2 * n);
  for (int k = -n; k <= n; ++k)
    if (k != 0) image[slot(k, n)] = slot(w(k), n);
  int fixed = 0;
  for (std::uint32_t m : masks) {
    std::uint32_t img = 0;
    for (std::uint32_t rest = m; rest; rest &= rest - 1) img |= 1u << image[__builtin_ctz(rest)];
    if (img == m) ++fixed;
  }
  return fixed;
}

}  // namespace

ClassFunction named_char(CharKind kind, int n, int i) {
  if ((kind == CharKind::h) != (i != 0)) throw std::invalid_argument("an index is given exactly for h_i");
  switch (kind) {
    case CharKind::trivial:
      return class_function_from(n, [](const SignedPerm&) { return mpq_class(1); });
    case CharKind::delta:
      return class_function_from(n, [](const SignedPerm& w) { return mpq_class(neg_set(w).size() % 2 ? -1 : 1); });
    case CharKind::defining:
      return class_function_from(n, [n](const SignedPerm& w) {
        int v = 0;
        for (int k = 1; k <= n; ++k) v += w(k) == k ? 1 : (w(k) == -k ? -1 : 0);
        return mpq_class(v);
      });
    case CharKind::s:
      return class_function_from(n, [n](const SignedPerm& w) {
        int v = 0;
        for (int k = 1; k <= n; ++k) v += std::abs(w(k)) == k;
        return mpq_class(v);
      });
    case CharKind::h: {
      if (i < 1 || i > n) throw std::invalid_argument("h_i needs i in [n]");
      const auto masks = unbalanced_masks(i, n);
      return class_function_from(n, [&](const SignedPerm& w) { return mpq_class(count_fixed_sets(w, masks)); });
    }
  }
  throw std::invalid_argument("unknown character kind");
}

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

Side parse_side(std::string_view text) {
  if (text == "left") return Side::left;
  if (text == "right") return Side::right;
  throw std::invalid_argument("side must be left or right");
}

CharacterExpression formula_char(const TSet& t, Side side) {
  const int n = t.rank();
  if (n < 2) throw std::invalid_argument("the character formula needs n >= 2");
  CharacterExpression e;
  e.n = n;
  if (t.empty()) {
    for (int i = 1; i <= n; ++i) e.I.push_back(i);
    if (side == Side::left)
      e.chi = -1;
    else
      e.one_offset = n;
    return e;
  }
  const auto cls = classify(t);
  e.I = cls.uncovered;
  e.b = static_cast<int>(cls.surrounded.size());
  e.c = cls.c;
  e.d = cls.d;
  if (side == Side::left) {
    e.a = static_cast<int>(cls.shaded.size());
  } else {
    e.chi = 1;
    e.one_offset = static_cast<int>(e.I.size()) + e.b + e.c;
  }
  return e;
}

ClassFunction evaluate(const CharacterExpression& e) {
  const int n = e.n;
  ClassFunction out(n);
  const ClassFunction one = named_char(CharKind::trivial, n);
  out += mpq_class(e.a - e.one_offset) * one;
  std::map<int, int> hs;
  for (int i : e.I) ++hs[i];
  if (e.b) hs[1] += e.b;
  for (const auto& [i, m] : hs) out += mpq_class(m) * named_char(CharKind::h, n, i);
  if (e.c) out += mpq_class(e.c) * named_char(CharKind::s, n);
  if (e.d) out += mpq_class(e.d) * named_char(CharKind::delta, n);
  if (e.chi) out += mpq_class(e.chi) * named_char(CharKind::defining, n);
  return out;
}

long expression_dim(const CharacterExpression& e) {
  auto h_dim = [&](int i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), e.n, i);
    return mpz_class(binom << i).get_si();
  };
  long dim = e.a - e.one_offset + static_cast<long>(e.chi + e.c) * e.n + e.d + e.b * h_dim(1);
  for (int i : e.I) dim += h_dim(i);
  return dim;
}

std::string format_expression(const CharacterExpression& e) {
  std::vector<std::pair<int, std::string>> terms;
  if (e.chi) terms.emplace_back(e.chi, "chi");
  if (e.a) terms.emplace_back(e.a, "1");
  std::map<int, int> hs;
  for (int i : e.I) ++hs[i];
  if (e.b) hs[1] += e.b;
  for (const auto& [i, m] : hs) terms.emplace_back(m, "h" + std::to_string(i));
  if (e.c) terms.emplace_back(e.c, "s");
  if (e.d) terms.emplace_back(e.d, "delta");
  if (e.one_offset) terms.emplace_back(-e.one_offset, "1");
  std::string out;
  for (const auto& [coef, name] : terms) {
    const int mag = std::abs(coef);
    if (out.empty())
      out += coef < 0 ? "-" : "";
    else
      out += coef < 0 ? " - " : " + ";
    out += (mag == 1 ? "" : std::to_string(mag) + "*") + name;
  }
  return out.empty() ? "0" : out;
}

CharacterExpression parse_expression(std::string_view text, int n) {
  CharacterExpression e;
  e.n = n;
  std::string compact;
  for (char ch : text)
    if (ch != ' ') compact += ch;
  if (compact.empty() || compact == "0") return e;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    int sign = 1;
    if (compact[pos] == '+' || compact[pos] == '-') {
      sign = compact[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = compact.find_first_of("+-", pos);
    if (end == std::string::npos) end = compact.size();
    std::string_view term(compact.data() + pos, end - pos);
    pos = end;
    int coef = 1;
    if (auto star = term.find('*'); star != std::string_view::npos) {
      const auto parts = parse_int_list(term.substr(0, star));
      if (parts.size() != 1 || parts[0] <= 0) throw std::invalid_argument("bad coefficient in character expression");
      coef = parts[0];
      term = term.substr(star + 1);
    }
    coef *= sign;
    if (term == "1") {
      if (coef > 0)
        e.a += coef;
      else
        e.one_offset -= coef;
    } else if (term == "chi") {
      e.chi += coef;
    } else if (term == "s" || term == "delta" || (term.size() > 1 && term[0] == 'h')) {
      if (coef < 0) throw std::invalid_argument("negative permutation character term: " + std::string(term));
      if (term == "s") {
        e.c += coef;
      } else if (term == "delta") {
        e.d += coef;
      } else {
        const auto idx = parse_int_list(term.substr(1));
        if (idx.size() != 1 || idx[0] < 1 || idx[0] > n) throw std::invalid_argument("bad h index: " + std::string(term));
        for (int k = 0; k < coef; ++k) e.I.push_back(idx[0]);
      }
    } else {
      throw std::invalid_argument("unknown character term: " + std::string(term));
    }
  }
  std::sort(e.I.begin(), e.I.end());
  return e;
}

Spline dot_action(const SignedPerm& w, const Spline& rho) {
  const int n = rho.rank();
  const auto& g = group_table(n);
  const int wi = g.index(w);
  const int winv = g.inverse(wi);
  Spline out(n);
  for (int v = 0; v < g.size(); ++v) out.set(v, act(w, rho.at(g.multiply(winv, v))));
  return out;
}

mpq_class trace_on(const SplineSpace& space, const SignedPerm& w) {
  const int n = space.n;
  const auto& g = group_table(n);
  const int winv = g.inverse(g.index(w));
  const SignedPerm& wi = g.element(winv);
  mpq_class trace = 0;
  for (int j = 0; j < space.dim(); ++j) {
    const int coord = space.free_coords[j];
    const int v = coord / n, k = coord % n + 1;
    // coefficient of x_k in w(p) is sign(w^{-1}(k)) p_{|w^{-1}(k)|}
    const int src = wi(k);
    const mpq_class& p = space.basis.splines[j].coeff(g.multiply(winv, v), std::abs(src));
    if (src > 0)
      trace += p;
    else
      trace -= p;
  }
  return trace;
}

namespace {

mpq_class quotient_offset(const SignedPerm& w, Side side) {
  if (side == Side::right) return w.rank();
  int v = 0;
  for (int k = 1; k <= w.rank(); ++k) v += w(k) == k ? 1 : (w(k) == -k ? -1 : 0);
  return v;
}

}  // namespace

ClassFunction computed_char(const SplineSpace& space, Side side) {
  return class_function_from(space.n, [&](const SignedPerm& w) -> mpq_class { return trace_on(space, w) - quotient_offset(w, side); });
}

ClassFunction computed_char(const HessenbergSpace& h, Side side) { return computed_char(solve_spline_space(h), side); }

ClassFunction computed_char_via(const BasisBundle& basis, Side side) {
  if (basis.splines.empty()) throw std::invalid_argument("empty basis");
  const int n = basis.splines.front().rank();
  return class_function_from(n, [&](const SignedPerm& w) -> mpq_class {
    mpq_class trace = 0;
    for (int j = 0; j < basis.size(); ++j) trace += expand(dot_action(w, basis.splines[j]), basis)[j];
    return trace - quotient_offset(w, side);
  });
}

}  // namespace bcspline
