#include "bcspline/spline_space.hpp"

#include "bcspline/text.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bcspline {

// ---- LinearPoly -------------------------------------------------------------

LinearPoly LinearPoly::var(int k, int n) {
  if (k == 0 || k > n || k < -n) throw std::invalid_argument("variable index out of range");
  LinearPoly p(n);
  p.coeff(std::abs(k)) = k > 0 ? 1 : -1;
  return p;
}

LinearPoly LinearPoly::from_evector(const EVector& v) {
  LinearPoly p(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) p.coeffs_[i] = v[i];
  return p;
}

bool LinearPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

LinearPoly& LinearPoly::operator+=(const LinearPoly& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

LinearPoly& LinearPoly::operator-=(const LinearPoly& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

LinearPoly& LinearPoly::operator*=(const mpq_class& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LinearPoly act(const SignedPerm& w, const LinearPoly& p) {
  const int n = p.rank();
  LinearPoly out(n);
  for (int i = 1; i <= n; ++i) {
    const int j = w(i);
    if (j > 0)
      out.coeff(j) += p.coeff(i);
    else
      out.coeff(-j) -= p.coeff(i);
  }
  return out;
}

bool proportional(const LinearPoly& p, const LinearPoly& l) {
  const int n = l.rank();
  int a = 1;
  while (a <= n && sgn(l.coeff(a)) == 0) ++a;
  if (a > n) return p.is_zero();
  for (int k = 1; k <= n; ++k)
    if (p.coeff(k) * l.coeff(a) != p.coeff(a) * l.coeff(k)) return false;
  return true;
}

std::string format_poly(const LinearPoly& p) {
  std::string out;
  for (int i = 1; i <= p.rank(); ++i) {
    const mpq_class& c = p.coeff(i);
    if (sgn(c) == 0) continue;
    const mpq_class mag = abs(c);
    if (out.empty())
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    out += mag.get_str() + "*x" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// ---- Spline -----------------------------------------------------------------

Spline::Spline(int n) : n_(n), data_(static_cast<std::size_t>(n) * group_table(n).size()) {}

LinearPoly Spline::at(int idx) const {
  return LinearPoly(std::vector<mpq_class>(data_.begin() + idx * n_, data_.begin() + (idx + 1) * n_));
}

LinearPoly Spline::at(const SignedPerm& w) const { return at(group_table(n_).index(w)); }

void Spline::set(int idx, const LinearPoly& p) {
  for (int k = 1; k <= n_; ++k) coeff(idx, k) = p.coeff(k);
}

bool Spline::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

std::vector<int> Spline::support() const {
  std::vector<int> out;
  for (int idx = 0; idx < size(); ++idx)
    for (int k = 1; k <= n_; ++k)
      if (sgn(coeff(idx, k)) != 0) {
        out.push_back(idx);
        break;
      }
  return out;
}

Spline& Spline::operator+=(const Spline& o) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Spline& Spline::operator-=(const Spline& o) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Spline& Spline::operator*=(const mpq_class& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

// ---- labels and the spline predicate ----------------------------------------

LinearPoly edge_label(const SignedPerm& w, const Root& alpha) { return LinearPoly::from_evector(act(w, alpha)); }

LinearPoly edge_label_cases(const SignedPerm& w, const SignedPerm& t) {
  const int n = w.rank();
  int p = 1;
  while (p <= n && t(p) == p) ++p;
  if (p > n) throw std::invalid_argument("not a transposition");
  const int q = t(p);
  if (q == -p) return LinearPoly::var(w(p), n);
  return LinearPoly::var(w(p), n) - LinearPoly::var(w(q), n);
}

namespace {

// Group index of each root's reflection.
std::vector<int> reflection_indices(LieType type, int n) {
  const auto& g = group_table(n);
  const auto& rs = root_system(type, n);
  std::vector<int> out(rs.size());
  for (int r = 0; r < rs.size(); ++r) out[r] = g.index(rs.reflection(r));
  return out;
}

template <class F>
Spline build(int n, F&& value) {
  const auto& g = group_table(n);
  Spline s(n);
  for (int idx = 0; idx < g.size(); ++idx) s.set(idx, value(g.element(idx)));
  return s;
}

}  // namespace

namespace {

struct Edge {
  int w, u, root;
  EVector label;
  int lead;  // first nonzero slot of label
};

const std::vector<Edge>& edges_of(const HessenbergSpace& h) {
  static std::map<std::tuple<int, int, std::uint64_t>, std::unique_ptr<std::vector<Edge>>> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& slot = cache[{static_cast<int>(h.type()), h.rank(), h.mask()}];
  if (!slot) {
    const int n = h.rank();
    const auto& g = group_table(n);
    const auto& rs = h.system();
    const auto refl = reflection_indices(h.type(), n);
    auto out = std::make_unique<std::vector<Edge>>();
    for (int idx = 0; idx < g.size(); ++idx)
      for (int r = 0; r < rs.size(); ++r) {
        if (!h.contains(r)) continue;
        const int other = g.multiply(idx, refl[r]);
        if (other < idx) continue;
        EVector l = act(g.element(idx), rs.evector(r));
        int a = 0;
        while (l[a] == 0) ++a;
        out->push_back({idx, other, r, std::move(l), a});
      }
    slot = std::move(out);
  }
  return *slot;
}

}  // namespace

std::optional<EdgeViolation> find_violation(const Spline& rho, const HessenbergSpace& h) {
  const int n = h.rank();
  if (rho.rank() != n) throw std::invalid_argument("spline and Hessenberg space have different ranks");
  const auto& data = rho.data();
  mpq_class da, dk;
  for (const auto& e : edges_of(h)) {
    const int bw = e.w * n, bu = e.u * n;
    bool same = true;
    for (int k = 0; k < n && same; ++k) same = data[bw + k] == data[bu + k];
    if (same) continue;
    da = data[bw + e.lead] - data[bu + e.lead];
    for (int k = 0; k < n; ++k) {
      if (k == e.lead) continue;
      dk = data[bw + k] - data[bu + k];
      if (dk * e.label[e.lead] != da * e.label[k]) return EdgeViolation{e.w, e.root};
    }
  }
  return std::nullopt;
}

bool is_spline(const Spline& rho, const HessenbergSpace& h) { return !find_violation(rho, h).has_value(); }

// ---- families ---------------------------------------------------------------

std::vector<std::vector<int>> unbalanced_sets(int i, int n) {
  std::vector<std::vector<int>> out;
  if (i < 0 || i > n) return out;
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(chosen.size()) == i) {
      for (int signs = 0; signs < (1 << i); ++signs) {
        std::vector<int> a(chosen);
        for (int b = 0; b < i; ++b)
          if (signs >> b & 1) a[b] = -a[b];
        std::sort(a.begin(), a.end());
        out.push_back(std::move(a));
      }
      return;
    }
    for (int k = next; k <= n; ++k) {
      chosen.push_back(k);
      rec(k + 1);
      chosen.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

Spline t_spline(int i, int n) {
  const LinearPoly x = LinearPoly::var(i, n);
  return build(n, [&](const SignedPerm&) { return x; });
}

Spline r_spline(int i, int n) {
  return build(n, [&](const SignedPerm& w) { return LinearPoly::var(w(i), n); });
}

Spline f_spline(int i, const std::vector<int>& A, int n) {
  if (static_cast<int>(A.size()) != i) throw std::invalid_argument("f-spline needs |A| = i");
  std::vector<int> target(A);
  std::sort(target.begin(), target.end());
  return build(n, [&](const SignedPerm& w) {
    std::vector<int> image(w.window().begin(), w.window().begin() + i);
    std::sort(image.begin(), image.end());
    if (image != target) return LinearPoly(n);
    if (i == n) return LinearPoly::var(w(n), n);
    return LinearPoly::var(w(i), n) - LinearPoly::var(w(i + 1), n);
  });
}

Spline y_spline(int i, int k, int n) {
  if (i < 1 || i > n - 1 || k == 0 || std::abs(k) > n) throw std::invalid_argument("y-spline parameters out of range");
  return build(n, [&](const SignedPerm& w) {
    for (int j = 1; j <= i; ++j)
      if (w(j) == k) return LinearPoly::var(k, n) - LinearPoly::var(w(i + 1), n);
    return LinearPoly(n);
  });
}

Spline g_spline(int i, int n) {
  if (i == 0 || std::abs(i) > n) throw std::invalid_argument("g-spline index out of range");
  return build(n, [&](const SignedPerm& w) {
    for (int j = 1; j <= n; ++j)
      if (w(j) == -i) return LinearPoly::var(i, n);
    return LinearPoly(n);
  });
}

Spline h_spline(int n) {
  if (n < 2) throw std::invalid_argument("h-spline needs n >= 2");
  return build(n, [&](const SignedPerm& w) {
    if (neg_set(w).size() % 2 == 1) return LinearPoly::var(w(n), n);
    return LinearPoly(n);
  });
}

bool f_hypothesis(const TSet& t, int i) { return classify(t).is_uncovered(i); }

bool y_hypothesis(const TSet& t, int i) {
  const int n = t.rank();
  if (i >= 1 && i <= n - 2) return !t.has(i);
  if (i == n - 1) return !t.has(n - 1) && !t.has(n);
  return false;
}

bool g_hypothesis(const TSet& t) { return !t.has(t.rank()); }
bool h_hypothesis(const TSet& t) { return !t.has(t.rank() - 1); }

// ---- relations --------------------------------------------------------------

namespace {

struct FamilyCache {
  int n;
  // f[i][m] for the m-th unbalanced set of size i
  std::vector<std::vector<Spline>> f;
  std::vector<std::vector<std::vector<int>>> sets;

  explicit FamilyCache(int n_) : n(n_), f(n_ + 1), sets(n_ + 1) {
    for (int i = 1; i <= n; ++i) {
      sets[i] = unbalanced_sets(i, n);
      for (const auto& a : sets[i]) f[i].push_back(f_spline(i, a, n));
    }
  }

  Spline sum_f(int i) const {
    Spline s(n);
    for (const auto& x : f[i]) s += x;
    return s;
  }

  Spline sum_f_containing(int i, int k) const {
    Spline s(n);
    for (std::size_t m = 0; m < f[i].size(); ++m)
      if (std::find(sets[i][m].begin(), sets[i][m].end(), k) != sets[i][m].end()) s += f[i][m];
    return s;
  }
};

std::vector<int> signed_range(int n) {
  std::vector<int> out;
  for (int k = -n; k <= n; ++k)
    if (k != 0) out.push_back(k);
  return out;
}

Spline y_or_zero(int p, int k, int n) { return p == 0 ? Spline(n) : y_spline(p, k, n); }

}  // namespace

bool relation_p4(int p, int k, int n) {
  if (p < 0 || p >= n) throw std::invalid_argument("relation needs 0 <= p < n");
  FamilyCache fc(n);
  Spline lhs = y_or_zero(p, k, n);
  for (int i = p + 1; i <= n; ++i) lhs += fc.sum_f_containing(i, k);
  lhs += g_spline(-k, n);
  return lhs.is_zero();
}

RelationReport check_relations(int n) {
  RelationReport rep;
  FamilyCache fc(n);
  std::vector<Spline> r(n + 1), t(n + 1);
  for (int i = 1; i <= n; ++i) {
    r[i] = r_spline(i, n);
    t[i] = t_spline(i, n);
  }
  auto expect = [&](bool ok, const std::string& what) {
    ++rep.checked;
    if (!ok) rep.failures.push_back(what);
  };

  for (int i = 1; i <= n; ++i) {
    const Spline rhs = i < n ? r[i] - r[i + 1] : r[n];
    expect(fc.sum_f(i) == rhs, "(1) i=" + std::to_string(i));
  }
  for (int i = 1; i <= n - 1; ++i) {
    Spline lhs(n), rhs(n);
    for (int k : signed_range(n)) lhs += y_spline(i, k, n);
    for (int j = 1; j <= i; ++j) rhs += r[j];
    rhs -= mpq_class(i) * r[i + 1];
    expect(lhs == rhs, "(2) i=" + std::to_string(i));
  }
  for (int k : signed_range(n)) {
    for (int p = 0; p < n; ++p) {
      Spline acc = y_or_zero(p, k, n);
      for (int m = p + 1; m <= n - 1; ++m) {
        acc += fc.sum_f_containing(m, k);
        expect(acc == y_spline(m, k, n),
               "(3) p=" + std::to_string(p) + " m=" + std::to_string(m) + " k=" + std::to_string(k));
      }
      acc += fc.sum_f_containing(n, k);
      Spline neg_g(n);
      neg_g -= g_spline(-k, n);
      expect(acc == neg_g, "(4) p=" + std::to_string(p) + " k=" + std::to_string(k));
    }
  }
  Spline twice_g(n), rhs(n);
  for (int i = 1; i <= n; ++i) {
    expect(g_spline(i, n) - g_spline(-i, n) == t[i], "(5) i=" + std::to_string(i));
    twice_g += mpq_class(2) * g_spline(i, n);
    rhs += t[i] - r[i];
  }
  expect(twice_g == rhs, "(5) sum");
  return rep;
}

// ---- bases ------------------------------------------------------------------

std::string to_string(BasisRole r) {
  switch (r) {
    case BasisRole::generating: return "generating";
    case BasisRole::left: return "left";
    case BasisRole::right: return "right";
    case BasisRole::permutohedral: return "permutohedral";
    case BasisRole::direct: return "direct";
  }
  return "?";
}


namespace {

std::string set_tag(const std::vector<int>& a) { return "{" + join_ints(a, ",") + "}"; }

std::string f_tag(int i, const std::vector<int>& a) { return "f" + std::to_string(i) + set_tag(a); }
std::string y_tag(int i, int k) { return "y" + std::to_string(i) + "," + std::to_string(k); }

std::vector<int> signed_succ_range(int n) {
  std::vector<int> out = signed_range(n);
  out.pop_back();
  return out;
}

int signed_succ(int k) { return k == -1 ? 1 : k + 1; }

void add(BasisBundle& b, Spline s, std::string tag) {
  b.splines.push_back(std::move(s));
  b.tags.push_back(std::move(tag));
}

void add_t(BasisBundle& b, int n) {
  for (int i = 1; i <= n; ++i) add(b, t_spline(i, n), "t" + std::to_string(i));
}

void add_r(BasisBundle& b, int n, const std::vector<int>& which) {
  for (int i : which) add(b, r_spline(i, n), "r" + std::to_string(i));
}

void add_f(BasisBundle& b, int n, const std::vector<int>& which) {
  for (int i : which)
    for (const auto& a : unbalanced_sets(i, n)) add(b, f_spline(i, a, n), f_tag(i, a));
}

void add_y(BasisBundle& b, int n, const std::vector<int>& which) {
  for (int i : which)
    for (int k : signed_range(n)) add(b, y_spline(i, k, n), y_tag(i, k));
}

std::vector<int> iota_vec(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

void require_not_delta(const TSet& t) {
  if (t.empty()) throw std::invalid_argument("this basis needs H strictly larger than Delta");
}

}  // namespace

BasisBundle generating_set(const HessenbergSpace& h) {
  const int n = h.rank();
  const TSet t = t_set(h);
  const auto cls = classify(t);
  BasisBundle b;
  b.role = BasisRole::generating;
  add_t(b, n);
  add_r(b, n, iota_vec(n));
  add_f(b, n, cls.uncovered);
  add_y(b, n, cls.surrounded);
  if (!t.has(n)) {
    for (int i = 1; i <= n; ++i) add(b, g_spline(i, n), "g" + std::to_string(i));
  } else if (cls.d == 1) {
    add(b, h_spline(n), "h");
  }
  return b;
}

BasisBundle left_basis(const HessenbergSpace& h) {
  const int n = h.rank();
  const TSet t = t_set(h);
  require_not_delta(t);
  const auto cls = classify(t);
  BasisBundle b;
  b.role = BasisRole::left;
  add_t(b, n);
  add_r(b, n, cls.shaded);
  add_f(b, n, cls.uncovered);
  add_y(b, n, cls.surrounded);
  if (!t.has(n)) {
    for (int i = 1; i <= n; ++i) add(b, g_spline(i, n), "g" + std::to_string(i));
  } else if (cls.d == 1) {
    add(b, h_spline(n), "h");
  }
  return b;
}

BasisBundle right_basis(const HessenbergSpace& h) {
  const int n = h.rank();
  const TSet t = t_set(h);
  require_not_delta(t);
  const auto cls = classify(t);
  BasisBundle b;
  b.role = BasisRole::right;
  add_t(b, n);
  add_r(b, n, iota_vec(n));
  for (int i : cls.uncovered) {
    const auto sets = unbalanced_sets(i, n);
    for (std::size_t m = 0; m + 1 < sets.size(); ++m)
      add(b, f_spline(i, sets[m], n) - f_spline(i, sets[m + 1], n), f_tag(i, sets[m]) + "-" + f_tag(i, sets[m + 1]));
  }
  for (int i : cls.surrounded)
    for (int k : signed_succ_range(n))
      add(b, y_spline(i, k, n) - y_spline(i, signed_succ(k), n), y_tag(i, k) + "-" + y_tag(i, signed_succ(k)));
  if (!t.has(n)) {
    for (int i = 1; i < n; ++i)
      add(b, g_spline(i, n) - g_spline(i + 1, n), "g" + std::to_string(i) + "-g" + std::to_string(i + 1));
  } else if (cls.d == 1) {
    add(b, h_spline(n), "h");
  }
  return b;
}

BasisBundle permutohedral_basis(int n) {
  BasisBundle b;
  b.role = BasisRole::permutohedral;
  add_f(b, n, iota_vec(n));
  return b;
}

// ---- exact linear algebra ---------------------------------------------------

namespace {

class UnionFind {
public:
  explicit UnionFind(int size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<int> parent_;
};

// Sparse row sorted by variable; the pivot is the largest variable.
using SparseRow = std::vector<std::pair<int, mpq_class>>;

SparseRow axpy(const SparseRow& a, const mpq_class& c, const SparseRow& b) {
  // a - c*b
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -c * b[j].second);
      ++j;
    } else {
      mpq_class v = a[i].second - c * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Fraction-free row echelon over Z with content removal.
class IntEchelon {
public:
  explicit IntEchelon(int width) : width_(width) {}

  bool insert(const std::vector<mpq_class>& values) {
    std::vector<mpz_class> v(width_);
    mpz_class den = 1;
    for (const auto& q : values)
      if (sgn(q) != 0) den = lcm(den, mpz_class(q.get_den()));
    for (int c = 0; c < width_; ++c)
      if (sgn(values[c]) != 0) v[c] = values[c].get_num() * (den / values[c].get_den());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int p = pivots_[r];
      if (sgn(v[p]) == 0) continue;
      const mpz_class a = rows_[r][p];
      const mpz_class b = v[p];
      for (int c = 0; c < width_; ++c)
        if (sgn(rows_[r][c]) != 0 || sgn(v[c]) != 0) v[c] = a * v[c] - b * rows_[r][c];
      normalize(v);
    }
    int p = 0;
    while (p < width_ && sgn(v[p]) == 0) ++p;
    if (p == width_) return false;
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

private:
  static void normalize(std::vector<mpz_class>& v) {
    mpz_class g = 0;
    for (const auto& x : v)
      if (sgn(x) != 0) g = gcd(g, x);
    if (g > 1)
      for (auto& x : v)
        if (sgn(x) != 0) x /= g;
  }

  int width_;
  std::vector<std::vector<mpz_class>> rows_;
  std::vector<int> pivots_;
};

}  // namespace

std::vector<mpq_class> SplineSpace::coordinates(const Spline& rho) const {
  std::vector<mpq_class> out;
  out.reserve(free_coords.size());
  for (int c : free_coords) out.push_back(rho.data()[c]);
  return out;
}

SplineSpace solve_spline_space(const HessenbergSpace& h) {
  const int n = h.rank();
  const int total = n * group_table(n).size();

  struct Condition {
    int w, u, a, k;
    int la, lk;
  };
  UnionFind uf(total);
  std::vector<Condition> conditions;
  for (const auto& e : edges_of(h))
    for (int k = 0; k < n; ++k) {
      if (e.label[k] == 0)
        uf.unite(e.w * n + k, e.u * n + k);
      else if (k != e.lead)
        conditions.push_back({e.w, e.u, e.lead, k, e.label[e.lead], e.label[k]});
    }

  std::vector<int> var_of(total, -1), rep_of;
  for (int c = 0; c < total; ++c) {
    const int root = uf.find(c);
    if (var_of[root] < 0) {
      var_of[root] = static_cast<int>(rep_of.size());
      rep_of.push_back(c);
    }
    var_of[c] = var_of[root];
  }
  const int vars = static_cast<int>(rep_of.size());

  // (x_w - x_u)_k * l_a - (x_w - x_u)_a * l_k = 0
  std::map<int, SparseRow> pivots;
  for (const auto& c : conditions) {
    std::map<int, mpq_class> terms;
    terms[var_of[c.w * n + c.k]] += c.la;
    terms[var_of[c.u * n + c.k]] -= c.la;
    terms[var_of[c.w * n + c.a]] -= c.lk;
    terms[var_of[c.u * n + c.a]] += c.lk;
    SparseRow row;
    for (auto& [v, q] : terms)
      if (sgn(q) != 0) row.emplace_back(v, q);
    while (!row.empty()) {
      const int top = row.back().first;
      auto it = pivots.find(top);
      if (it == pivots.end()) {
        const mpq_class lead = row.back().second;
        for (auto& [v, q] : row) q /= lead;
        pivots.emplace(top, std::move(row));
        break;
      }
      row = axpy(row, row.back().second, it->second);
    }
  }

  SplineSpace space;
  space.n = n;
  space.basis.role = BasisRole::direct;
  for (int f = 0; f < vars; ++f) {
    if (pivots.count(f)) continue;
    std::vector<mpq_class> x(vars);
    x[f] = 1;
    for (const auto& [p, row] : pivots) {
      if (p < f) continue;
      mpq_class v = 0;
      for (const auto& [var, q] : row)
        if (var != p) v -= q * x[var];
      x[p] = v;
    }
    Spline s(n);
    for (int c = 0; c < total; ++c) s.coeff(c / n, c % n + 1) = x[var_of[c]];
    space.free_coords.push_back(rep_of[f]);
    space.basis.tags.push_back("free" + std::to_string(space.free_coords.size()));
    space.basis.splines.push_back(std::move(s));
  }
  return space;
}

int rank(const std::vector<Spline>& splines) {
  if (splines.empty()) return 0;
  IntEchelon e(static_cast<int>(splines.front().data().size()));
  for (const auto& s : splines) e.insert(s.data());
  return e.rank();
}

int rank_in(const SplineSpace& space, const std::vector<Spline>& splines) {
  IntEchelon e(space.dim());
  for (const auto& s : splines) e.insert(space.coordinates(s));
  return e.rank();
}

std::vector<mpq_class> expand(const Spline& rho, const BasisBundle& basis) {
  const int m = basis.size();
  struct Row {
    int pivot;
    std::vector<mpq_class> v, combo;
  };
  std::vector<Row> rows;
  auto reduce = [&](std::vector<mpq_class>& v, std::vector<mpq_class>& combo) {
    for (const auto& r : rows) {
      if (sgn(v[r.pivot]) == 0) continue;
      const mpq_class c = v[r.pivot];
      for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(r.v[i]) != 0) v[i] -= c * r.v[i];
      for (int j = 0; j < m; ++j)
        if (sgn(r.combo[j]) != 0) combo[j] -= c * r.combo[j];
    }
  };
  for (int j = 0; j < m; ++j) {
    Row r{0, basis.splines[j].data(), std::vector<mpq_class>(m)};
    r.combo[j] = 1;
    reduce(r.v, r.combo);
    while (r.pivot < static_cast<int>(r.v.size()) && sgn(r.v[r.pivot]) == 0) ++r.pivot;
    if (r.pivot == static_cast<int>(r.v.size()))
      throw std::invalid_argument("basis is linearly dependent at element " + basis.tags[j]);
    const mpq_class lead = r.v[r.pivot];
    for (auto& x : r.v) x /= lead;
    for (auto& x : r.combo) x /= lead;
    rows.push_back(std::move(r));
  }
  std::vector<mpq_class> v = rho.data(), combo(m);
  // combo tracks -(coefficients) while v is reduced to the residual
  reduce(v, combo);
  for (const auto& x : v)
    if (sgn(x) != 0) throw std::invalid_argument("spline is not in the span of the basis");
  for (auto& x : combo) x = -x;
  return combo;
}

std::vector<SignedPerm> shortest_support(const Spline& rho) {
  const auto& g = group_table(rho.rank());
  const auto supp = rho.support();
  if (supp.empty()) throw std::invalid_argument("zero spline has no support");
  int best = g.length(supp.front());
  for (int idx : supp) best = std::min(best, g.length(idx));
  std::vector<SignedPerm> out;
  for (int idx : supp)
    if (g.length(idx) == best) out.push_back(g.element(idx));
  return out;
}

std::vector<SignedPerm> missing_triangular_witnesses(const HessenbergSpace& h, const SplineSpace& space) {
  const int n = h.rank();
  const auto& g = group_table(n);
  const int d = space.dim();
  auto block = [&](int idx, IntEchelon& e) {
    for (int k = 1; k <= n; ++k) {
      std::vector<mpq_class> row(d);
      for (int j = 0; j < d; ++j) row[j] = space.basis.splines[j].coeff(idx, k);
      e.insert(row);
    }
  };
  std::vector<SignedPerm> missing;
  for (int i = 1; i <= n; ++i) {
    for (const auto& w : h_descent_oracle(h, i)) {
      const int widx = g.index(w);
      IntEchelon e(d);
      for (int v = 0; v < g.size(); ++v)
        if (v != widx && g.length(v) <= g.length(widx)) block(v, e);
      const int before = e.rank();
      block(widx, e);
      if (e.rank() == before) missing.push_back(w);
    }
  }
  return missing;
}

int degree_zero_dim(const HessenbergSpace& h) {
  const int n = h.rank();
  const auto& g = group_table(n);
  const auto refl = reflection_indices(h.type(), n);
  UnionFind uf(g.size());
  for (int idx = 0; idx < g.size(); ++idx)
    for (int r = 0; r < static_cast<int>(refl.size()); ++r)
      if (h.contains(r)) uf.unite(idx, g.multiply(idx, refl[r]));
  int comps = 0;
  for (int idx = 0; idx < g.size(); ++idx)
    if (uf.find(idx) == idx) ++comps;
  return comps;
}

std::string dump_spline(const Spline& rho) {
  const auto& g = group_table(rho.rank());
  std::ostringstream out;
  for (int idx = 0; idx < g.size(); ++idx) out << format_window(g.element(idx)) << '\t' << format_poly(rho.at(idx)) << '\n';
  return out.str();
}

}  // namespace bcspline
