#include "bcspline/suites.hpp"

#include <atomic>
#include <chrono>
#include <deque>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace bcspline {

namespace {

constexpr std::size_t kMaxListed = 20;

class Timer {
public:
  explicit Timer(SuiteResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
  SuiteResult& r_;
  std::chrono::steady_clock::time_point start_;
};

std::string space_name(const HessenbergSpace& h) {
  return to_string(h.type()) + std::to_string(h.rank()) + " " + format_tset(t_set(h)) + " " + format_ideal(h);
}

// Per-space partial results merged in index order.
SuiteResult per_space(const std::string& name, LieType type, int n, int jobs,
                      const std::function<void(const HessenbergSpace&, SuiteResult&)>& body) {
  SuiteResult total{name};
  Timer timer(total);
  const auto spaces = enumerate_hessenberg(type, n);
  std::vector<SuiteResult> parts(spaces.size());
  parallel_for(static_cast<int>(spaces.size()), jobs, [&](int j) { body(spaces[j], parts[j]); });
  for (const auto& p : parts) {
    total.checked += p.checked;
    total.failed += p.failed;
    for (const auto& f : p.failures)
      if (total.failures.size() < kMaxListed) total.failures.push_back(f);
  }
  return total;
}

std::vector<int> image_of(const SignedPerm& w, const std::vector<int>& a) {
  std::vector<int> out;
  for (int x : a) out.push_back(w(x));
  return out;
}

}  // namespace

void SuiteResult::expect(bool ok, const std::function<std::string()>& what) {
  ++checked;
  if (ok) return;
  ++failed;
  if (failures.size() < kMaxListed) failures.push_back(what());
}

void parallel_for(int count, int jobs, const std::function<void(int)>& f) {
  if (jobs <= 1 || count <= 1) {
    for (int j = 0; j < count; ++j) f(j);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(jobs, count); ++t)
    pool.emplace_back([&] {
      for (int j; (j = next++) < count;) {
        try {
          f(j);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

SuiteResult suite_group_laws(int n, int samples, unsigned seed) {
  SuiteResult r{"group laws"};
  Timer timer(r);
  const auto& g = group_table(n);
  const auto e = SignedPerm::identity(n);
  auto triple = [&](const SignedPerm& a, const SignedPerm& b, const SignedPerm& c) {
    r.expect(compose(compose(a, b), c) == compose(a, compose(b, c)),
             [&] { return "associativity " + format_window(a) + " " + format_window(b) + " " + format_window(c); });
  };
  for (const auto& a : g.elements()) {
    r.expect(compose(a, inverse(a)) == e && compose(inverse(a), a) == e, [&] { return "inverse " + format_window(a); });
    r.expect(compose(a, e) == a && compose(e, a) == a, [&] { return "identity " + format_window(a); });
  }
  if (n <= 3) {
    for (const auto& a : g.elements())
      for (const auto& b : g.elements())
        for (const auto& c : g.elements()) triple(a, b, c);
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, g.size() - 1);
    for (int s = 0; s < samples; ++s) triple(g.element(pick(rng)), g.element(pick(rng)), g.element(pick(rng)));
  }
  return r;
}

SuiteResult suite_lengths(int n) {
  SuiteResult r{"lengths and cosets"};
  Timer timer(r);
  const auto& g = group_table(n);
  std::vector<int> dist(g.size(), -1);
  std::deque<int> queue;
  const int e = g.index(SignedPerm::identity(n));
  dist[e] = 0;
  queue.push_back(e);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      const int u = g.right_simple(v, i);
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  for (int idx = 0; idx < g.size(); ++idx)
    r.expect(dist[idx] == g.length(idx) && dist[idx] == length(g.element(idx)),
             [&] { return "length of " + format_window(g.element(idx)); });
  for (int i = 1; i <= n; ++i) {
    mpz_class want;
    mpz_bin_uiui(want.get_mpz_t(), n, i);
    want <<= i;
    r.expect(mpz_class(static_cast<long>(g.min_coset_reps(i).size())) == want,
             [&] { return "coset representatives for i=" + std::to_string(i); });
  }
  return r;
}

SuiteResult suite_roots(LieType type, int n) {
  SuiteResult r{"roots and reflections"};
  Timer timer(r);
  std::set<SignedPerm> transpositions;
  for (int i = 1; i <= n; ++i) {
    transpositions.insert(transposition(i, -i, n));
    for (int j = i + 1; j <= n; ++j) {
      transpositions.insert(transposition(i, j, n));
      transpositions.insert(transposition(i, -j, n));
    }
  }
  std::set<SignedPerm> image;
  const auto roots = positive_roots(type, n);
  for (const auto& root : roots) {
    const auto s = root_to_reflection(root);
    image.insert(s);
    const EVector v = to_evector(root);
    EVector neg = v;
    for (auto& x : neg) x = -x;
    r.expect(act(s, v) == neg, [&] { return "reflection of " + format_root(root) + " does not negate it"; });
    r.expect(compose(s, s).is_identity(), [&] { return "reflection of " + format_root(root) + " is not an involution"; });
  }
  r.expect(image.size() == roots.size(), [] { return "root to reflection is not injective"; });
  r.expect(image == transpositions, [] { return "reflections differ from the signed transpositions"; });
  return r;
}

SuiteResult suite_descents(LieType type, int n, int jobs) {
  return per_space("descent sets", type, n, jobs, [n](const HessenbergSpace& h, SuiteResult& r) {
    const TSet t = t_set(h);
    for (int i = 1; i <= n; ++i) {
      const auto oracle = h_descent_oracle(h, i);
      const auto formula = h_descent_formula(t, i);
      r.expect(oracle == formula, [&] {
        return space_name(h) + " i=" + std::to_string(i) + " [" + h_descent_case(t, i) + "]: oracle " +
               std::to_string(oracle.size()) + ", closed form " + std::to_string(formula.size());
      });
    }
  });
}

SuiteResult suite_dimension(LieType type, int n, int jobs) {
  return per_space("dimension", type, n, jobs, [n](const HessenbergSpace& h, SuiteResult& r) {
    const TSet t = t_set(h);
    const auto space = solve_spline_space(h);
    const int oracle = dim_degree_one(h);
    r.expect(space.dim() == oracle, [&] {
      return space_name(h) + ": direct solve " + std::to_string(space.dim()) + ", oracle " + std::to_string(oracle);
    });
    const auto gen = t.empty() ? permutohedral_basis(n) : generating_set(h);
    const int rk = rank(gen.splines);
    r.expect(rk == oracle, [&] {
      return space_name(h) + ": generating set rank " + std::to_string(rk) + ", n + sum |D_H(i)| " + std::to_string(oracle);
    });
  });
}

SuiteResult suite_relations(int n) {
  SuiteResult r{"relations"};
  Timer timer(r);
  const auto rep = check_relations(n);
  r.checked = rep.checked;
  r.failed = static_cast<long>(rep.failures.size());
  for (const auto& f : rep.failures)
    if (r.failures.size() < kMaxListed) r.failures.push_back(f);
  for (int p = 0; p < n; ++p)
    for (int k = -n; k <= n; ++k)
      if (k != 0) r.expect(relation_p4(p, k, n), [&] { return "y sum relation p=" + std::to_string(p) + " k=" + std::to_string(k); });
  return r;
}

SuiteResult suite_families(LieType type, int n, int jobs) {
  std::vector<std::vector<std::pair<std::string, Spline>>> f(n + 1), y(n);
  for (int i = 1; i <= n; ++i)
    for (const auto& a : unbalanced_sets(i, n)) f[i].emplace_back("f" + std::to_string(i), f_spline(i, a, n));
  for (int i = 1; i < n; ++i)
    for (int k = -n; k <= n; ++k)
      if (k != 0) y[i].emplace_back("y" + std::to_string(i) + "," + std::to_string(k), y_spline(i, k, n));
  std::vector<Spline> tr, g;
  for (int i = 1; i <= n; ++i) {
    tr.push_back(t_spline(i, n));
    tr.push_back(r_spline(i, n));
  }
  for (int i = -n; i <= n; ++i)
    if (i != 0) g.push_back(g_spline(i, n));
  const Spline hs = h_spline(n);
  return per_space("family splines", type, n, jobs, [&](const HessenbergSpace& h, SuiteResult& r) {
    const TSet t = t_set(h);
    for (const auto& s : tr) r.expect(is_spline(s, h), [&] { return space_name(h) + ": t or r spline"; });
    for (int i = 1; i <= n; ++i)
      if (f_hypothesis(t, i))
        for (const auto& [tag, s] : f[i]) r.expect(is_spline(s, h), [&] { return space_name(h) + ": " + tag; });
    for (int i = 1; i < n; ++i)
      if (y_hypothesis(t, i))
        for (const auto& [tag, s] : y[i]) r.expect(is_spline(s, h), [&] { return space_name(h) + ": " + tag; });
    if (g_hypothesis(t))
      for (const auto& s : g) r.expect(is_spline(s, h), [&] { return space_name(h) + ": g"; });
    if (h_hypothesis(t)) r.expect(is_spline(hs, h), [&] { return space_name(h) + ": h"; });
  });
}

SuiteResult suite_dot_action(int n, int samples, unsigned seed) {
  SuiteResult r{"dot action"};
  Timer timer(r);
  const auto& g = group_table(n);
  const Spline hs = h_spline(n), rn = r_spline(n, n);
  const Spline v = rn - mpq_class(2) * hs;
  // kind: 0 t, 1 r, 2 f, 3 y, 4 g, 5 h
  auto check = [&](const SignedPerm& w, int kind, int i, int k, const std::vector<int>& a) {
    const std::string at = " at " + format_window(w);
    switch (kind) {
      case 0:
        r.expect(dot_action(w, t_spline(i, n)) == t_spline(w(i), n), [&] { return "t" + std::to_string(i) + at; });
        break;
      case 1:
        r.expect(dot_action(w, r_spline(i, n)) == r_spline(i, n), [&] { return "r" + std::to_string(i) + at; });
        break;
      case 2:
        r.expect(dot_action(w, f_spline(i, a, n)) == f_spline(i, image_of(w, a), n), [&] { return "f" + std::to_string(i) + at; });
        break;
      case 3:
        r.expect(dot_action(w, y_spline(i, k, n)) == y_spline(i, w(k), n),
                 [&] { return "y" + std::to_string(i) + "," + std::to_string(k) + at; });
        break;
      case 4:
        r.expect(dot_action(w, g_spline(k, n)) == g_spline(w(k), n), [&] { return "g" + std::to_string(k) + at; });
        break;
      default: {
        const bool odd = neg_set(w).size() % 2 == 1;
        r.expect(dot_action(w, hs) == (odd ? rn - hs : hs), [&] { return "h" + at; });
        r.expect(dot_action(w, v) == (odd ? mpq_class(-1) * v : v), [&] { return "r_n - 2h" + at; });
      }
    }
  };
  std::vector<std::vector<std::vector<int>>> sets(n + 1);
  for (int i = 1; i <= n; ++i) sets[i] = unbalanced_sets(i, n);
  if (n <= 3) {
    for (const auto& w : g.elements()) {
      for (int i = 1; i <= n; ++i) {
        check(w, 0, i, 0, {});
        check(w, 1, i, 0, {});
        for (const auto& a : sets[i]) check(w, 2, i, 0, a);
      }
      for (int k = -n; k <= n; ++k) {
        if (k == 0) continue;
        for (int i = 1; i < n; ++i) check(w, 3, i, k, {});
        check(w, 4, 0, k, {});
      }
      check(w, 5, 0, 0, {});
    }
    return r;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick_w(0, g.size() - 1), pick_kind(0, 5), pick_i(1, n), pick_k(1, 2 * n);
  for (int s = 0; s < samples; ++s) {
    const auto& w = g.element(pick_w(rng));
    const int kind = pick_kind(rng);
    int i = pick_i(rng);
    int k = pick_k(rng);
    k = k > n ? n - k : k;
    if (kind == 3) i = 1 + (i - 1) % (n - 1);
    std::vector<int> a;
    if (kind == 2) a = sets[i][std::uniform_int_distribution<std::size_t>(0, sets[i].size() - 1)(rng)];
    check(w, kind, i, k, a);
  }
  return r;
}

SuiteResult suite_characters(LieType type, int n, int jobs) {
  return per_space("characters", type, n, jobs, [](const HessenbergSpace& h, SuiteResult& r) {
    const auto space = solve_spline_space(h);
    for (Side side : {Side::left, Side::right}) {
      const auto computed = computed_char(space, side);
      const auto e = formula_char(t_set(h), side);
      r.expect(computed == evaluate(e), [&] {
        return space_name(h) + " " + to_string(side) + ": closed form " + format_expression(e) + " (dim " +
               std::to_string(expression_dim(e)) + "), computed dim " + computed.dim().get_str();
      });
    }
  });
}

SuiteResult suite_frobenius(int n) {
  SuiteResult r{"Frobenius rows"};
  Timer timer(r);
  const auto rep = verify_table_rows(n);
  r.checked = rep.checked;
  r.failed = static_cast<long>(rep.failures.size());
  r.failures = rep.failures;
  return r;
}

SuiteResult suite_positivity(LieType type, int n, int jobs) {
  return per_space("h-positivity", type, n, jobs, [](const HessenbergSpace& h, SuiteResult& r) {
    const auto f = p_to_h(frobenius_bc(computed_char(h, Side::left)));
    const auto rep = h_positivity(f);
    r.expect(rep.positive, [&] { return space_name(h) + ": " + format_symfunc(f); });
    const auto s = h_to_s(f);
    bool schur = true;
    for (const auto& [k, c] : s.terms()) schur = schur && c > 0;
    r.expect(schur, [&] { return space_name(h) + ": Schur expansion " + format_symfunc(s); });
  });
}

SuiteResult suite_formula_consistency(LieType type, int n) {
  SuiteResult r{"closed-form consistency"};
  Timer timer(r);
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    const TSet t(n, bits);
    if (!tset_realizable(type, t)) continue;
    mpz_class total = n;
    for (int i = 1; i <= n; ++i) {
      const auto size = h_descent_size(t, i);
      total += size;
      if (n <= kMaxTableRank) {
        const auto listed = h_descent_formula(t, i);
        r.expect(mpz_class(static_cast<long>(listed.size())) == size, [&] {
          return format_tset(t) + " i=" + std::to_string(i) + ": listed " + std::to_string(listed.size()) + ", size " +
                 size.get_str();
        });
      }
    }
    r.expect(total == dim_degree_one_formula(t), [&] { return format_tset(t) + ": dimension sum"; });
    if (!t.empty()) {
      const auto e = formula_char(t, Side::left);
      r.expect(mpz_class(expression_dim(e)) == total - n, [&] {
        return format_tset(t) + ": character dim " + std::to_string(expression_dim(e)) + ", closed-form dim minus n " +
               mpz_class(total - n).get_str();
      });
    }
  }
  return r;
}

SuiteResult suite_descent_sample(LieType type, const TSet& t) {
  SuiteResult r{"descent sample " + to_string(type) + std::to_string(t.rank()) + " " + format_tset(t)};
  Timer timer(r);
  const auto h = HessenbergSpace::from_tset(type, t);
  for (int i = 1; i <= t.rank(); ++i) {
    const auto oracle = h_descent_oracle(h, i);
    const auto formula = h_descent_formula(t, i);
    r.expect(oracle == formula, [&] {
      return "i=" + std::to_string(i) + " [" + h_descent_case(t, i) + "]: oracle " + std::to_string(oracle.size()) +
             ", closed form " + std::to_string(formula.size());
    });
  }
  return r;
}

bool tset_realizable(LieType type, const TSet& t) {
  const int n = t.rank();
  if (n <= 8) return realizable(type, t);
  return type == LieType::B ? (!t.has(n) || t.has(n - 1)) : (!t.has(n - 1) || t.has(n));
}

}  // namespace bcspline
