#include "bcspline/bc_symfunc.hpp"

#include <mutex>
#include <stdexcept>

#include "bcspline/text.hpp"

namespace bcspline {

bool PairOrder::operator()(const PartitionPair& a, const PartitionPair& b) const {
  if (a.lambda.size() != b.lambda.size()) return a.lambda.size() > b.lambda.size();
  if (a.lambda != b.lambda) return a.lambda.parts() > b.lambda.parts();
  return a.mu.parts() > b.mu.parts();
}

std::string format_key(const PartitionPair& k) { return format_parts(k.lambda) + "|" + format_parts(k.mu); }

PartitionPair parse_key(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw std::invalid_argument("key needs exactly one '|': " + std::string(text));
  return {parse_parts(text.substr(0, bar)), parse_parts(text.substr(bar + 1))};
}

std::string to_string(SymBasis b) {
  switch (b) {
    case SymBasis::P: return "P";
    case SymBasis::H: return "H";
    case SymBasis::S: return "S";
  }
  return "?";
}

mpq_class BCSymFunc::coeff(const PartitionPair& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void BCSymFunc::add(const PartitionPair& k, const mpq_class& c) {
  if (k.size() != n_) throw std::invalid_argument("term " + format_key(k) + " has the wrong degree");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BCSymFunc& BCSymFunc::operator+=(const BCSymFunc& o) {
  if (o.n_ != n_ || o.basis_ != basis_) throw std::invalid_argument("symmetric functions of different degree or basis");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

BCSymFunc& BCSymFunc::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

BCSymFunc basis_element(SymBasis b, const Partition& lambda, const Partition& mu) {
  BCSymFunc f(lambda.size() + mu.size(), b);
  f.add({lambda, mu}, 1);
  return f;
}

BCSymFunc frobenius_bc(const ClassFunction& f) {
  const int n = f.rank();
  const auto classes = conjugacy_classes(n);
  mpz_class order = 1;
  for (int k = 1; k <= n; ++k) order *= 2 * k;
  BCSymFunc out(n, SymBasis::P);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (f[c] == 0) continue;
    mpq_class weight = f[c] * classes[c].size;
    weight /= order;
    // p_r(x+y) = p_r(x) + p_r(y), p_r(x-y) = p_r(x) - p_r(y)
    const auto& lam = classes[c].type.lambda.parts();
    const auto& mu = classes[c].type.mu.parts();
    const std::size_t parts = lam.size() + mu.size();
    for (std::uint32_t choice = 0; choice < (1u << parts); ++choice) {
      std::vector<int> xs, ys;
      int sign = 1;
      for (std::size_t j = 0; j < parts; ++j) {
        const bool negative_cycle = j >= lam.size();
        const int r = negative_cycle ? mu[j - lam.size()] : lam[j];
        if (choice >> j & 1) {
          ys.push_back(r);
          if (negative_cycle) sign = -sign;
        } else {
          xs.push_back(r);
        }
      }
      out.add({Partition(xs), Partition(ys)}, sign * weight);
    }
  }
  return out;
}

namespace {

using Row = std::vector<std::pair<Partition, mpq_class>>;

int index_of(const std::vector<Partition>& parts, const Partition& p) {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] == p) return static_cast<int>(i);
  throw std::logic_error("partition not found");
}

// Ways to send the parts of lambda, one at a time, into columns with remaining capacity.
long p_monomial(const std::vector<int>& lambda, std::size_t j, std::vector<int>& cap) {
  if (j == lambda.size()) return 1;
  long total = 0;
  for (auto& c : cap)
    if (c >= lambda[j]) {
      c -= lambda[j];
      total += p_monomial(lambda, j + 1, cap);
      c += lambda[j];
    }
  return total;
}

// Non-negative integer matrices with the given row sums and remaining column capacities.
long h_monomial(const std::vector<int>& lambda, std::size_t row, std::size_t col, int left, std::vector<int>& cap) {
  if (row == lambda.size()) {
    for (int c : cap)
      if (c) return 0;
    return 1;
  }
  if (col == cap.size()) return left == 0 ? h_monomial(lambda, row + 1, 0, row + 1 < lambda.size() ? lambda[row + 1] : 0, cap) : 0;
  long total = 0;
  for (int v = 0; v <= std::min(left, cap[col]); ++v) {
    cap[col] -= v;
    total += h_monomial(lambda, row, col + 1, left - v, cap);
    cap[col] += v;
  }
  return total;
}

std::vector<std::vector<mpq_class>> invert(std::vector<std::vector<mpq_class>> a) {
  const std::size_t m = a.size();
  std::vector<std::vector<mpq_class>> inv(m, std::vector<mpq_class>(m));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) throw std::logic_error("singular transition matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const mpq_class scale = 1 / a[col][col];
    for (std::size_t j = 0; j < m; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t j = 0; j < m; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<std::vector<mpq_class>> compute_p_to_h(int k) {
  const auto parts = partitions_of(k);
  const std::size_t m = parts.size();
  std::vector<std::vector<mpq_class>> pm(m, std::vector<mpq_class>(m)), hm(m, std::vector<mpq_class>(m));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<int> cap = parts[c].parts();
      pm[r][c] = p_monomial(parts[r].parts(), 0, cap);
      const auto& lam = parts[r].parts();
      hm[r][c] = h_monomial(lam, 0, 0, lam.empty() ? 0 : lam[0], cap);
    }
  const auto hinv = invert(hm);
  std::vector<std::vector<mpq_class>> out(m, std::vector<mpq_class>(m));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t j = 0; j < m; ++j) out[r][c] += pm[r][j] * hinv[j][c];
  return out;
}

using Expansion = std::map<Partition, mpq_class>;

Expansion multiply(const Expansion& a, const Expansion& b) {
  Expansion out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) out[pa.join(pb)] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Row matrix_row(const std::vector<std::vector<mpq_class>>& mat, const std::vector<Partition>& parts, const Partition& p) {
  Row row;
  const auto& values = mat[index_of(parts, p)];
  for (std::size_t c = 0; c < parts.size(); ++c)
    if (values[c] != 0) row.emplace_back(parts[c], values[c]);
  return row;
}

Row p_row(const Partition& p) {
  const int k = p.size();
  if (k == 0) return {{Partition(), mpq_class(1)}};
  return matrix_row(p_to_h_matrix(k), partitions_of(k), p);
}

mpz_class z_factor(const Partition& rho) {
  mpz_class z = 1;
  for (int part = 1; part <= rho.size(); ++part) {
    const int m = rho.multiplicity(part);
    for (int j = 1; j <= m; ++j) z *= part * j;
  }
  return z;
}

Row h_row(const Partition& lambda) {
  Expansion acc{{Partition(), mpq_class(1)}};
  for (int part : lambda.parts()) {
    Expansion hk;
    for (const auto& rho : partitions_of(part)) hk[rho] = mpq_class(1, z_factor(rho));
    acc = multiply(acc, hk);
  }
  return Row(acc.begin(), acc.end());
}

Row s_row(const Partition& lambda) {
  Row row;
  for (const auto& gamma : partitions_of(lambda.size()))
    if (const long k = kostka(gamma, lambda)) row.emplace_back(gamma, k);
  return row;
}

BCSymFunc transform(const BCSymFunc& f, SymBasis from, SymBasis to, Row (*row)(const Partition&)) {
  if (f.basis() != from) throw std::invalid_argument("expected basis " + to_string(from) + ", got " + to_string(f.basis()));
  BCSymFunc out(f.degree(), to);
  for (const auto& [k, c] : f.terms()) {
    const Row rx = row(k.lambda), ry = row(k.mu);
    for (const auto& [px, cx] : rx)
      for (const auto& [py, cy] : ry) out.add({px, py}, c * cx * cy);
  }
  return out;
}

// Shapes obtained from gamma by removing a horizontal strip of the given size.
void remove_strip(const std::vector<int>& gamma, std::size_t row, int left, std::vector<int>& shape,
                  std::vector<std::vector<int>>& out) {
  if (row == gamma.size()) {
    if (left == 0) out.push_back(shape);
    return;
  }
  const int below = row + 1 < gamma.size() ? gamma[row + 1] : 0;
  for (int keep = gamma[row]; keep >= below && gamma[row] - keep <= left; --keep) {
    shape[row] = keep;
    remove_strip(gamma, row + 1, left - (gamma[row] - keep), shape, out);
  }
}

long kostka_rec(const std::vector<int>& gamma, const std::vector<int>& content, std::size_t used) {
  if (used == content.size()) return 1;
  const int strip = content[content.size() - 1 - used];
  std::vector<int> shape(gamma.size());
  std::vector<std::vector<int>> smaller;
  remove_strip(gamma, 0, strip, shape, smaller);
  long total = 0;
  for (auto& s : smaller) {
    while (!s.empty() && s.back() == 0) s.pop_back();
    total += kostka_rec(s, content, used + 1);
  }
  return total;
}

}  // namespace

const std::vector<std::vector<mpq_class>>& p_to_h_matrix(int k) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::vector<mpq_class>>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, compute_p_to_h(k)).first;
  return it->second;
}

std::vector<std::vector<mpq_class>> p_to_h_newton(int k) {
  std::vector<Expansion> pk(k + 1);
  for (int j = 1; j <= k; ++j) {
    Expansion e{{Partition({j}), mpq_class(j)}};
    for (int i = 1; i < j; ++i)
      for (const auto& [p, c] : multiply(pk[i], Expansion{{Partition({j - i}), mpq_class(1)}})) e[p] -= c;
    std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
    pk[j] = e;
  }
  const auto parts = partitions_of(k);
  std::vector<std::vector<mpq_class>> out(parts.size(), std::vector<mpq_class>(parts.size()));
  for (std::size_t r = 0; r < parts.size(); ++r) {
    Expansion acc{{Partition(), mpq_class(1)}};
    for (int part : parts[r].parts()) acc = multiply(acc, pk[part]);
    for (const auto& [p, c] : acc) out[r][index_of(parts, p)] = c;
  }
  return out;
}

BCSymFunc p_to_h(const BCSymFunc& f) { return transform(f, SymBasis::P, SymBasis::H, p_row); }

BCSymFunc h_to_p(const BCSymFunc& f) { return transform(f, SymBasis::H, SymBasis::P, h_row); }

long kostka(const Partition& gamma, const Partition& lambda) {
  if (gamma.size() != lambda.size()) throw std::invalid_argument("Kostka numbers need |gamma| = |lambda|");
  return kostka_rec(gamma.parts(), lambda.parts(), 0);
}

BCSymFunc h_to_s(const BCSymFunc& f) { return transform(f, SymBasis::H, SymBasis::S, s_row); }

TableRowReport verify_table_rows(int n) {
  if (n < 2) throw std::invalid_argument("table rows need n >= 2");
  TableRowReport report;
  auto expect = [&](const std::string& name, const ClassFunction& f, const BCSymFunc& want) {
    ++report.checked;
    const auto got = p_to_h(frobenius_bc(f));
    if (got != want) report.failures.push_back(name + ": got " + format_symfunc(got) + ", expected " + format_symfunc(want));
  };
  auto h = [](std::vector<int> lambda, std::vector<int> mu) {
    return basis_element(SymBasis::H, Partition(std::move(lambda)), Partition(std::move(mu)));
  };
  const auto one = named_char(CharKind::trivial, n);
  const auto delta = named_char(CharKind::delta, n);
  expect("1", one, h({n}, {}));
  expect("delta", delta, h({}, {n}));
  expect("chi", named_char(CharKind::defining, n), h({n - 1}, {1}));
  expect("s", named_char(CharKind::s, n), h({n - 1, 1}, {}));
  expect("1 + delta", one + delta, h({n}, {}) + h({}, {n}));
  for (int k = 1; k <= n; ++k) {
    BCSymFunc want(n, SymBasis::H);
    for (int j = 0; j <= k; ++j) want += h({n - k, j}, {k - j});
    expect("h" + std::to_string(k), named_char(CharKind::h, n, k), want);
  }
  ++report.checked;
  if (h_to_s(p_to_h(frobenius_bc(one))) != basis_element(SymBasis::S, Partition({n}), Partition()))
    report.failures.push_back("1 is not s[n|]");
  ++report.checked;
  if (h_to_s(p_to_h(frobenius_bc(delta))) != basis_element(SymBasis::S, Partition(), Partition({n})))
    report.failures.push_back("delta is not s[|n]");
  return report;
}

PositivityReport h_positivity(const BCSymFunc& f) {
  if (f.basis() != SymBasis::H) throw std::invalid_argument("h-positivity needs the H basis");
  PositivityReport r;
  for (const auto& [k, c] : f.terms())
    if (c < 0) r.negative.emplace_back(k, c);
  r.positive = r.negative.empty();
  return r;
}

std::string format_symfunc(const BCSymFunc& f) {
  if (f.is_zero()) return "0";
  const std::string letter = f.basis() == SymBasis::P ? "p" : f.basis() == SymBasis::H ? "h" : "s";
  std::string out;
  for (const auto& [k, c] : f.terms()) {
    const mpq_class mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1) out += mag.get_str() + " ";
    out += letter + "[" + format_parts(k.lambda, "\xE2\x88\x85") + "|" + format_parts(k.mu, "\xE2\x88\x85") + "]";
  }
  return out;
}

nlohmann::json to_json(const BCSymFunc& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : f.terms()) terms.push_back({{"key", format_key(k)}, {"coeff", c.get_str()}});
  return {{"basis", to_string(f.basis())}, {"degree", f.degree()}, {"terms", terms}};
}

}  // namespace bcspline
