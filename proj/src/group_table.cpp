#include "bcspline/group_table.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace bcspline {

GroupTable::GroupTable(int n) : n_(n) {
  if (n < 1 || n > kMaxTableRank) {
    throw std::invalid_argument("group table supports 1 <= n <= " + std::to_string(kMaxTableRank));
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      std::vector<int> w(perm);
      for (int k = 0; k < n; ++k)
        if (signs >> k & 1u) w[k] = -w[k];
      elements_.emplace_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(elements_.begin(), elements_.end());

  const int N = size();
  index_.reserve(N * 2);
  for (int idx = 0; idx < N; ++idx) index_.emplace(elements_[idx].key(), idx);

  length_.resize(N);
  neg_count_.resize(N);
  inverse_.resize(N);
  right_simple_.resize(static_cast<std::size_t>(n) * N);
  for (int idx = 0; idx < N; ++idx) {
    const SignedPerm& w = elements_[idx];
    length_[idx] = bcspline::length(w);
    neg_count_[idx] = static_cast<int>(neg_set(w).size());
    inverse_[idx] = index(bcspline::inverse(w));
    for (int i = 1; i <= n; ++i) {
      right_simple_[(i - 1) * N + idx] = index(compose(w, SignedPerm::simple(i, n)));
    }
  }

  const auto types = signed_cycle_types(n);
  std::map<SignedCycleType, int> type_index;
  for (int c = 0; c < static_cast<int>(types.size()); ++c) {
    type_index.emplace(types[c], c);
    classes_.push_back({types[c], SignedPerm{}, 0});
  }
  class_of_.resize(N);
  for (int idx = 0; idx < N; ++idx) {
    const int c = type_index.at(signed_cycle_type(elements_[idx]));
    class_of_[idx] = c;
    // elements are scanned in lexicographic order, so the first hit is the least
    if (classes_[c].size == 0) classes_[c].representative = elements_[idx];
    classes_[c].size += 1;
  }
}

int GroupTable::index(const SignedPerm& w) const {
  if (w.rank() != n_) throw std::out_of_range("element rank does not match table rank");
  return index_.at(w.key());
}

int GroupTable::multiply(int a, int b) const { return index(compose(elements_[a], elements_[b])); }

int GroupTable::class_index(const SignedCycleType& t) const {
  for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
    if (classes_[c].type == t) return c;
  throw std::invalid_argument("no class with cycle type " + format_cycle_type(t));
}

std::vector<int> GroupTable::min_coset_reps(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("coset index out of range");
  std::vector<int> out;
  for (int idx = 0; idx < size(); ++idx) {
    bool minimal = true;
    for (int j = 1; j <= n_ && minimal; ++j) {
      if (j != i && length_[right_simple(idx, j)] < length_[idx]) minimal = false;
    }
    if (minimal) out.push_back(idx);
  }
  return out;
}

const GroupTable& group_table(int n) {
  static std::array<std::unique_ptr<GroupTable>, kMaxTableRank + 1> tables;
  static std::mutex mutex;
  if (n < 1 || n > kMaxTableRank) {
    throw std::invalid_argument("group table supports 1 <= n <= " + std::to_string(kMaxTableRank));
  }
  std::lock_guard lock(mutex);
  if (!tables[n]) tables[n] = std::make_unique<GroupTable>(n);
  return *tables[n];
}

std::vector<SignedCycleType> signed_cycle_types(int n) {
  std::vector<SignedCycleType> out;
  for (int k = n; k >= 0; --k) {
    auto lambdas = partitions_of(k);
    auto mus = partitions_of(n - k);
    std::sort(lambdas.begin(), lambdas.end());
    std::sort(mus.begin(), mus.end());
    for (const auto& l : lambdas)
      for (const auto& m : mus) out.push_back({l, m});
  }
  return out;
}

mpz_class group_order(int n) {
  mpz_class order = 1;
  for (int k = 1; k <= n; ++k) order *= 2 * k;
  return order;
}

mpz_class class_size_formula(const SignedCycleType& t) {
  mpz_class z = 1;
  for (const Partition* p : {&t.lambda, &t.mu}) {
    std::map<int, int> mult;
    for (int r : p->parts()) ++mult[r];
    for (auto [r, m] : mult) {
      for (int k = 1; k <= m; ++k) z *= 2 * r * k;
    }
  }
  return group_order(t.rank()) / z;
}

SignedPerm cycle_type_representative(const SignedCycleType& t) {
  const int n = t.rank();
  std::vector<int> w(n);
  int start = 1;
  // cycle start -> start+1 -> ... -> start+len-1 -> (+-)start
  auto place = [&](int len, bool negative) {
    for (int k = 0; k + 1 < len; ++k) w[start + k - 1] = start + k + 1;
    w[start + len - 2] = negative ? -start : start;
    start += len;
  };
  for (int r : t.lambda.parts()) place(r, false);
  for (int r : t.mu.parts()) place(r, true);
  return SignedPerm(std::move(w));
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (n <= kMaxTableRank) return group_table(n).classes();
  std::vector<ConjugacyClass> out;
  for (const auto& t : signed_cycle_types(n)) {
    out.push_back({t, cycle_type_representative(t), class_size_formula(t)});
  }
  return out;
}

std::vector<SignedPerm> min_coset_reps(int n, int i) {
  const GroupTable& g = group_table(n);
  std::vector<SignedPerm> out;
  for (int idx : g.min_coset_reps(i)) out.push_back(g.element(idx));
  return out;
}

}  // namespace bcspline
