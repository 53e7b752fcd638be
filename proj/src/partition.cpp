#include "bcspline/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "bcspline/text.hpp"

namespace bcspline {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("partition part must be non-negative");
    if (p > 0) parts_.push_back(p);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::join(const Partition& other) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(all));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  if (k < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(k, k, prefix, out);
  return out;
}

bool dominates(const Partition& gamma, const Partition& lambda) {
  if (gamma.size() != lambda.size()) return false;
  int sg = 0, sl = 0;
  const auto& g = gamma.parts();
  const auto& l = lambda.parts();
  for (std::size_t i = 0; i < std::max(g.size(), l.size()); ++i) {
    sg += i < g.size() ? g[i] : 0;
    sl += i < l.size() ? l[i] : 0;
    if (sg < sl) return false;
  }
  return true;
}

std::string format_parts(const Partition& p, std::string_view empty_token) {
  if (p.empty()) return std::string(empty_token);
  return join_ints(p.parts(), ",");
}

Partition parse_parts(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "0" || text == "-" || text == "\xE2\x88\x85") return Partition{};
  return Partition(parse_int_list(text));
}

}  // namespace bcspline
