#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace bcspline {

/// Integer partition stored as weakly decreasing positive parts.
class Partition {
public:
  Partition() = default;
  /// Sorts and drops zero parts; throws on negative parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int multiplicity(int part) const;

  /// Concatenation of parts, re-sorted. Corresponds to multiplying h's or p's.
  Partition join(const Partition& other) const;

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

/// All partitions of k, largest first in reverse lexicographic order: (k), (k-1,1), ...
std::vector<Partition> partitions_of(int k);

/// Dominance order: gamma >= lambda.
bool dominates(const Partition& gamma, const Partition& lambda);

/// "2,1"; empty partition renders as "" unless `empty_token` is given.
std::string format_parts(const Partition& p, std::string_view empty_token = "");
Partition parse_parts(std::string_view text);

}  // namespace bcspline
