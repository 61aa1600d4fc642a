#pragma once

#include <cstddef>
#include <vector>

#include "torfib/config.hpp"
#include "torfib/integer.hpp"

namespace torfib {

/// A nondecreasing sequence of 0-based variable indices.
using MultiIndex = std::vector<std::size_t>;

/// All nonnegative integer vectors in n coordinates summing to k, one column
/// each, ordered lexicographically by multi-index.
struct VeroneseConfiguration {
  std::size_t k = 0;
  std::size_t n = 0;
  std::vector<MultiIndex> multi_indices;
  BlockedConfiguration config;  // singleton blocks

  std::size_t size() const noexcept { return multi_indices.size(); }
  /// Column position of a nondecreasing multi-index.
  std::size_t position(const MultiIndex& iota) const;
};

VeroneseConfiguration veronese_config(std::size_t k, std::size_t n);

/// v_iota = sum of the unit vectors e_{iota_i} in Z^n.
IntVector veronese_vector(const MultiIndex& iota, std::size_t n);

/// A partition of {0, .., n1-1} into nonempty parts, with p1 sending each
/// element to its part.
class PartitionGrading {
 public:
  PartitionGrading() = default;
  /// Throws InvalidConfiguration unless `parts` partitions {0, .., n1-1}.
  PartitionGrading(std::size_t n1, std::vector<std::vector<std::size_t>> parts);

  std::size_t n1() const noexcept { return p1_.size(); }
  std::size_t n0() const noexcept { return parts_.size(); }
  const std::vector<std::vector<std::size_t>>& parts() const noexcept { return parts_; }
  std::size_t p1(std::size_t x) const { return p1_.at(x); }
  /// p1 applied entrywise and re-sorted.
  MultiIndex image(const MultiIndex& lambda) const;
  /// The 0/1 matrix of the linear extension of p1.
  IntegerMatrix matrix() const;

 private:
  std::vector<std::vector<std::size_t>> parts_;
  std::vector<std::size_t> p1_;
};

/// A = V_{k,n0} with singleton blocks, and B = V_{k,n1} grouped by the image
/// of each column under p1. Block alpha of B lists its columns in
/// lexicographic order.
struct PartitionedVeronese {
  PartitionGrading grading;
  VeroneseConfiguration base;    // V_{k,n0}
  VeroneseConfiguration fine;    // V_{k,n1}
  BlockedConfiguration A;
  BlockedConfiguration B;
  std::vector<MultiIndex> b_multi_indices;  // per column of B
  std::vector<std::size_t> b_column_of_fine;  // column of B for each column of V_{k,n1}
};

PartitionedVeronese partition_blocked_config(std::size_t k, const PartitionGrading& grading);

/// Rebuilds an index sequence for -g from the fine indices of beta by the
/// min-selection recursion, so that b^g_beta = b^{-g}_beta'. Throws
/// PreconditionViolation when g is not a kernel element of V_{k,n0} or beta
/// is not an index sequence for g.
std::vector<std::size_t> kappa_rearrangement(const IntVector& g, const std::vector<std::size_t>& beta,
                                             const PartitionGrading& grading, std::size_t k);
std::vector<std::size_t> kappa_rearrangement(const IntVector& g, const std::vector<std::size_t>& beta,
                                             const PartitionedVeronese& pv);

}  // namespace torfib
