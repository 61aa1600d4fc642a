#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torfib/integer.hpp"
#include "torfib/matrix.hpp"

namespace torfib {

/// An indexed multiset of integer vectors (the columns of a matrix) split
/// into consecutive blocks. Block alpha holds the columns b^alpha_1 ..
/// b^alpha_{d_alpha}; blocks may be empty.
class BlockedConfiguration {
 public:
  BlockedConfiguration() = default;
  BlockedConfiguration(IntegerMatrix matrix, std::vector<std::size_t> block_sizes,
                       std::vector<std::string> labels = {});

  /// Every column forms its own block.
  static BlockedConfiguration singletons(IntegerMatrix matrix);

  const IntegerMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<std::size_t>& block_sizes() const noexcept { return block_sizes_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::size_t rows() const noexcept { return matrix_.rows(); }
  std::size_t cols() const noexcept { return matrix_.cols(); }
  std::size_t block_count() const noexcept { return block_sizes_.size(); }
  std::size_t block_size(std::size_t alpha) const { return block_sizes_.at(alpha); }
  std::size_t block_offset(std::size_t alpha) const { return offsets_.at(alpha); }
  bool all_singletons() const noexcept;

  /// Column b^alpha_beta (0-based indices).
  IntVector column(std::size_t alpha, std::size_t beta) const;
  IntVector column(std::size_t j) const { return matrix_.column(j); }
  std::size_t block_of_column(std::size_t j) const { return column_block_.at(j); }

  friend bool operator==(const BlockedConfiguration& a, const BlockedConfiguration& b) {
    return a.matrix_ == b.matrix_ && a.block_sizes_ == b.block_sizes_;
  }

 private:
  IntegerMatrix matrix_;
  std::vector<std::size_t> block_sizes_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> column_block_;
};

/// A rational degree map M with M * b^alpha_beta = a_alpha for all columns.
struct GradingCertificate {
  RationalMatrix degree_matrix;
  BlockedConfiguration target;

  /// M * v, the degree of an arbitrary vector.
  RatVector degree(const IntVector& v) const;
};

/// True iff the all-ones row vector is in the rational row space of A.
bool check_condition_star(const BlockedConfiguration& A);

/// A rational functional w with w . a = 1 on every column, when one exists.
std::optional<RatVector> total_degree_functional(const BlockedConfiguration& A);

/// Certificate that B is A-graded block by block, or nullopt. A must have
/// singleton blocks and B must have A.cols() blocks.
std::optional<GradingCertificate> check_homogeneity(const BlockedConfiguration& A, const BlockedConfiguration& B);

/// Like check_homogeneity but throws HomogeneityError naming the first block
/// that makes the system unsolvable.
GradingCertificate require_homogeneity(const BlockedConfiguration& A, const BlockedConfiguration& B,
                                       const std::string& side);

}  // namespace torfib
