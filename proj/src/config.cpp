#include "torfib/config.hpp"

#include <numeric>

#include "torfib/error.hpp"
#include "torfib/intlin.hpp"

namespace torfib {

BlockedConfiguration::BlockedConfiguration(IntegerMatrix matrix, std::vector<std::size_t> block_sizes,
                                           std::vector<std::string> labels)
    : matrix_(std::move(matrix)), block_sizes_(std::move(block_sizes)), labels_(std::move(labels)) {
  const std::size_t total = std::accumulate(block_sizes_.begin(), block_sizes_.end(), std::size_t{0});
  if (total != matrix_.cols())
    throw InvalidConfiguration("block sizes sum to " + std::to_string(total) + " but the matrix has " +
                               std::to_string(matrix_.cols()) + " columns");
  if (!labels_.empty() && labels_.size() != matrix_.cols())
    throw InvalidConfiguration("label count differs from column count");
  offsets_.reserve(block_sizes_.size());
  std::size_t offset = 0;
  for (std::size_t alpha = 0; alpha < block_sizes_.size(); ++alpha) {
    offsets_.push_back(offset);
    for (std::size_t beta = 0; beta < block_sizes_[alpha]; ++beta) column_block_.push_back(alpha);
    offset += block_sizes_[alpha];
  }
}

BlockedConfiguration BlockedConfiguration::singletons(IntegerMatrix matrix) {
  std::vector<std::size_t> sizes(matrix.cols(), 1);
  return BlockedConfiguration(std::move(matrix), std::move(sizes));
}

bool BlockedConfiguration::all_singletons() const noexcept {
  for (std::size_t s : block_sizes_)
    if (s != 1) return false;
  return true;
}

IntVector BlockedConfiguration::column(std::size_t alpha, std::size_t beta) const {
  if (beta >= block_size(alpha)) throw std::out_of_range("within-block index out of range");
  return matrix_.column(offsets_[alpha] + beta);
}

RatVector GradingCertificate::degree(const IntVector& v) const { return multiply(degree_matrix, v); }

bool check_condition_star(const BlockedConfiguration& A) { return total_degree_functional(A).has_value(); }

std::optional<RatVector> total_degree_functional(const BlockedConfiguration& A) {
  IntegerMatrix ones(1, A.cols());
  for (std::size_t j = 0; j < A.cols(); ++j) ones(0, j) = 1;
  auto X = solve_rational(A.matrix(), ones);
  if (!X) return std::nullopt;
  return X->row(0);
}

namespace {

void check_shapes(const BlockedConfiguration& A, const BlockedConfiguration& B) {
  if (!A.all_singletons()) throw PreconditionViolation("the base configuration must have one column per block");
  if (B.block_count() != A.cols())
    throw DimensionMismatch("block count " + std::to_string(B.block_count()) + " differs from the " +
                            std::to_string(A.cols()) + " columns of the base configuration");
}

// Target matrix whose j-th column is a_alpha for the block alpha of column j.
IntegerMatrix expanded_target(const BlockedConfiguration& A, const BlockedConfiguration& B, std::size_t upto) {
  std::size_t width = upto == B.block_count() ? B.cols() : B.block_offset(upto);
  IntegerMatrix T(A.rows(), width);
  for (std::size_t j = 0; j < width; ++j) {
    std::size_t alpha = B.block_of_column(j);
    for (std::size_t i = 0; i < A.rows(); ++i) T(i, j) = A.matrix()(i, alpha);
  }
  return T;
}

}  // namespace

std::optional<GradingCertificate> check_homogeneity(const BlockedConfiguration& A, const BlockedConfiguration& B) {
  check_shapes(A, B);
  auto X = solve_rational(B.matrix(), expanded_target(A, B, B.block_count()));
  if (!X) return std::nullopt;
  return GradingCertificate{std::move(*X), A};
}

GradingCertificate require_homogeneity(const BlockedConfiguration& A, const BlockedConfiguration& B,
                                       const std::string& side) {
  if (auto cert = check_homogeneity(A, B)) return *cert;
  // Grow the prefix of blocks until the system first becomes unsolvable.
  for (std::size_t alpha = 0; alpha < B.block_count(); ++alpha) {
    std::size_t width = B.block_offset(alpha) + B.block_size(alpha);
    IntegerMatrix T = expanded_target(A, B, alpha + 1);
    if (!solve_rational(B.matrix().column_range(0, width), T)) throw HomogeneityError(side, alpha);
  }
  throw HomogeneityError(side, B.block_count() ? B.block_count() - 1 : 0);
}

}  // namespace torfib
