#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "torfib/config.hpp"
#include "torfib/graver.hpp"
#include "torfib/integer.hpp"
#include "torfib/matrix.hpp"

namespace torfib {

/// Column (b^alpha_beta ; c^alpha_gamma) of the toric fiber product.
struct SimpleTag {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t gamma = 0;

  friend bool operator==(const SimpleTag&, const SimpleTag&) = default;
};

/// Column (b^g_beta ; c^g'_gamma) added for an extra column of A'. Without
/// merging g' == g; a merged block also pairs members with each other.
struct GraverTag {
  std::size_t block = 0;  // column of A'
  IntVector g;
  std::vector<std::size_t> beta;
  IntVector g_bottom;
  std::vector<std::size_t> gamma;

  friend bool operator==(const GraverTag&, const GraverTag&) = default;
};

using ColumnTag = std::variant<SimpleTag, GraverTag>;

struct ProductConfiguration {
  IntegerMatrix matrix;  // (top ; bottom) stacked
  std::vector<ColumnTag> column_index;
  std::size_t simple_count = 0;
  std::size_t top_rows = 0;
  std::vector<std::size_t> block_sizes;  // product columns per block of the base

  std::size_t cols() const noexcept { return matrix.cols(); }
  IntegerMatrix simple_matrix() const { return matrix.column_range(0, simple_count); }
  IntVector top(std::size_t j) const;
  IntVector bottom(std::size_t j) const;
  BlockedConfiguration blocked() const { return BlockedConfiguration(matrix, block_sizes); }
};

/// B x_A C. Throws HomogeneityError when either side is not A-graded.
ProductConfiguration tfp_config(const BlockedConfiguration& A, const BlockedConfiguration& B,
                                const BlockedConfiguration& C);

struct SegreOptions {
  // One A' column per distinct vector a^g instead of one per Graver element.
  bool merge_duplicates = false;
  // Keep b^g_beta only when some gamma makes m^g_{beta,gamma} non-redundant,
  // and symmetrically for gamma. This is the smaller presentation of the
  // hierarchical-model example.
  bool drop_redundant_sequences = false;
};

struct SegrePresentation {
  BlockedConfiguration A_prime;
  BlockedConfiguration B_prime;
  BlockedConfiguration C_prime;
  ProductConfiguration product;
  GradingCertificate cert_B;
  GradingCertificate cert_C;
  GraverBasis graver;
  // Graver elements behind each extra column of A', in order.
  std::vector<std::vector<IntVector>> extra_groups;
};

/// a^g = sum over g_alpha > 0 of g_alpha * a_alpha.
IntVector graver_degree(const IntVector& g, const BlockedConfiguration& A);

/// b^g_beta = sum_i b^{alpha_i}_{beta_i} over the positive support of g.
IntVector graver_top(const IntVector& g, const std::vector<std::size_t>& beta, const BlockedConfiguration& B);

/// c^g_gamma = sum_j c^{alpha'_j}_{gamma_j} over the negative support of g.
IntVector graver_bottom(const IntVector& g, const std::vector<std::size_t>& gamma, const BlockedConfiguration& C);

SegrePresentation segre_presentation(const BlockedConfiguration& A, const BlockedConfiguration& B,
                                     const BlockedConfiguration& C, const SegreOptions& options = {});

struct GraverColumn {
  IntVector g;
  std::vector<std::size_t> beta;
  IntVector g_bottom;
  std::vector<std::size_t> gamma;
  IntVector column;
};

/// The columns of the presentation's product outside B x_A C, in order.
std::vector<GraverColumn> graver_columns(const SegrePresentation& P);

/// Compares ker_Z(A x_A C) with ker_Z(C) under the column bijection.
bool check_neutral_tfp(const BlockedConfiguration& A, const BlockedConfiguration& C);

/// Degree map of a product column: the B-side certificate on the top half.
GradingCertificate product_grading(const ProductConfiguration& P, const GradingCertificate& cert_B);
GradingCertificate product_grading(const SegrePresentation& P);

/// Number of distinct points of the monoid ND whose degree under `cert` is
/// exactly `a`. Throws InconclusiveError after `bound` generator applications
/// and PreconditionViolation when some generator has degree zero.
std::size_t degree_fiber_count(const BlockedConfiguration& D, const GradingCertificate& cert, const IntVector& a,
                               std::size_t bound);

}  // namespace torfib
