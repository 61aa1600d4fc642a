#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "torfib/config.hpp"
#include "torfib/execution.hpp"
#include "torfib/integer.hpp"
#include "torfib/matrix.hpp"
#include "torfib/product.hpp"

namespace torfib {

/// Decides m in N S for a fixed S by depth-first search.
///
/// Zero columns of S are ignored. The remaining columns must admit an
/// integer functional w with w . s >= 1, otherwise the constructor throws
/// NonPointedError. Each call is bounded by floor(w . m) levels, so the search
/// is complete. Columns are tried in index order with multiplicities from high
/// to low, which makes witnesses deterministic. solve() is const and may be
/// called concurrently.
class NonnegativeIntegerSolver {
 public:
  explicit NonnegativeIntegerSolver(const IntegerMatrix& S);

  std::optional<IntVector> solve(const IntVector& m) const;

  const IntVector& functional() const noexcept { return w_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> active_;  // nonzero columns of S
  std::vector<IntVector> columns_;   // the active columns
  std::vector<Integer> weights_;     // w . s per active column
  IntVector w_;
  // suffix_pos_[i][t]: some active column at position >= i is positive in row t
  std::vector<std::vector<char>> suffix_pos_;
  std::vector<std::vector<char>> suffix_neg_;
  std::vector<Integer> suffix_min_weight_;
  Integer max_abs_entry_;
};

/// Non-negative integer lambda with simple * lambda = m, or nullopt.
std::optional<IntVector> is_redundant(const IntVector& m, const IntegerMatrix& simple);

/// A Graver index sequence beta' for -g with b^g_beta = b^{-g}_beta'.
std::optional<std::vector<std::size_t>> veronese_shortcut(const IntVector& g, const std::vector<std::size_t>& beta,
                                                          const BlockedConfiguration& B);

/// Exact rational lambda >= 0 with simple * lambda = m, or nullopt.
std::optional<RatVector> is_integral(const IntVector& m, const IntegerMatrix& simple);

/// Integer lambda (any sign) with simple * lambda = m, or nullopt.
std::optional<IntVector> is_in_fraction_field(const IntVector& m, const IntegerMatrix& simple);

struct NormalityResult {
  bool normal = true;
  // A point of gp(D) in cone(D) missing from ND. Among all holes found, the
  // one of least weight under D's positive functional, ties broken
  // lexicographically.
  std::optional<IntVector> hole;
};

/// Whether ND is normal. Throws NonPointedError when cone(D) is not pointed.
NormalityResult is_normal(const IntegerMatrix& D, Execution exec = Execution::parallel);

struct ColumnVerdict {
  GraverTag column_tag;
  IntVector column;
  bool redundant = false;
  bool integral = false;
  bool in_fraction_field = false;
  std::optional<IntVector> redundant_witness;
  std::optional<RatVector> integral_witness;
  std::optional<IntVector> fraction_witness;
};

struct ProductReport {
  std::vector<ColumnVerdict> verdicts;
  bool all_redundant = true;
  bool dense = true;   // every column lies in the fraction field
  bool finite = true;  // every column is integral
  std::optional<bool> tfp_normal;
  bool segre_equals_tfp = true;
  // Dense and finite but not all redundant: the normalization of the fiber
  // product is the Segre product.
  bool normalization_equals_segre = false;
};

struct AnalyzeOptions {
  bool check_tfp_normal = false;
  Execution exec = Execution::parallel;
};

ProductReport analyze_product(const SegrePresentation& P, const AnalyzeOptions& options = {});

}  // namespace torfib
