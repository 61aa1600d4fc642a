#pragma once

// Exact integer and rational linear algebra: Hermite normal forms, integer
// kernels, lattice membership, rational solving and exact LP feasibility.
// Everything is arbitrary precision; nothing here touches floating point.

#include <cstddef>
#include <optional>
#include <vector>

#include "torfib/integer.hpp"
#include "torfib/matrix.hpp"

namespace torfib {

/// Row-style Hermite normal form H = U * M.
///
/// H is in row echelon form; each pivot is positive and the entries above a
/// pivot lie in [0, pivot). U is unimodular.
struct HermiteForm {
  IntegerMatrix H;
  IntegerMatrix U;
  std::vector<std::size_t> pivot_columns;  // one per nonzero row of H
  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

HermiteForm hermite_normal_form(const IntegerMatrix& M);

/// A sublattice of Z^n, kept as the nonzero rows of its Hermite normal form.
class LatticeBasis {
 public:
  LatticeBasis() = default;

  /// Lattice spanned by the given generators (need not be independent).
  static LatticeBasis from_generators(std::size_t ambient_dim, const std::vector<IntVector>& generators);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<IntVector>& basis() const noexcept { return basis_; }
  const IntegerMatrix& hnf() const noexcept { return hnf_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Integer coefficients of v with respect to basis(), or nullopt when v is
  /// not a lattice vector.
  std::optional<IntVector> coordinates(const IntVector& v) const;

  IntVector combine(const IntVector& coordinates) const;

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> basis_;
  IntegerMatrix hnf_;
  std::vector<std::size_t> pivots_;
};

/// Lattice basis of {c in Z^d : A c = 0}, where d = A.cols().
LatticeBasis integer_kernel(const IntegerMatrix& A);

std::size_t codim(const IntegerMatrix& A);

/// Throws DimensionMismatch when v.size() != L.ambient_dim().
bool in_lattice(const IntVector& v, const LatticeBasis& L);

std::size_t rational_rank(const IntegerMatrix& M);

/// Some exact X with X * M = target (free variables set to zero), or nullopt.
std::optional<RationalMatrix> solve_rational(const IntegerMatrix& M, const IntegerMatrix& target);

/// Exact lambda >= 0 with S * lambda = m, found by a phase-one simplex with
/// Bland's rule, or nullopt when infeasible.
std::optional<RatVector> lp_feasible_nonneg(const IntegerMatrix& S, const IntVector& m);

/// Integer lambda (any sign) with S * lambda = m, or nullopt.
std::optional<IntVector> solve_integer(const IntegerMatrix& S, const IntVector& m);

/// Integer functional w with w . s >= 1 for every column s of S, or nullopt
/// when the columns do not span a pointed cone strictly on one side of a
/// hyperplane (in particular when some column is zero).
std::optional<IntVector> positive_functional(const IntegerMatrix& S);

}  // namespace torfib
