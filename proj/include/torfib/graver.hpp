#pragma once

#include <cstddef>
#include <vector>

#include "torfib/config.hpp"
#include "torfib/integer.hpp"
#include "torfib/intlin.hpp"
#include "torfib/matrix.hpp"

namespace torfib {

/// The primitive vectors of ker_Z(A).
///
/// Elements come in +/- pairs. Each pair is led by the representative whose
/// first nonzero entry is positive; pairs are ordered by 1-norm, then
/// lexicographically by representative.
struct GraverBasis {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> elements;
  LatticeBasis kernel;

  bool contains(const IntVector& g) const;
};

GraverBasis graver_basis(const IntegerMatrix& A);
GraverBasis graver_basis(const BlockedConfiguration& A);

/// Greedy conformal decomposition c = g_1 + ... + g_t with every g_i in G and
/// g_i conformal to c. Throws NotInKernel when c is not a kernel vector.
std::vector<IntVector> sign_consistent_decomposition(const IntVector& c, const GraverBasis& G);

/// Positive support of g as a nondecreasing block sequence, with multiplicity:
/// (1,1,-2) gives {0, 1}; its negation gives {2, 2}.
std::vector<std::size_t> positive_support_sequence(const IntVector& g);
std::vector<std::size_t> negative_support_sequence(const IntVector& g);

/// All index sequences choosing one within-block index per entry of
/// `blocks`, in lexicographic order. Empty `blocks` yields one empty sequence.
std::vector<std::vector<std::size_t>> index_sequences(const std::vector<std::size_t>& blocks,
                                                       const std::vector<std::size_t>& block_sizes);

struct GraverIndexPair {
  IntVector g;
  std::vector<std::size_t> beta;   // over positive_support_sequence(g)
  std::vector<std::size_t> gamma;  // over negative_support_sequence(g)
};

/// Every pair of Graver index sequences of g, beta-major.
std::vector<GraverIndexPair> graver_index_pairs(const IntVector& g, const std::vector<std::size_t>& b_blocks,
                                                const std::vector<std::size_t>& c_blocks);

struct GraverFactor {
  IntVector g;
  std::vector<std::size_t> alpha;        // positive support of g
  std::vector<std::size_t> alpha_prime;  // negative support of g
};

struct MonomialFactorization {
  std::vector<std::size_t> simple;  // blocks shared by both sides, one per simple factor
  std::vector<GraverFactor> graver;
};

/// Splits the degree-balanced pair (alpha, alpha') into simple factors from
/// the multiset intersection and Graver factors from a conformal
/// decomposition of what remains.
MonomialFactorization monomial_factorization(const std::vector<std::size_t>& alpha,
                                             const std::vector<std::size_t>& alpha_prime,
                                             const BlockedConfiguration& A, const GraverBasis& G);

}  // namespace torfib
