#include "torfib/graver.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "torfib/error.hpp"

namespace torfib {

namespace {

// A vector with bitmasks of its positive and negative support, so that most
// conformality tests are decided without touching the big integers.
struct SignedVector {
  IntVector v;
  std::vector<std::uint64_t> pos;
  std::vector<std::uint64_t> neg;

  explicit SignedVector(IntVector x) : v(std::move(x)) { refresh(); }

  void refresh() {
    const std::size_t words = (v.size() + 63) / 64;
    pos.assign(words, 0);
    neg.assign(words, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      int s = sgn(v[i]);
      if (s > 0) pos[i / 64] |= std::uint64_t{1} << (i % 64);
      if (s < 0) neg[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }

  bool zero() const {
    for (std::size_t w = 0; w < pos.size(); ++w)
      if (pos[w] | neg[w]) return false;
    return true;
  }
};

bool masks_conformal(const SignedVector& g, const SignedVector& s) {
  for (std::size_t w = 0; w < g.pos.size(); ++w)
    if ((g.pos[w] & ~s.pos[w]) | (g.neg[w] & ~s.neg[w])) return false;
  return true;
}

bool masks_sign_consistent(const SignedVector& a, const SignedVector& b) {
  for (std::size_t w = 0; w < a.pos.size(); ++w)
    if ((a.pos[w] & b.neg[w]) | (a.neg[w] & b.pos[w])) return false;
  return true;
}

bool reduces(const SignedVector& g, const SignedVector& s) {
  return masks_conformal(g, s) && conformal_le(g.v, s.v);
}

// Conformal reduction of s by G. One pass suffices: once g fails to reduce s
// it cannot reduce any later s - g', because s - g' is conformal to s.
SignedVector normal_form(SignedVector s, const std::vector<SignedVector>& G) {
  for (const auto& g : G) {
    if (s.zero()) break;
    while (reduces(g, s)) {
      s.v -= g.v;
      s.refresh();
    }
  }
  return s;
}

bool leads_positive(const IntVector& g) {
  for (const auto& x : g)
    if (sgn(x) != 0) return sgn(x) > 0;
  return false;
}

}  // namespace

bool GraverBasis::contains(const IntVector& g) const {
  return std::find(elements.begin(), elements.end(), g) != elements.end();
}

GraverBasis graver_basis(const IntegerMatrix& A) {
  GraverBasis out;
  out.ambient_dim = A.cols();
  out.kernel = integer_kernel(A);

  std::vector<SignedVector> G;
  for (const auto& b : out.kernel.basis()) {
    G.emplace_back(b);
    G.emplace_back(-b);
  }

  // Completion: every sum of a sign-inconsistent pair must reduce to zero.
  for (std::size_t k = 0; k < G.size(); ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (masks_sign_consistent(G[i], G[k])) continue;
      IntVector sum = G[i].v + G[k].v;
      if (is_zero(sum)) continue;
      SignedVector f = normal_form(SignedVector(std::move(sum)), G);
      if (f.zero()) continue;
      IntVector negated = -f.v;
      G.push_back(std::move(f));
      G.emplace_back(std::move(negated));
    }
  }

  // Keep the conformally minimal elements.
  std::vector<std::size_t> order(G.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<Integer> norms(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) norms[i] = norm1(G[i].v);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return norms[a] < norms[b]; });

  std::vector<const SignedVector*> minimal;
  std::unordered_set<IntVector, IntVectorHash> seen;
  for (std::size_t idx : order) {
    const SignedVector& g = G[idx];
    if (seen.count(g.v)) continue;
    bool reducible = false;
    for (const SignedVector* h : minimal)
      if (reduces(*h, g)) {
        reducible = true;
        break;
      }
    if (reducible) continue;
    seen.insert(g.v);
    minimal.push_back(&g);
  }

  std::vector<IntVector> reps;
  for (const SignedVector* g : minimal)
    if (leads_positive(g->v)) reps.push_back(g->v);
  std::sort(reps.begin(), reps.end(), [](const IntVector& a, const IntVector& b) {
    Integer na = norm1(a), nb = norm1(b);
    if (na != nb) return na < nb;
    return a < b;
  });
  for (auto& r : reps) {
    out.elements.push_back(r);
    out.elements.push_back(-r);
  }
  return out;
}

GraverBasis graver_basis(const BlockedConfiguration& A) { return graver_basis(A.matrix()); }

std::vector<IntVector> sign_consistent_decomposition(const IntVector& c, const GraverBasis& G) {
  if (c.size() != G.ambient_dim) throw DimensionMismatch("decomposition: vector has wrong length");
  if (!in_lattice(c, G.kernel)) throw NotInKernel(to_string(c) + " is not in the integer kernel");

  // Smallest applicable element first, lexicographically.
  std::vector<const IntVector*> sorted;
  for (const auto& g : G.elements) sorted.push_back(&g);
  std::sort(sorted.begin(), sorted.end(), [](const IntVector* a, const IntVector* b) { return *a < *b; });

  std::vector<IntVector> parts;
  IntVector rest = c;
  while (!is_zero(rest)) {
    const IntVector* pick = nullptr;
    for (const IntVector* g : sorted)
      if (conformal_le(*g, rest)) {
        pick = g;
        break;
      }
    if (!pick) throw Error("Graver basis is incomplete: no element conformal to " + to_string(rest));
    rest -= *pick;
    parts.push_back(*pick);
  }
  return parts;
}

std::vector<std::size_t> positive_support_sequence(const IntVector& g) {
  std::vector<std::size_t> seq;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (Integer k = 0; k < g[a]; ++k) seq.push_back(a);
  return seq;
}

std::vector<std::size_t> negative_support_sequence(const IntVector& g) {
  std::vector<std::size_t> seq;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (Integer k = 0; k < -g[a]; ++k) seq.push_back(a);
  return seq;
}

std::vector<std::vector<std::size_t>> index_sequences(const std::vector<std::size_t>& blocks,
                                                       const std::vector<std::size_t>& block_sizes) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t b : blocks)
    if (block_sizes.at(b) == 0) return out;
  std::vector<std::size_t> current(blocks.size(), 0);
  for (;;) {
    out.push_back(current);
    // odometer, last position fastest
    std::size_t pos = blocks.size();
    while (pos > 0) {
      --pos;
      if (++current[pos] < block_sizes[blocks[pos]]) break;
      current[pos] = 0;
      if (pos == 0) return out;
    }
    if (blocks.empty()) return out;
  }
}

std::vector<GraverIndexPair> graver_index_pairs(const IntVector& g, const std::vector<std::size_t>& b_blocks,
                                                const std::vector<std::size_t>& c_blocks) {
  if (g.size() != b_blocks.size() || g.size() != c_blocks.size())
    throw DimensionMismatch("Graver element length differs from the block count");
  auto betas = index_sequences(positive_support_sequence(g), b_blocks);
  auto gammas = index_sequences(negative_support_sequence(g), c_blocks);
  std::vector<GraverIndexPair> out;
  out.reserve(betas.size() * gammas.size());
  for (const auto& beta : betas)
    for (const auto& gamma : gammas) out.push_back({g, beta, gamma});
  return out;
}

MonomialFactorization monomial_factorization(const std::vector<std::size_t>& alpha,
                                             const std::vector<std::size_t>& alpha_prime,
                                             const BlockedConfiguration& A, const GraverBasis& G) {
  const std::size_t d = A.cols();
  std::vector<long> count(d, 0), count_prime(d, 0);
  for (std::size_t a : alpha) {
    if (a >= d) throw DimensionMismatch("block index out of range");
    ++count[a];
  }
  for (std::size_t a : alpha_prime) {
    if (a >= d) throw DimensionMismatch("block index out of range");
    ++count_prime[a];
  }
  IntVector c(d);
  for (std::size_t a = 0; a < d; ++a) c[a] = count[a] - count_prime[a];
  if (!is_zero(A.matrix() * c)) throw NotInKernel("degree-unbalanced pair: " + to_string(c));

  MonomialFactorization out;
  for (std::size_t a = 0; a < d; ++a)
    for (long k = 0; k < std::min(count[a], count_prime[a]); ++k) out.simple.push_back(a);
  for (auto& g : sign_consistent_decomposition(c, G))
    out.graver.push_back({g, positive_support_sequence(g), negative_support_sequence(g)});
  return out;
}

}  // namespace torfib
