#include "torfib/veronese.hpp"

#include <algorithm>

#include "torfib/error.hpp"
#include "torfib/graver.hpp"

namespace torfib {

namespace {

void multi_indices(std::size_t k, std::size_t n, std::size_t start, MultiIndex& current,
                   std::vector<MultiIndex>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t x = start; x < n; ++x) {
    current.push_back(x);
    multi_indices(k, n, x, current, out);
    current.pop_back();
  }
}

}  // namespace

std::size_t VeroneseConfiguration::position(const MultiIndex& iota) const {
  auto it = std::lower_bound(multi_indices.begin(), multi_indices.end(), iota);
  if (it == multi_indices.end() || *it != iota) throw InvalidConfiguration("not a multi-index of this configuration");
  return static_cast<std::size_t>(it - multi_indices.begin());
}

IntVector veronese_vector(const MultiIndex& iota, std::size_t n) {
  IntVector v = zero_vector(n);
  for (std::size_t x : iota) {
    if (x >= n) throw DimensionMismatch("multi-index entry out of range");
    v[x] += 1;
  }
  return v;
}

VeroneseConfiguration veronese_config(std::size_t k, std::size_t n) {
  if (k < 1 || n < 1) throw InvalidConfiguration("Veronese configurations need k >= 1 and n >= 1");
  VeroneseConfiguration V;
  V.k = k;
  V.n = n;
  MultiIndex current;
  multi_indices(k, n, 0, current, V.multi_indices);
  std::vector<IntVector> columns;
  for (const auto& iota : V.multi_indices) columns.push_back(veronese_vector(iota, n));
  V.config = BlockedConfiguration::singletons(IntegerMatrix::from_columns(n, columns));
  return V;
}

PartitionGrading::PartitionGrading(std::size_t n1, std::vector<std::vector<std::size_t>> parts)
    : parts_(std::move(parts)), p1_(n1, n1) {
  for (std::size_t part = 0; part < parts_.size(); ++part) {
    if (parts_[part].empty()) throw InvalidConfiguration("partition has an empty part");
    for (std::size_t x : parts_[part]) {
      if (x >= n1) throw InvalidConfiguration("partition element " + std::to_string(x + 1) + " out of range");
      if (p1_[x] != n1) throw InvalidConfiguration("element " + std::to_string(x + 1) + " lies in two parts");
      p1_[x] = part;
    }
  }
  for (std::size_t x = 0; x < n1; ++x)
    if (p1_[x] == n1) throw InvalidConfiguration("element " + std::to_string(x + 1) + " lies in no part");
}

MultiIndex PartitionGrading::image(const MultiIndex& lambda) const {
  MultiIndex out;
  for (std::size_t x : lambda) out.push_back(p1(x));
  std::sort(out.begin(), out.end());
  return out;
}

IntegerMatrix PartitionGrading::matrix() const {
  IntegerMatrix M(n0(), n1());
  for (std::size_t x = 0; x < n1(); ++x) M(p1_[x], x) = 1;
  return M;
}

PartitionedVeronese partition_blocked_config(std::size_t k, const PartitionGrading& grading) {
  PartitionedVeronese pv;
  pv.grading = grading;
  pv.base = veronese_config(k, grading.n0());
  pv.fine = veronese_config(k, grading.n1());
  pv.A = pv.base.config;

  std::vector<std::vector<std::size_t>> members(pv.base.size());
  for (std::size_t j = 0; j < pv.fine.size(); ++j)
    members[pv.base.position(grading.image(pv.fine.multi_indices[j]))].push_back(j);

  std::vector<IntVector> columns;
  std::vector<std::size_t> sizes;
  pv.b_column_of_fine.assign(pv.fine.size(), 0);
  for (const auto& block : members) {
    sizes.push_back(block.size());
    for (std::size_t j : block) {
      pv.b_column_of_fine[j] = columns.size();
      columns.push_back(pv.fine.config.column(j));
      pv.b_multi_indices.push_back(pv.fine.multi_indices[j]);
    }
  }
  pv.B = BlockedConfiguration(IntegerMatrix::from_columns(grading.n1(), columns), sizes);
  return pv;
}

std::vector<std::size_t> kappa_rearrangement(const IntVector& g, const std::vector<std::size_t>& beta,
                                             const PartitionedVeronese& pv) {
  const BlockedConfiguration& A = pv.A;
  const BlockedConfiguration& B = pv.B;
  if (g.size() != A.cols()) throw PreconditionViolation("Graver element length differs from the base");
  if (!is_zero(A.matrix() * g)) throw PreconditionViolation(to_string(g) + " is not a kernel element");
  const auto alpha = positive_support_sequence(g);
  const auto alpha_prime = negative_support_sequence(g);
  if (beta.size() != alpha.size()) throw PreconditionViolation("index sequence length differs from the support");

  // The fine indices lambda_{j,i} of all b^{alpha_j}_{beta_j}, as one multiset.
  std::vector<std::size_t> pool;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (beta[j] >= B.block_size(alpha[j])) throw PreconditionViolation("index out of range for its block");
    const MultiIndex& lambda = pv.b_multi_indices[B.block_offset(alpha[j]) + beta[j]];
    pool.insert(pool.end(), lambda.begin(), lambda.end());
  }
  std::sort(pool.begin(), pool.end());

  std::vector<std::size_t> beta_prime;
  for (std::size_t j = 0; j < alpha_prime.size(); ++j) {
    const MultiIndex& iota = pv.base.multi_indices[alpha_prime[j]];
    MultiIndex picked;
    for (std::size_t i = 0; i < iota.size(); ++i) {
      auto it = std::find_if(pool.begin(), pool.end(), [&](std::size_t x) { return pv.grading.p1(x) == iota[i]; });
      if (it == pool.end()) throw PreconditionViolation("fine indices do not cover the negative support");
      picked.push_back(*it);
      pool.erase(it);
    }
    std::sort(picked.begin(), picked.end());
    std::size_t col = pv.b_column_of_fine[pv.fine.position(picked)];
    beta_prime.push_back(col - B.block_offset(alpha_prime[j]));
  }
  if (!pool.empty()) throw PreconditionViolation("fine indices left over");
  return beta_prime;
}

std::vector<std::size_t> kappa_rearrangement(const IntVector& g, const std::vector<std::size_t>& beta,
                                             const PartitionGrading& grading, std::size_t k) {
  return kappa_rearrangement(g, beta, partition_blocked_config(k, grading));
}

}  // namespace torfib
