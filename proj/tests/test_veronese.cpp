#include <doctest.h>

#include "oracles.hpp"
#include "torfib/criteria.hpp"
#include "torfib/error.hpp"
#include "torfib/veronese.hpp"

using namespace torfib;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Every index sequence for -g whose top sum matches that of (g, beta).
std::vector<std::vector<std::size_t>> matching_sequences(const IntVector& g, const std::vector<std::size_t>& beta,
                                                         const BlockedConfiguration& B) {
  std::vector<std::vector<std::size_t>> out;
  IntVector target = graver_top(g, beta, B);
  for (const auto& other : index_sequences(positive_support_sequence(-g), B.block_sizes()))
    if (graver_top(-g, other, B) == target) out.push_back(other);
  return out;
}

void check_kappa_everywhere(const PartitionedVeronese& pv) {
  GraverBasis G = graver_basis(pv.A);
  for (const auto& g : G.elements)
    for (const auto& beta : index_sequences(positive_support_sequence(g), pv.B.block_sizes())) {
      auto candidates = matching_sequences(g, beta, pv.B);
      REQUIRE_FALSE(candidates.empty());
      auto kappa = kappa_rearrangement(g, beta, pv);
      CHECK(graver_top(g, beta, pv.B) == graver_top(-g, kappa, pv.B));
      CHECK(std::find(candidates.begin(), candidates.end(), kappa) != candidates.end());
      CHECK(kappa_rearrangement(g, beta, pv.grading, pv.base.k) == kappa);
    }
}

}  // namespace

TEST_CASE("veronese configurations") {
  VeroneseConfiguration V = veronese_config(2, 2);
  CHECK(V.config.matrix() == IntegerMatrix{{2, 1, 0}, {0, 1, 2}});
  CHECK(V.multi_indices == std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(V.position({0, 1}) == 1);
  CHECK(veronese_config(1, 4).config.matrix() == IntegerMatrix::identity(4));
  CHECK(veronese_config(3, 3).size() == 10);
  CHECK(veronese_vector({0, 2, 2}, 3) == make_int_vector({1, 0, 2}));
  CHECK_THROWS(veronese_config(0, 2));
  CHECK_THROWS(veronese_config(2, 0));

  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t n = 1; n <= 4; ++n) {
      VeroneseConfiguration W = veronese_config(k, n);
      CHECK(W.size() == binomial(n + k - 1, k));
      std::set<IntVector> distinct;
      for (std::size_t j = 0; j < W.size(); ++j) {
        IntVector c = W.config.column(j);
        Integer sum = 0;
        for (const auto& x : c) sum += x;
        CHECK(sum == k);
        CHECK(c == veronese_vector(W.multi_indices[j], n));
        CHECK(W.position(W.multi_indices[j]) == j);
        distinct.insert(c);
      }
      CHECK(distinct.size() == W.size());
      CHECK(std::is_sorted(W.multi_indices.begin(), W.multi_indices.end()));
    }
}

TEST_CASE("partition gradings") {
  PartitionGrading p(3, {{0, 1}, {2}});
  CHECK(p.n0() == 2);
  CHECK(p.p1(1) == 0);
  CHECK(p.p1(2) == 1);
  CHECK(p.image({1, 2}) == MultiIndex{0, 1});
  CHECK(p.matrix() == IntegerMatrix{{1, 1, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(PartitionGrading(3, {{0, 1}}), InvalidConfiguration);
  CHECK_THROWS_AS(PartitionGrading(3, {{0, 1}, {1, 2}}), InvalidConfiguration);
  CHECK_THROWS_AS(PartitionGrading(2, {{0, 1}, {}}), InvalidConfiguration);
  CHECK_THROWS_AS(PartitionGrading(2, {{0, 5}}), InvalidConfiguration);
}

TEST_CASE("partition blocked configurations") {
  PartitionedVeronese pv = partition_blocked_config(2, PartitionGrading(3, {{0, 1}, {2}}));
  CHECK(pv.A.matrix() == veronese_config(2, 2).config.matrix());
  CHECK(pv.A.all_singletons());
  CHECK(pv.B.cols() == 6);
  CHECK(pv.B.block_sizes() == std::vector<std::size_t>{3, 2, 1});
  auto cert = check_homogeneity(pv.A, pv.B);
  REQUIRE(cert);
  CHECK(cert->degree_matrix == to_rational(pv.grading.matrix()));
  for (std::size_t j = 0; j < pv.B.cols(); ++j) {
    CHECK(pv.B.column(j) == veronese_vector(pv.b_multi_indices[j], 3));
    CHECK(pv.grading.image(pv.b_multi_indices[j]) == pv.base.multi_indices[pv.B.block_of_column(j)]);
  }
  for (std::size_t f = 0; f < pv.fine.size(); ++f)
    CHECK(pv.B.column(pv.b_column_of_fine[f]) == pv.fine.config.column(f));

  PartitionedVeronese same = partition_blocked_config(2, PartitionGrading(2, {{0}, {1}}));
  CHECK(same.B.matrix() == same.A.matrix());
  CHECK(same.B.all_singletons());
}

TEST_CASE("kappa on the small partition") {
  check_kappa_everywhere(partition_blocked_config(2, PartitionGrading(3, {{0, 1}, {2}})));
}

TEST_CASE("kappa on larger partitions") {
  check_kappa_everywhere(partition_blocked_config(2, PartitionGrading(4, {{0, 1}, {2, 3}})));
  check_kappa_everywhere(partition_blocked_config(2, PartitionGrading(4, {{0}, {1, 2, 3}})));
  check_kappa_everywhere(partition_blocked_config(3, PartitionGrading(3, {{0, 1}, {2}})));
  check_kappa_everywhere(partition_blocked_config(2, PartitionGrading(4, {{0, 2}, {1}, {3}})));
}

TEST_CASE("kappa rejects bad input") {
  PartitionedVeronese pv = partition_blocked_config(2, PartitionGrading(3, {{0, 1}, {2}}));
  CHECK_THROWS_AS(kappa_rearrangement(make_int_vector({1, 0, 0}), {0}, pv), PreconditionViolation);
  CHECK_THROWS_AS(kappa_rearrangement(make_int_vector({1, -2, 1}), {0}, pv), PreconditionViolation);
  CHECK_THROWS_AS(kappa_rearrangement(make_int_vector({1, -2, 1}), {5, 0}, pv), PreconditionViolation);
}

TEST_CASE("graver columns over veronese bases are redundant") {
  std::vector<PartitionGrading> gradings{PartitionGrading(3, {{0, 1}, {2}}), PartitionGrading(4, {{0, 1}, {2, 3}}),
                                         PartitionGrading(4, {{0}, {1, 2, 3}})};
  for (const auto& grading : gradings) {
    PartitionedVeronese pv = partition_blocked_config(2, grading);
    for (const auto& C : {pv.B, pv.A}) {
      SegrePresentation P = segre_presentation(pv.A, pv.B, C);
      IntegerMatrix simple = P.product.simple_matrix();
      for (const auto& c : graver_columns(P)) {
        CHECK(veronese_shortcut(c.g, c.beta, pv.B));
        CHECK(is_redundant(c.column, simple));
      }
      CHECK(analyze_product(P).segre_equals_tfp);
    }
  }
}

TEST_CASE("two-fold fiber product of a veronese partition is normal") {
  PartitionedVeronese pv = partition_blocked_config(2, PartitionGrading(3, {{0, 1}, {2}}));
  ProductConfiguration P = tfp_config(pv.A, pv.B, pv.B);
  CHECK(P.cols() == 14);
  CHECK(is_normal(P.matrix).normal);
}
