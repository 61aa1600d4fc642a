#include <doctest.h>

#include "oracles.hpp"
#include "torfib/cli.hpp"
#include "torfib/datasets.hpp"
#include "torfib/error.hpp"
#include "torfib/product.hpp"
#include "torfib/veronese.hpp"

using namespace torfib;

namespace {

SegreOptions options(bool merge, bool drop) {
  SegreOptions o;
  o.merge_duplicates = merge;
  o.drop_redundant_sequences = drop;
  return o;
}

void check_degree_coherence(const ProductConfiguration& P, const GradingCertificate& cert_B,
                            const GradingCertificate& cert_C) {
  for (std::size_t j = 0; j < P.cols(); ++j) CHECK(cert_B.degree(P.top(j)) == cert_C.degree(P.bottom(j)));
}

// Degrees of all sums of at most `steps` columns of A.
std::set<IntVector> reachable(const BlockedConfiguration& A, std::size_t steps) {
  std::set<IntVector> all{zero_vector(A.rows())}, frontier = all;
  for (std::size_t s = 0; s < steps; ++s) {
    std::set<IntVector> next;
    for (const auto& p : frontier)
      for (std::size_t j = 0; j < A.cols(); ++j) next.insert(p + A.column(j));
    all.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

}  // namespace

TEST_CASE("fiber product column counts") {
  Dataset d = non_normal_product();
  ProductConfiguration P = tfp_config(d.A, d.B, d.C);
  CHECK(P.cols() == 7);
  CHECK(P.simple_count == 7);
  CHECK(P.top_rows == 3);
  CHECK(P.block_sizes == std::vector<std::size_t>{4, 2, 1});

  Dataset h = hierarchical_model();
  CHECK(tfp_config(h.A, h.B, h.C).cols() == 16);

  // C = A: one column (b ; a_alpha) per column of B.
  ProductConfiguration Q = tfp_config(d.A, d.B, d.A);
  REQUIRE(Q.cols() == 4);
  for (std::size_t j = 0; j < Q.cols(); ++j) {
    CHECK(Q.top(j) == d.B.column(j));
    CHECK(Q.bottom(j) == d.A.column(d.B.block_of_column(j)));
  }
}

TEST_CASE("simple columns are ordered by alpha, beta, gamma") {
  Dataset d = non_normal_product();
  ProductConfiguration P = tfp_config(d.A, d.B, d.C);
  std::vector<SimpleTag> expected{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, {2, 0, 0}};
  for (std::size_t j = 0; j < P.cols(); ++j) {
    REQUIRE(std::holds_alternative<SimpleTag>(P.column_index[j]));
    const auto& t = std::get<SimpleTag>(P.column_index[j]);
    CHECK(t == expected[j]);
    CHECK(P.top(j) == d.B.column(t.alpha, t.beta));
    CHECK(P.bottom(j) == d.C.column(t.alpha, t.gamma));
  }
}

TEST_CASE("inhomogeneous inputs are rejected") {
  Dataset d = non_normal_product();
  BlockedConfiguration bad(IntegerMatrix{{0, 1, 1, 1}}, {2, 1, 1});
  CHECK_THROWS_AS(tfp_config(d.A, bad, d.C), HomogeneityError);
  CHECK_THROWS_AS(segre_presentation(d.A, d.B, bad), HomogeneityError);
}

TEST_CASE("graver degrees and halves") {
  Dataset d = non_normal_product();
  CHECK(graver_degree(make_int_vector({1, 1, -2}), d.A) == make_int_vector({2, 2}));
  CHECK(graver_degree(make_int_vector({-1, -1, 2}), d.A) == make_int_vector({2, 2}));
  CHECK(graver_top(make_int_vector({-1, -1, 2}), {0, 0}, d.B) == make_int_vector({2, 2, 0}));
  CHECK(graver_bottom(make_int_vector({-1, -1, 2}), {1, 0}, d.C) == make_int_vector({0, 4, 4, 0}));
  CHECK(graver_top(make_int_vector({1, 1, -2}), {1, 0}, d.B) == make_int_vector({2, 2, 0}));
}

TEST_CASE("segre presentation of the non-normal example") {
  Dataset d = non_normal_product();
  SegrePresentation P = segre_presentation(d.A, d.B, d.C);
  CHECK(P.A_prime.cols() == 5);
  CHECK(P.product.simple_count == 7);
  CHECK(P.product.cols() == 13);
  auto G = graver_columns(P);
  REQUIRE(G.size() == 6);
  std::size_t plus = 0;
  for (const auto& c : G) plus += c.g == make_int_vector({1, 1, -2});
  CHECK(plus == 2);
  for (std::size_t i = 0; i < G.size(); ++i) {
    CHECK(G[i].column == P.product.matrix.column(P.product.simple_count + i));
    CHECK(G[i].column == vstack(IntegerMatrix::from_columns(3, {graver_top(G[i].g, G[i].beta, d.B)}),
                                IntegerMatrix::from_columns(4, {graver_bottom(G[i].g_bottom, G[i].gamma, d.C)}))
                             .column(0));
  }
  check_degree_coherence(P.product, P.cert_B, P.cert_C);
}

TEST_CASE("presentation sizes of the hierarchical model") {
  Dataset h = hierarchical_model();
  SegrePresentation full = segre_presentation(h.A, h.B, h.C);
  CHECK(full.product.cols() == 48);
  CHECK(graver_columns(full).size() == 32);
  CHECK(segre_presentation(h.A, h.B, h.C, options(false, true)).product.cols() == 24);
  CHECK(segre_presentation(h.A, h.B, h.C, options(true, false)).product.cols() == 80);
  SegrePresentation merged = segre_presentation(h.A, h.B, h.C, options(true, true));
  CHECK(merged.product.cols() == 32);
  CHECK(merged.A_prime.cols() == 5);
  CHECK(merged.extra_groups.size() == 1);
  CHECK(merged.extra_groups[0].size() == 2);
}

TEST_CASE("pruned hierarchical presentation matches the stored matrix") {
  Dataset h = hierarchical_model();
  SegrePresentation P = segre_presentation(h.A, h.B, h.C, options(false, true));
  BlockedConfiguration expected = parse_matrix_file(std::string(TORFIB_TEST_DATA) + "/hierarchical_product.txt");
  CHECK(P.product.matrix == expected.matrix());
  CHECK(P.product.block_sizes == expected.block_sizes());
}

TEST_CASE("presentation invariants") {
  std::vector<Dataset> sets{non_normal_product(), hierarchical_model()};
  for (const auto& d : sets)
    for (bool merge : {false, true})
      for (bool drop : {false, true}) {
        SegrePresentation P = segre_presentation(d.A, d.B, d.C, options(merge, drop));
        ProductConfiguration T = tfp_config(d.A, d.B, d.C);
        // Simple columns first and identical to the fiber product.
        CHECK(P.product.simple_matrix() == T.matrix);
        for (std::size_t j = 0; j < T.cols(); ++j) CHECK(P.product.column_index[j] == T.column_index[j]);
        check_degree_coherence(P.product, P.cert_B, P.cert_C);
        // A' extends A, and each new column is a non-negative combination of A.
        CHECK(P.A_prime.matrix().column_range(0, d.A.cols()) == d.A.matrix());
        for (std::size_t e = 0; e < P.extra_groups.size(); ++e) {
          for (const auto& g : P.extra_groups[e]) {
            CHECK(P.graver.contains(g));
            CHECK(graver_degree(g, d.A) == P.A_prime.column(d.A.cols() + e));
          }
        }
        // B' and C' are A'-graded.
        CHECK(check_homogeneity(P.A_prime, P.B_prime));
        CHECK(check_homogeneity(P.A_prime, P.C_prime));
        // Total degree one exactly on the simple columns.
        auto w = total_degree_functional(d.A);
        REQUIRE(w);
        GradingCertificate grading = product_grading(P);
        for (std::size_t j = 0; j < P.product.cols(); ++j) {
          RatVector deg = grading.degree(P.product.matrix.column(j));
          Rational t = 0;
          for (std::size_t i = 0; i < deg.size(); ++i) t += (*w)[i] * deg[i];
          CHECK((t == 1) == (j < P.product.simple_count));
        }
      }
}

TEST_CASE("codimension zero adds nothing") {
  auto A = BlockedConfiguration::singletons(IntegerMatrix{{1, 0}, {0, 1}});
  BlockedConfiguration B(IntegerMatrix{{1, 1, 0}, {0, 0, 1}, {0, 1, 0}}, {2, 1});
  SegrePresentation P = segre_presentation(A, B, B);
  CHECK(P.product.matrix == tfp_config(A, B, B).matrix);
  CHECK(graver_columns(P).empty());
  CHECK(P.A_prime == A);
}

TEST_CASE("neutral fiber products") {
  Dataset d = non_normal_product();
  CHECK(check_neutral_tfp(d.A, d.C));
  CHECK(check_neutral_tfp(d.A, d.A));
  auto ones = BlockedConfiguration::singletons(IntegerMatrix{{1, 1, 1}});
  CHECK(check_neutral_tfp(ones, veronese_config(2, 2).config));
  Dataset h = hierarchical_model();
  CHECK(check_neutral_tfp(h.A, h.B));
}

TEST_CASE("degree fiber counts") {
  Dataset d = non_normal_product();
  GradingCertificate identity{to_rational(IntegerMatrix::identity(2)), d.A};
  CHECK(degree_fiber_count(d.A, identity, zero_vector(2), 100) == 1);
  for (const auto& a : reachable(d.A, 4)) CHECK(degree_fiber_count(d.A, identity, a, 10000) == 1);

  VeroneseConfiguration V = veronese_config(2, 2);
  GradingCertificate v_identity{to_rational(IntegerMatrix::identity(2)), V.config};
  CHECK(degree_fiber_count(V.config, v_identity, make_int_vector({2, 2}), 1000) == 1);
  CHECK(degree_fiber_count(V.config, v_identity, make_int_vector({1, 2}), 1000) == 0);

  // C graded by A: the fiber over a_1 + a_2 holds the distinct points of NC of
  // that degree, counted here by brute force over small multiplicities.
  GradingCertificate cert_C = *check_homogeneity(d.A, d.C);
  for (const auto& a : reachable(d.A, 2)) {
    std::set<IntVector> points;
    for (long x0 = 0; x0 <= 2; ++x0)
      for (long x1 = 0; x1 <= 2; ++x1)
        for (long x2 = 0; x2 <= 2; ++x2)
          for (long x3 = 0; x3 <= 2; ++x3)
            for (long x4 = 0; x4 <= 2; ++x4) {
              IntVector p = d.C.matrix() * make_int_vector({x0, x1, x2, x3, x4});
              if (cert_C.degree(p) == to_rational(a)) points.insert(p);
            }
    CHECK(degree_fiber_count(d.C, cert_C, a, 100000) == points.size());
  }

  CHECK_THROWS_AS(degree_fiber_count(d.C, cert_C, make_int_vector({40, 40}), 5), InconclusiveError);
  BlockedConfiguration with_zero(IntegerMatrix{{1, 0}}, {1, 1});
  GradingCertificate z{to_rational(IntegerMatrix{{1}}), BlockedConfiguration::singletons(IntegerMatrix{{1, 0}})};
  CHECK_THROWS_AS(degree_fiber_count(with_zero, z, make_int_vector({1}), 100), PreconditionViolation);
}

TEST_CASE("segre presentation over a neutral factor keeps the fibers of C") {
  Dataset d = non_normal_product();
  GradingCertificate cert_C = *check_homogeneity(d.A, d.C);
  SegrePresentation S = segre_presentation(d.A, d.A, d.C);
  GradingCertificate cert_S = product_grading(S);
  for (const auto& a : reachable(d.A, 4))
    CHECK(degree_fiber_count(S.product.blocked(), cert_S, a, 100000) == degree_fiber_count(d.C, cert_C, a, 100000));
}
