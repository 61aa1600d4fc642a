#include "torfib/product.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "torfib/criteria.hpp"
#include "torfib/error.hpp"
#include "torfib/intlin.hpp"

namespace torfib {

IntVector ProductConfiguration::top(std::size_t j) const {
  IntVector v(top_rows);
  for (std::size_t i = 0; i < top_rows; ++i) v[i] = matrix(i, j);
  return v;
}

IntVector ProductConfiguration::bottom(std::size_t j) const {
  IntVector v(matrix.rows() - top_rows);
  for (std::size_t i = top_rows; i < matrix.rows(); ++i) v[i - top_rows] = matrix(i, j);
  return v;
}

namespace {

struct ProductBuilder {
  std::size_t top_rows;
  std::size_t bottom_rows;
  std::vector<IntVector> columns;
  std::vector<ColumnTag> tags;

  void add(const IntVector& top, const IntVector& bottom, ColumnTag tag) {
    IntVector col;
    col.reserve(top_rows + bottom_rows);
    col.insert(col.end(), top.begin(), top.end());
    col.insert(col.end(), bottom.begin(), bottom.end());
    columns.push_back(std::move(col));
    tags.push_back(std::move(tag));
  }

  ProductConfiguration finish(std::size_t simple_count, std::vector<std::size_t> block_sizes) {
    ProductConfiguration P;
    P.matrix = IntegerMatrix::from_columns(top_rows + bottom_rows, columns);
    P.column_index = std::move(tags);
    P.simple_count = simple_count;
    P.top_rows = top_rows;
    P.block_sizes = std::move(block_sizes);
    return P;
  }
};

void add_simple_columns(ProductBuilder& builder, const BlockedConfiguration& B, const BlockedConfiguration& C,
                        std::vector<std::size_t>& block_sizes) {
  for (std::size_t alpha = 0; alpha < B.block_count(); ++alpha) {
    for (std::size_t beta = 0; beta < B.block_size(alpha); ++beta)
      for (std::size_t gamma = 0; gamma < C.block_size(alpha); ++gamma)
        builder.add(B.column(alpha, beta), C.column(alpha, gamma), SimpleTag{alpha, beta, gamma});
    block_sizes.push_back(B.block_size(alpha) * C.block_size(alpha));
  }
}

IntVector sum_over(const std::vector<std::size_t>& blocks, const std::vector<std::size_t>& within,
                   const BlockedConfiguration& X) {
  if (blocks.size() != within.size()) throw DimensionMismatch("index sequence length differs from the support");
  IntVector v = zero_vector(X.rows());
  for (std::size_t i = 0; i < blocks.size(); ++i) v += X.column(blocks[i], within[i]);
  return v;
}

}  // namespace

ProductConfiguration tfp_config(const BlockedConfiguration& A, const BlockedConfiguration& B,
                                const BlockedConfiguration& C) {
  require_homogeneity(A, B, "B");
  require_homogeneity(A, C, "C");
  ProductBuilder builder{B.rows(), C.rows(), {}, {}};
  std::vector<std::size_t> block_sizes;
  add_simple_columns(builder, B, C, block_sizes);
  std::size_t simple = builder.columns.size();
  return builder.finish(simple, std::move(block_sizes));
}

IntVector graver_degree(const IntVector& g, const BlockedConfiguration& A) {
  if (g.size() != A.cols()) throw DimensionMismatch("Graver element length differs from the column count");
  IntVector a = zero_vector(A.rows());
  for (std::size_t alpha = 0; alpha < g.size(); ++alpha)
    if (sgn(g[alpha]) > 0) a += g[alpha] * A.column(alpha);
  return a;
}

IntVector graver_top(const IntVector& g, const std::vector<std::size_t>& beta, const BlockedConfiguration& B) {
  return sum_over(positive_support_sequence(g), beta, B);
}

IntVector graver_bottom(const IntVector& g, const std::vector<std::size_t>& gamma, const BlockedConfiguration& C) {
  return sum_over(negative_support_sequence(g), gamma, C);
}

namespace {

// Index sequences of one Graver element together with the vectors they sum to.
struct GraverSide {
  std::vector<std::vector<std::size_t>> sequences;
  std::vector<IntVector> vectors;
};

struct GraverSides {
  IntVector g;
  GraverSide top;
  GraverSide bottom;
};

GraverSides sides_of(const IntVector& g, const BlockedConfiguration& B, const BlockedConfiguration& C) {
  GraverSides s;
  s.g = g;
  s.top.sequences = index_sequences(positive_support_sequence(g), B.block_sizes());
  for (const auto& beta : s.top.sequences) s.top.vectors.push_back(graver_top(g, beta, B));
  s.bottom.sequences = index_sequences(negative_support_sequence(g), C.block_sizes());
  for (const auto& gamma : s.bottom.sequences) s.bottom.vectors.push_back(graver_bottom(g, gamma, C));
  return s;
}

void keep_only(GraverSide& side, const std::vector<char>& keep) {
  GraverSide out;
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (keep[i]) {
      out.sequences.push_back(std::move(side.sequences[i]));
      out.vectors.push_back(std::move(side.vectors[i]));
    }
  side = std::move(out);
}

// Drops index sequences all of whose Graver columns are redundant.
void prune(GraverSides& s, const NonnegativeIntegerSolver& solver) {
  std::vector<char> keep_top(s.top.sequences.size(), 0), keep_bottom(s.bottom.sequences.size(), 0);
  for (std::size_t i = 0; i < keep_top.size(); ++i)
    for (std::size_t j = 0; j < keep_bottom.size(); ++j) {
      if (keep_top[i] && keep_bottom[j]) continue;
      IntVector m = s.top.vectors[i];
      m.insert(m.end(), s.bottom.vectors[j].begin(), s.bottom.vectors[j].end());
      if (!solver.solve(m)) keep_top[i] = keep_bottom[j] = 1;
    }
  keep_only(s.top, keep_top);
  keep_only(s.bottom, keep_bottom);
}

}  // namespace

SegrePresentation segre_presentation(const BlockedConfiguration& A, const BlockedConfiguration& B,
                                     const BlockedConfiguration& C, const SegreOptions& options) {
  SegrePresentation P;
  P.cert_B = require_homogeneity(A, B, "B");
  P.cert_C = require_homogeneity(A, C, "C");
  P.graver = graver_basis(A);

  ProductBuilder builder{B.rows(), C.rows(), {}, {}};
  std::vector<std::size_t> block_sizes;
  add_simple_columns(builder, B, C, block_sizes);
  const std::size_t simple = builder.columns.size();

  std::vector<GraverSides> sides;
  for (const auto& g : P.graver.elements) sides.push_back(sides_of(g, B, C));
  if (options.drop_redundant_sequences && !sides.empty()) {
    NonnegativeIntegerSolver solver(IntegerMatrix::from_columns(B.rows() + C.rows(), builder.columns));
    for (auto& s : sides) prune(s, solver);
  }

  // Group Graver elements by a^g; without merging every group is a singleton.
  std::vector<IntVector> degrees;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t e = 0; e < sides.size(); ++e) {
    IntVector a = graver_degree(sides[e].g, A);
    std::size_t target = groups.size();
    if (options.merge_duplicates) {
      auto it = std::find(degrees.begin(), degrees.end(), a);
      if (it != degrees.end()) target = static_cast<std::size_t>(it - degrees.begin());
    }
    if (target == groups.size()) {
      degrees.push_back(std::move(a));
      groups.emplace_back();
    }
    groups[target].push_back(e);
  }

  std::vector<IntVector> extra_a, extra_b, extra_c;
  std::vector<std::size_t> blocks_b = B.block_sizes(), blocks_c = C.block_sizes();
  for (std::size_t k = 0; k < groups.size(); ++k) {
    extra_a.push_back(degrees[k]);
    std::vector<IntVector> members;
    std::size_t tops = 0, bottoms = 0;
    for (std::size_t e : groups[k]) {
      members.push_back(sides[e].g);
      for (const auto& v : sides[e].top.vectors) extra_b.push_back(v);
      for (const auto& v : sides[e].bottom.vectors) extra_c.push_back(v);
      tops += sides[e].top.sequences.size();
      bottoms += sides[e].bottom.sequences.size();
    }
    blocks_b.push_back(tops);
    blocks_c.push_back(bottoms);
    P.extra_groups.push_back(std::move(members));

    const std::size_t block = A.cols() + k;
    for (std::size_t t : groups[k])
      for (std::size_t i = 0; i < sides[t].top.sequences.size(); ++i)
        for (std::size_t u : groups[k])
          for (std::size_t j = 0; j < sides[u].bottom.sequences.size(); ++j)
            builder.add(sides[t].top.vectors[i], sides[u].bottom.vectors[j],
                        GraverTag{block, sides[t].g, sides[t].top.sequences[i], sides[u].g,
                                  sides[u].bottom.sequences[j]});
    block_sizes.push_back(tops * bottoms);
  }

  P.A_prime = BlockedConfiguration::singletons(hstack(A.matrix(), IntegerMatrix::from_columns(A.rows(), extra_a)));
  P.B_prime = BlockedConfiguration(hstack(B.matrix(), IntegerMatrix::from_columns(B.rows(), extra_b)), blocks_b);
  P.C_prime = BlockedConfiguration(hstack(C.matrix(), IntegerMatrix::from_columns(C.rows(), extra_c)), blocks_c);
  P.product = builder.finish(simple, std::move(block_sizes));
  return P;
}

std::vector<GraverColumn> graver_columns(const SegrePresentation& P) {
  std::vector<GraverColumn> out;
  const auto& M = P.product;
  for (std::size_t j = M.simple_count; j < M.cols(); ++j) {
    const auto& tag = std::get<GraverTag>(M.column_index[j]);
    out.push_back({tag.g, tag.beta, tag.g_bottom, tag.gamma, M.matrix.column(j)});
  }
  return out;
}

bool check_neutral_tfp(const BlockedConfiguration& A, const BlockedConfiguration& C) {
  if (!A.all_singletons()) throw PreconditionViolation("the neutral configuration must have one column per block");
  ProductConfiguration P = tfp_config(A, A, C);
  return integer_kernel(P.matrix) == integer_kernel(C.matrix());
}

GradingCertificate product_grading(const ProductConfiguration& P, const GradingCertificate& cert_B) {
  const RationalMatrix& M = cert_B.degree_matrix;
  if (M.cols() != P.top_rows) throw DimensionMismatch("certificate does not act on the top half");
  RationalMatrix D(M.rows(), P.matrix.rows());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) D(i, j) = M(i, j);
  return GradingCertificate{std::move(D), cert_B.target};
}

GradingCertificate product_grading(const SegrePresentation& P) { return product_grading(P.product, P.cert_B); }

std::size_t degree_fiber_count(const BlockedConfiguration& D, const GradingCertificate& cert, const IntVector& a,
                               std::size_t bound) {
  const RationalMatrix& M = cert.degree_matrix;
  if (M.cols() != D.rows()) throw DimensionMismatch("certificate does not act on the configuration");
  if (a.size() != M.rows()) throw DimensionMismatch("degree has the wrong length");

  // Degrees of the generators, each scaled to an integer vector for the
  // positivity test (scaling by a positive factor keeps the sign of w . x).
  std::vector<RatVector> degrees;
  IntegerMatrix scaled(M.rows(), D.cols());
  for (std::size_t j = 0; j < D.cols(); ++j) {
    RatVector d = multiply(M, D.column(j));
    if (is_zero(d)) throw PreconditionViolation("generator " + std::to_string(j + 1) + " has degree zero");
    Integer den = 1;
    for (const auto& x : d) den = lcm(den, Integer(x.get_den()));
    for (std::size_t i = 0; i < d.size(); ++i) scaled(i, j) = Integer(d[i] * den);
    degrees.push_back(std::move(d));
  }
  auto w = positive_functional(scaled);
  if (!w) throw PreconditionViolation("generator degrees do not lie in a pointed cone");
  RatVector wr = to_rational(*w);
  auto weight = [&](const RatVector& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += wr[i] * v[i];
    return s;
  };
  const RatVector target = to_rational(a);
  const Rational target_weight = weight(target);

  // Breadth-first search over monoid points, keyed by the point itself.
  std::unordered_set<IntVector, IntVectorHash> seen;
  std::deque<IntVector> queue;
  IntVector origin = zero_vector(D.rows());
  seen.insert(origin);
  queue.push_back(origin);
  std::size_t count = 0, applications = 0;
  while (!queue.empty()) {
    IntVector p = std::move(queue.front());
    queue.pop_front();
    RatVector deg = multiply(M, p);
    if (deg == target) {
      ++count;
      continue;  // every generator raises the weight, so nothing above stays in the fiber
    }
    for (std::size_t j = 0; j < D.cols(); ++j) {
      if (++applications > bound)
        throw InconclusiveError("degree fiber search exceeded " + std::to_string(bound) + " generator applications");
      RatVector next_deg = deg;
      for (std::size_t i = 0; i < next_deg.size(); ++i) next_deg[i] += degrees[j][i];
      if (weight(next_deg) > target_weight) continue;
      IntVector q = p + D.column(j);
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  return count;
}

}  // namespace torfib
