#include "torfib/criteria.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "torfib/error.hpp"
#include "torfib/graver.hpp"
#include "torfib/intlin.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace torfib {

namespace {

constexpr std::size_t kMemoLimit = std::size_t{1} << 20;

struct Int64VectorHash {
  std::size_t operator()(const std::vector<long long>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (long long x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

template <class T>
struct HashFor;
template <>
struct HashFor<long long> {
  using type = Int64VectorHash;
};
template <>
struct HashFor<Integer> {
  using type = IntVectorHash;
};

template <class T>
T convert(const Integer& x) {
  if constexpr (std::is_same_v<T, Integer>)
    return x;
  else
    return x.get_si();
}

// Depth-first search for lambda >= 0 with sum lambda_i s_i = m over one
// scalar type. Holds all per-call state, so concurrent calls never share it.
template <class T>
class Search {
 public:
  Search(const std::vector<IntVector>& columns, const std::vector<Integer>& weights,
         const std::vector<std::vector<char>>& suffix_pos, const std::vector<std::vector<char>>& suffix_neg,
         const std::vector<Integer>& suffix_min_weight)
      : suffix_pos_(suffix_pos), suffix_neg_(suffix_neg), n_(columns.size()), memo_(columns.size()) {
    for (const auto& c : columns) {
      std::vector<T> col;
      for (const auto& x : c) col.push_back(convert<T>(x));
      columns_.push_back(std::move(col));
    }
    for (const auto& x : weights) weights_.push_back(convert<T>(x));
    for (const auto& x : suffix_min_weight) suffix_min_weight_.push_back(convert<T>(x));
  }

  std::optional<std::vector<T>> run(const IntVector& m, const Integer& wm) {
    r_.clear();
    for (const auto& x : m) r_.push_back(convert<T>(x));
    lambda_.assign(n_, T(0));
    if (dfs(0, convert<T>(wm))) return lambda_;
    return std::nullopt;
  }

 private:
  bool residual_zero() const {
    for (const auto& x : r_)
      if (x != 0) return false;
    return true;
  }

  bool signs_reachable(std::size_t i) const {
    for (std::size_t t = 0; t < r_.size(); ++t) {
      if (r_[t] > 0 && !suffix_pos_[i][t]) return false;
      if (r_[t] < 0 && !suffix_neg_[i][t]) return false;
    }
    return true;
  }

  void axpy(const T& k, std::size_t i) {  // r -= k * s_i
    const auto& s = columns_[i];
    for (std::size_t t = 0; t < r_.size(); ++t) r_[t] -= k * s[t];
  }

  bool dfs(std::size_t i, T wr) {
    if (wr == 0) return residual_zero();
    if (i == n_) return false;
    if (wr < suffix_min_weight_[i]) return false;
    if (!signs_reachable(i)) return false;

    if (i + 1 == n_) {
      if (wr % weights_[i] != 0) return false;
      T k = wr / weights_[i];
      axpy(k, i);
      if (residual_zero()) {
        lambda_[i] = k;
        return true;
      }
      axpy(T(-1) * k, i);
      return false;
    }

    if (memo_[i].count(r_)) return false;

    T kmax = wr / weights_[i];
    axpy(kmax, i);
    for (T k = kmax;; k -= 1) {
      lambda_[i] = k;
      if (dfs(i + 1, wr - k * weights_[i])) return true;
      if (k == 0) break;
      axpy(T(-1), i);
    }
    lambda_[i] = 0;
    if (memo_size_ < kMemoLimit) {
      memo_[i].insert(r_);
      ++memo_size_;
    }
    return false;
  }

  std::vector<std::vector<T>> columns_;
  std::vector<T> weights_;
  std::vector<T> suffix_min_weight_;
  const std::vector<std::vector<char>>& suffix_pos_;
  const std::vector<std::vector<char>>& suffix_neg_;
  std::size_t n_;
  std::vector<T> r_;
  std::vector<T> lambda_;
  std::vector<std::unordered_set<std::vector<T>, typename HashFor<T>::type>> memo_;
  std::size_t memo_size_ = 0;
};

Integer abs_max(const IntVector& v) {
  Integer m = 0;
  for (const auto& x : v)
    if (abs(x) > m) m = abs(x);
  return m;
}

}  // namespace

NonnegativeIntegerSolver::NonnegativeIntegerSolver(const IntegerMatrix& S) : rows_(S.rows()), cols_(S.cols()) {
  for (std::size_t j = 0; j < cols_; ++j) {
    IntVector c = S.column(j);
    if (is_zero(c)) continue;
    active_.push_back(j);
    columns_.push_back(std::move(c));
  }
  if (columns_.empty()) {
    w_ = zero_vector(rows_);
  } else {
    auto w = positive_functional(IntegerMatrix::from_columns(rows_, columns_));
    if (!w) throw NonPointedError("the columns do not span a pointed cone; the search would be unbounded");
    w_ = std::move(*w);
  }

  max_abs_entry_ = 0;
  for (const auto& c : columns_) {
    weights_.push_back(dot(w_, c));
    max_abs_entry_ = std::max(max_abs_entry_, abs_max(c));
  }

  const std::size_t n = columns_.size();
  suffix_pos_.assign(n + 1, std::vector<char>(rows_, 0));
  suffix_neg_.assign(n + 1, std::vector<char>(rows_, 0));
  suffix_min_weight_.assign(n + 1, Integer(0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t t = 0; t < rows_; ++t) {
      suffix_pos_[i][t] = suffix_pos_[i + 1][t] || sgn(columns_[i][t]) > 0;
      suffix_neg_[i][t] = suffix_neg_[i + 1][t] || sgn(columns_[i][t]) < 0;
    }
    suffix_min_weight_[i] = (i + 1 == n) ? weights_[i] : std::min(weights_[i], suffix_min_weight_[i + 1]);
  }
}

std::optional<IntVector> NonnegativeIntegerSolver::solve(const IntVector& m) const {
  if (m.size() != rows_) throw DimensionMismatch("target length differs from the row count");
  IntVector witness = zero_vector(cols_);
  if (is_zero(m)) return witness;
  if (columns_.empty()) return std::nullopt;
  const Integer wm = dot(w_, m);
  if (sgn(wm) <= 0) return std::nullopt;

  // The residual stays within |m| + (w.m) * max|s| in every coordinate, and
  // every weight is below (w.m); check that these fit comfortably in 64 bits.
  const Integer limit = Integer(1) << 60;
  const Integer residual_bound = abs_max(m) + wm * max_abs_entry_;
  bool small = residual_bound < limit && wm < limit;
  for (const auto& x : weights_)
    if (x >= limit) small = false;

  if (small) {
    Search<long long> search(columns_, weights_, suffix_pos_, suffix_neg_, suffix_min_weight_);
    auto lambda = search.run(m, wm);
    if (!lambda) return std::nullopt;
    for (std::size_t i = 0; i < active_.size(); ++i) witness[active_[i]] = Integer(static_cast<long>((*lambda)[i]));
    return witness;
  }
  Search<Integer> search(columns_, weights_, suffix_pos_, suffix_neg_, suffix_min_weight_);
  auto lambda = search.run(m, wm);
  if (!lambda) return std::nullopt;
  for (std::size_t i = 0; i < active_.size(); ++i) witness[active_[i]] = (*lambda)[i];
  return witness;
}

std::optional<IntVector> is_redundant(const IntVector& m, const IntegerMatrix& simple) {
  if (m.size() != simple.rows()) throw DimensionMismatch("column length differs from the simple columns");
  return NonnegativeIntegerSolver(simple).solve(m);
}

std::optional<std::vector<std::size_t>> veronese_shortcut(const IntVector& g, const std::vector<std::size_t>& beta,
                                                          const BlockedConfiguration& B) {
  if (g.size() != B.block_count()) throw DimensionMismatch("Graver element length differs from the block count");
  auto support = positive_support_sequence(g);
  if (support.empty() || beta.size() != support.size()) return std::nullopt;
  const IntVector target = graver_top(g, beta, B);
  const IntVector neg = -g;
  for (const auto& candidate : index_sequences(negative_support_sequence(g), B.block_sizes()))
    if (graver_top(neg, candidate, B) == target) return candidate;
  return std::nullopt;
}

std::optional<RatVector> is_integral(const IntVector& m, const IntegerMatrix& simple) {
  if (m.size() != simple.rows()) throw DimensionMismatch("column length differs from the simple columns");
  return lp_feasible_nonneg(simple, m);
}

std::optional<IntVector> is_in_fraction_field(const IntVector& m, const IntegerMatrix& simple) {
  if (m.size() != simple.rows()) throw DimensionMismatch("column length differs from the simple columns");
  return solve_integer(simple, m);
}

namespace {

std::optional<RationalMatrix> inverse(const IntegerMatrix& M) {
  const std::size_t n = M.rows();
  RationalMatrix a = to_rational(M);
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return std::nullopt;
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a(r, c)) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Nonzero points of the half-open parallelepiped spanned by the columns of
// X picked out by sigma, or nothing when they are dependent or unimodular.
void parallelepiped_points(const std::vector<IntVector>& X, const std::vector<std::size_t>& sigma, std::size_t r,
                           std::unordered_set<IntVector, IntVectorHash>& out) {
  std::vector<IntVector> gens;
  for (std::size_t j : sigma) gens.push_back(X[j]);
  LatticeBasis sub = LatticeBasis::from_generators(r, gens);
  if (sub.rank() < r) return;
  std::vector<Integer> diag(r);
  Integer index = 1;
  for (std::size_t i = 0; i < r; ++i) {
    diag[i] = sub.basis()[i][sub.pivots()[i]];
    index *= diag[i];
  }
  if (index == 1) return;

  IntegerMatrix S = IntegerMatrix::from_columns(r, gens);
  auto inv = inverse(S);
  if (!inv) return;

  // Coset representatives of Z^r / sub are the x with 0 <= x_i < diag_i
  // (sub's basis is triangular with pivot i in column i).
  IntVector x = zero_vector(r);
  for (;;) {
    RatVector lambda = multiply(*inv, x);
    // p = sum of frac(lambda_i) * g_i, integral because x - p lies in sub.
    RatVector q(r, Rational(0));
    for (std::size_t i = 0; i < r; ++i) {
      Rational frac = lambda[i] - Rational(floor_of(lambda[i]));
      if (sgn(frac) == 0) continue;
      for (std::size_t t = 0; t < r; ++t) q[t] += frac * Rational(gens[i][t]);
    }
    IntVector point(r);
    for (std::size_t t = 0; t < r; ++t) point[t] = q[t].get_num();
    if (!is_zero(point)) out.insert(std::move(point));

    std::size_t pos = 0;
    while (pos < r) {
      x[pos] += 1;
      if (x[pos] < diag[pos]) break;
      x[pos] = 0;
      ++pos;
    }
    if (pos == r) return;
  }
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool hole_less(const IntVector& a, const Integer& wa, const IntVector& b, const Integer& wb) {
  if (wa != wb) return wa < wb;
  return a < b;
}

}  // namespace

NormalityResult is_normal(const IntegerMatrix& D, Execution exec) {
  // Distinct nonzero generators; repeats and zeros do not change ND.
  std::vector<IntVector> gens;
  {
    std::set<IntVector> seen;
    for (std::size_t j = 0; j < D.cols(); ++j) {
      IntVector c = D.column(j);
      if (is_zero(c) || !seen.insert(c).second) continue;
      gens.push_back(std::move(c));
    }
  }
  NormalityResult result;
  if (gens.empty()) return result;
  auto w = positive_functional(IntegerMatrix::from_columns(D.rows(), gens));
  if (!w) throw NonPointedError("the generators do not span a pointed cone");

  // Work in coordinates of the group generated by the columns, where it is Z^r.
  LatticeBasis L = LatticeBasis::from_generators(D.rows(), gens);
  const std::size_t r = L.rank();
  std::vector<IntVector> X;
  for (const auto& g : gens) X.push_back(*L.coordinates(g));
  const std::size_t n = X.size();

  std::unordered_set<IntVector, IntVectorHash> points;
  std::vector<std::size_t> sigma(r);
  for (std::size_t i = 0; i < r; ++i) sigma[i] = i;
  bool more = true;
  constexpr std::size_t kBatch = 1024;
  while (more) {
    std::vector<std::vector<std::size_t>> batch;
    while (more && batch.size() < kBatch) {
      batch.push_back(sigma);
      more = next_combination(sigma, n);
    }
    if (exec == Execution::serial) {
      for (const auto& s : batch) parallelepiped_points(X, s, r, points);
      continue;
    }
#pragma omp parallel
    {
      std::unordered_set<IntVector, IntVectorHash> local;
#pragma omp for schedule(dynamic)
      for (std::size_t b = 0; b < batch.size(); ++b) parallelepiped_points(X, batch[b], r, local);
#pragma omp critical
      points.insert(local.begin(), local.end());
    }
  }

  std::vector<IntVector> candidates(points.begin(), points.end());
  std::sort(candidates.begin(), candidates.end());
  NonnegativeIntegerSolver solver(IntegerMatrix::from_columns(r, X));
  std::vector<char> missing(candidates.size(), 0);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < candidates.size(); ++i) missing[i] = !solver.solve(candidates[i]);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < candidates.size(); ++i) missing[i] = !solver.solve(candidates[i]);
  }

  Integer best_weight;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!missing[i]) continue;
    IntVector hole = L.combine(candidates[i]);
    Integer weight = dot(*w, hole);
    if (!result.hole || hole_less(hole, weight, *result.hole, best_weight)) {
      result.hole = std::move(hole);
      best_weight = weight;
    }
  }
  result.normal = !result.hole.has_value();
  return result;
}

ProductReport analyze_product(const SegrePresentation& P, const AnalyzeOptions& options) {
  const ProductConfiguration& M = P.product;
  const IntegerMatrix simple = M.simple_matrix();
  const NonnegativeIntegerSolver solver(simple);

  const std::size_t count = M.cols() - M.simple_count;
  ProductReport report;
  report.verdicts.resize(count);
  auto judge = [&](std::size_t k) {
    const std::size_t j = M.simple_count + k;
    ColumnVerdict& v = report.verdicts[k];
    v.column_tag = std::get<GraverTag>(M.column_index[j]);
    v.column = M.matrix.column(j);
    v.redundant_witness = solver.solve(v.column);
    v.integral_witness = lp_feasible_nonneg(simple, v.column);
    v.fraction_witness = solve_integer(simple, v.column);
    v.redundant = v.redundant_witness.has_value();
    v.integral = v.integral_witness.has_value();
    v.in_fraction_field = v.fraction_witness.has_value();
  };
  if (options.exec == Execution::serial) {
    for (std::size_t k = 0; k < count; ++k) judge(k);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < count; ++k) judge(k);
  }

  for (const auto& v : report.verdicts) {
    report.all_redundant = report.all_redundant && v.redundant;
    report.dense = report.dense && v.in_fraction_field;
    report.finite = report.finite && v.integral;
  }
  report.segre_equals_tfp = report.all_redundant;
  report.normalization_equals_segre = report.dense && report.finite && !report.all_redundant;
  if (options.check_tfp_normal) report.tfp_normal = is_normal(simple, options.exec).normal;
  return report;
}

}  // namespace torfib
