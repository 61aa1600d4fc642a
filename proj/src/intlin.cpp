#include "torfib/intlin.hpp"

#include <cassert>
#include <utility>

namespace torfib {

namespace {

// Replaces rows (r, i) of M by (s*row_r + t*row_i, -q*row_r + p*row_i).
void combine_rows(IntegerMatrix& M, std::size_t r, std::size_t i, const Integer& s, const Integer& t,
                  const Integer& q, const Integer& p) {
  for (std::size_t j = 0; j < M.cols(); ++j) {
    Integer x = M(r, j);
    Integer y = M(i, j);
    M(r, j) = s * x + t * y;
    M(i, j) = p * y - q * x;
  }
}

void negate_row(IntegerMatrix& M, std::size_t r) {
  for (std::size_t j = 0; j < M.cols(); ++j) M(r, j) = -M(r, j);
}

void subtract_row_multiple(IntegerMatrix& M, std::size_t target, std::size_t source, const Integer& k) {
  for (std::size_t j = 0; j < M.cols(); ++j) M(target, j) -= k * M(source, j);
}

// Gauss-Jordan over Q on [left | right], pivoting only inside the first
// `left_cols` columns. Returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& T, std::size_t left_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < left_cols && r < T.rows(); ++c) {
    std::size_t p = r;
    while (p < T.rows() && sgn(T(p, c)) == 0) ++p;
    if (p == T.rows()) continue;
    T.swap_rows(p, r);
    Rational inv = 1 / T(r, c);
    for (std::size_t j = 0; j < T.cols(); ++j) T(r, j) *= inv;
    for (std::size_t i = 0; i < T.rows(); ++i) {
      if (i == r || sgn(T(i, c)) == 0) continue;
      Rational f = T(i, c);
      for (std::size_t j = 0; j < T.cols(); ++j) T(i, j) -= f * T(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

HermiteForm hermite_normal_form(const IntegerMatrix& M) {
  HermiteForm out{M, IntegerMatrix::identity(M.rows()), {}};
  IntegerMatrix& H = out.H;
  IntegerMatrix& U = out.U;
  const std::size_t m = H.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols() && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (sgn(H(i, c)) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), H(r, c).get_mpz_t(), H(i, c).get_mpz_t());
      Integer p = H(r, c) / g;
      Integer q = H(i, c) / g;
      combine_rows(H, r, i, s, t, q, p);
      combine_rows(U, r, i, s, t, q, p);
    }
    if (sgn(H(r, c)) == 0) continue;
    if (sgn(H(r, c)) < 0) {
      negate_row(H, r);
      negate_row(U, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer k;
      mpz_fdiv_q(k.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
      if (sgn(k) == 0) continue;
      subtract_row_multiple(H, i, r, k);
      subtract_row_multiple(U, i, r, k);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  return out;
}

LatticeBasis LatticeBasis::from_generators(std::size_t ambient_dim, const std::vector<IntVector>& generators) {
  LatticeBasis L;
  L.ambient_dim_ = ambient_dim;
  if (generators.empty()) {
    L.hnf_ = IntegerMatrix(0, ambient_dim);
    return L;
  }
  IntegerMatrix G = IntegerMatrix::from_rows(ambient_dim, generators);
  HermiteForm hf = hermite_normal_form(G);
  L.hnf_ = hf.H.row_range(0, hf.rank());
  L.pivots_ = hf.pivot_columns;
  for (std::size_t i = 0; i < hf.rank(); ++i) L.basis_.push_back(hf.H.row(i));
  return L;
}

std::optional<IntVector> LatticeBasis::coordinates(const IntVector& v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("lattice membership: vector has wrong length");
  IntVector rem = v;
  IntVector coeff(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (!mpz_divisible_p(rem[p].get_mpz_t(), basis_[i][p].get_mpz_t())) return std::nullopt;
    coeff[i] = rem[p] / basis_[i][p];
    if (sgn(coeff[i]) != 0)
      for (std::size_t j = p; j < ambient_dim_; ++j) rem[j] -= coeff[i] * basis_[i][j];
  }
  if (!is_zero(rem)) return std::nullopt;
  return coeff;
}

IntVector LatticeBasis::combine(const IntVector& coordinates) const {
  assert(coordinates.size() == basis_.size());
  IntVector v = zero_vector(ambient_dim_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim_; ++j) v[j] += coordinates[i] * basis_[i][j];
  return v;
}

LatticeBasis integer_kernel(const IntegerMatrix& A) {
  const std::size_t d = A.cols();
  HermiteForm hf = hermite_normal_form(A.transpose());
  std::vector<IntVector> gens;
  for (std::size_t i = hf.rank(); i < d; ++i) gens.push_back(hf.U.row(i));
  return LatticeBasis::from_generators(d, gens);
}

std::size_t codim(const IntegerMatrix& A) { return integer_kernel(A).rank(); }

bool in_lattice(const IntVector& v, const LatticeBasis& L) { return L.coordinates(v).has_value(); }

std::size_t rational_rank(const IntegerMatrix& M) {
  RationalMatrix T = to_rational(M);
  return rref(T, T.cols()).size();
}

std::optional<RationalMatrix> solve_rational(const IntegerMatrix& M, const IntegerMatrix& target) {
  if (target.cols() != M.cols()) throw DimensionMismatch("solve_rational: X*M and target have different widths");
  // M^T X^T = target^T, all right-hand sides at once.
  const std::size_t n = M.cols(), m = M.rows(), t = target.rows();
  RationalMatrix T(n, m + t);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) T(i, j) = M(j, i);
    for (std::size_t j = 0; j < t; ++j) T(i, m + j) = target(j, i);
  }
  std::vector<std::size_t> pivots = rref(T, m);
  for (std::size_t i = pivots.size(); i < n; ++i)
    for (std::size_t j = 0; j < t; ++j)
      if (sgn(T(i, m + j)) != 0) return std::nullopt;
  RationalMatrix X(t, m);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t j = 0; j < t; ++j) X(j, pivots[k]) = T(k, m + j);
  return X;
}

std::optional<RatVector> lp_feasible_nonneg(const IntegerMatrix& S, const IntVector& m) {
  const std::size_t R = S.rows(), n = S.cols();
  if (m.size() != R) throw DimensionMismatch("lp_feasible_nonneg: target length differs from row count");
  if (R == 0) return RatVector(n, Rational(0));

  // Phase-one tableau: original columns, one artificial per row, rhs.
  const std::size_t width = n + R + 1, rhs = n + R;
  RationalMatrix T(R, width);
  std::vector<std::size_t> basis(R);
  for (std::size_t i = 0; i < R; ++i) {
    const int sign = sgn(m[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) T(i, j) = sign * S(i, j);
    T(i, n + i) = 1;
    T(i, rhs) = sign * m[i];
    basis[i] = n + i;
  }
  std::vector<Rational> cost(width, Rational(0));
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= T(i, j);
    cost[rhs] -= T(i, rhs);
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + R; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = R;
    Rational best;
    for (std::size_t i = 0; i < R; ++i) {
      if (sgn(T(i, enter)) <= 0) continue;
      Rational ratio = T(i, rhs) / T(i, enter);
      if (leave == R || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // The phase-one objective is bounded below by zero.
    assert(leave != R);

    Rational inv = 1 / T(leave, enter);
    for (std::size_t j = 0; j < width; ++j) T(leave, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == leave || sgn(T(i, enter)) == 0) continue;
      Rational f = T(i, enter);
      for (std::size_t j = 0; j < width; ++j) T(i, j) -= f * T(leave, j);
    }
    if (sgn(cost[enter]) != 0) {
      Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * T(leave, j);
    }
    basis[leave] = enter;
  }

  if (sgn(cost[rhs]) != 0) return std::nullopt;
  RatVector lambda(n, Rational(0));
  for (std::size_t i = 0; i < R; ++i)
    if (basis[i] < n) lambda[basis[i]] = T(i, rhs);
  return lambda;
}

std::optional<IntVector> solve_integer(const IntegerMatrix& S, const IntVector& m) {
  if (m.size() != S.rows()) throw DimensionMismatch("solve_integer: target length differs from row count");
  // U S^T = H; look for mu with mu^T H = m^T, then lambda = U^T mu.
  HermiteForm hf = hermite_normal_form(S.transpose());
  IntVector rem = m;
  IntVector mu(hf.rank());
  for (std::size_t i = 0; i < hf.rank(); ++i) {
    const std::size_t p = hf.pivot_columns[i];
    if (!mpz_divisible_p(rem[p].get_mpz_t(), hf.H(i, p).get_mpz_t())) return std::nullopt;
    mu[i] = rem[p] / hf.H(i, p);
    if (sgn(mu[i]) != 0)
      for (std::size_t j = p; j < rem.size(); ++j) rem[j] -= mu[i] * hf.H(i, j);
  }
  if (!is_zero(rem)) return std::nullopt;
  IntVector lambda = zero_vector(S.cols());
  for (std::size_t i = 0; i < hf.rank(); ++i) {
    if (sgn(mu[i]) == 0) continue;
    for (std::size_t j = 0; j < S.cols(); ++j) lambda[j] += mu[i] * hf.U(i, j);
  }
  return lambda;
}

std::optional<IntVector> positive_functional(const IntegerMatrix& S) {
  const std::size_t h = S.rows(), n = S.cols();
  if (n == 0) return zero_vector(h);
  // s_j . (w+ - w-) - slack_j = 1, everything non-negative.
  IntegerMatrix L(n, 2 * h + n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < h; ++i) {
      L(j, i) = S(i, j);
      L(j, h + i) = -S(i, j);
    }
    L(j, 2 * h + j) = -1;
  }
  auto sol = lp_feasible_nonneg(L, IntVector(n, Integer(1)));
  if (!sol) return std::nullopt;
  RatVector w(h);
  Integer denominator_lcm = 1;
  for (std::size_t i = 0; i < h; ++i) {
    w[i] = (*sol)[i] - (*sol)[h + i];
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), w[i].get_den_mpz_t());
  }
  IntVector out(h);
  for (std::size_t i = 0; i < h; ++i) {
    Rational scaled = w[i] * denominator_lcm;
    out[i] = scaled.get_num();
  }
  return out;
}

}  // namespace torfib
