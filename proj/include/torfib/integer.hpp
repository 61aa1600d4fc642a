#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace torfib {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

IntVector make_int_vector(std::initializer_list<long> values);
IntVector zero_vector(std::size_t n);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Integer& k, const IntVector& a);
IntVector& operator+=(IntVector& a, const IntVector& b);
IntVector& operator-=(IntVector& a, const IntVector& b);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const IntVector& b);

RatVector to_rational(const IntVector& v);

/// Sum of absolute values.
Integer norm1(const IntVector& v);
Integer norm_inf(const IntVector& v);

/// `(1 1 -2)`
std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

/// True when u is conformal to v: every nonzero u_i has the sign of v_i and
/// |u_i| <= |v_i|.
bool conformal_le(const IntVector& u, const IntVector& v);

/// True when u_i * v_i >= 0 for all i.
bool sign_consistent(const IntVector& u, const IntVector& v);

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept;
};

}  // namespace torfib
