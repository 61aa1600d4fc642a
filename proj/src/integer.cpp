#include "torfib/integer.hpp"

#include <cassert>
#include <sstream>

namespace torfib {

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  IntVector r = a;
  r += b;
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  IntVector r = a;
  r -= b;
  return r;
}

IntVector operator-(const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVector operator*(const Integer& k, const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

IntVector& operator+=(IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

IntVector& operator-=(IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Integer dot(const IntVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const IntVector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

Integer norm1(const IntVector& v) {
  Integer s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

Integer norm_inf(const IntVector& v) {
  Integer s = 0;
  for (const auto& x : v)
    if (abs(x) > s) s = abs(x);
  return s;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

bool conformal_le(const IntVector& u, const IntVector& v) {
  assert(u.size() == v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    int su = sgn(u[i]);
    if (su == 0) continue;
    if (su != sgn(v[i])) return false;
    if (su > 0 ? u[i] > v[i] : u[i] < v[i]) return false;
  }
  return true;
}

bool sign_consistent(const IntVector& u, const IntVector& v) {
  assert(u.size() == v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (sgn(u[i]) * sgn(v[i]) < 0) return false;
  return true;
}

std::size_t IntVectorHash::operator()(const IntVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& x : v) {
    // low limb and sign are enough to spread small vectors
    std::size_t limb = mpz_size(x.get_mpz_t()) ? mpz_getlimbn(x.get_mpz_t(), 0) : 0;
    limb ^= static_cast<std::size_t>(sgn(x) + 1) << 61;
    h ^= limb + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace torfib
