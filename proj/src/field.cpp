#include "ainfp/field.hpp"

#include <stdexcept>

namespace ainfp {

namespace {

bigint mod(const bigint& a, long p) {
  bigint r = a % p;
  if (r < 0) r += p;
  return r;
}

Scalar norm_q(bigint n, bigint d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (n == 0) return {};
  if (d < 0) { n = -n; d = -d; }
  bigint g = gcd(n < 0 ? bigint(-n) : n, d);
  return {n / g, d / g};
}

}  // namespace

Scalar Field::from_long(long v) const {
  if (rational()) return {bigint(v), 1};
  return {mod(bigint(v), p), 1};
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (rational()) return norm_q(a.num * b.den + b.num * a.den, a.den * b.den);
  return {mod(a.num + b.num, p), 1};
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (rational()) return norm_q(a.num * b.den - b.num * a.den, a.den * b.den);
  return {mod(a.num - b.num, p), 1};
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (rational()) return norm_q(a.num * b.num, a.den * b.den);
  return {mod(a.num * b.num, p), 1};
}

Scalar Field::neg(const Scalar& a) const {
  if (rational()) return {-a.num, a.den};
  return {mod(-a.num, p), 1};
}

Scalar Field::inv(const Scalar& a) const {
  if (a.num == 0) throw std::domain_error("inverse of zero");
  if (rational()) return norm_q(a.den, a.num);
  // extended Euclid on (num, p)
  bigint r0 = a.num, r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    bigint q = r0 / r1;
    bigint r2 = r0 - q * r1; r0 = r1; r1 = r2;
    bigint s2 = s0 - q * s1; s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("p not prime or zero divisor");
  return {mod(s0, p), 1};
}

std::string Field::str(const Scalar& a) const {
  std::string s = a.num.str();
  if (rational() && a.den != 1) s += "/" + a.den.str();
  return s;
}

Field make_field(const std::string& name, long p_opt) {
  if (name == "Q" || name == "q") return Field{0};
  if (name == "F2") return Field{2};
  if (name == "F3") return Field{3};
  if (name == "F5") return Field{5};
  if (name == "Fp" || name == "F_p") {
    if (p_opt < 2) throw std::invalid_argument("Fp needs a prime p");
    return Field{p_opt};
  }
  // accept "F<p>" spellings
  if (name.size() > 1 && (name[0] == 'F' || name[0] == 'f')) {
    long q = std::stol(name.substr(1));
    if (q >= 2) return Field{q};
  }
  throw std::invalid_argument("unknown field: " + name);
}

}  // namespace ainfp
