#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ainfp {

using bigint = boost::multiprecision::cpp_int;

// Exact field element. For F_p the value is the residue num in [0,p) and den
// stays 1; for Q it is num/den in lowest terms with den > 0. Never floats.
struct Scalar {
  bigint num = 0;
  bigint den = 1;
  bool operator==(const Scalar&) const = default;
};

// Runtime-selected coefficient field: F_p for prime p, or Q when p == 0.
struct Field {
  long p = 2;

  bool rational() const { return p == 0; }

  Scalar zero() const { return {}; }
  Scalar one() const { return from_long(1); }
  Scalar from_long(long v) const;

  bool is_zero(const Scalar& a) const { return a.num == 0; }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // a != 0
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string str(const Scalar& a) const;
};

Field make_field(const std::string& name, long p_opt = 0);

}  // namespace ainfp
