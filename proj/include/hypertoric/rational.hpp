#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

#include <Eigen/Core>

namespace hypertoric {

// Exact rational scalar. All arithmetic in the library is exact; no floating
// point is used anywhere.
using Rational = mpq_class;

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Canonical textual form "p" or "p/q" with q > 0.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

}  // namespace hypertoric

namespace Eigen {

// Scalar traits so dense matrices over Rational work (LP tableaus, exact
// solves on lattice data).
template <>
struct NumTraits<hypertoric::Rational> : GenericNumTraits<hypertoric::Rational> {
  using Real = hypertoric::Rational;
  using NonInteger = hypertoric::Rational;
  using Nested = hypertoric::Rational;
  using Literal = long;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen
