#pragma once

#include <functional>
#include <map>

#include "hypertoric/laurent.hpp"

namespace hypertoric {

// Truncated formal q-series with exact Laurent coefficients. The q-exponent
// is kept on its own scaled axis (qscale), so slope shifts like q^(1/3) and
// the q^(1/2) of theta prefactors stay exact. Terms with q-exponent above
// `order` (in unscaled units) are discarded; arithmetic propagates the
// smaller order.
class QSeries {
 public:
  QSeries() : qscale_(1), order_(0) {}
  QSeries(CharLattice lattice, Rational order, Int qscale = 2)
      : lattice_(std::move(lattice)), qscale_(qscale), order_(std::move(order)) {}

  static QSeries one(const CharLattice& lat, const Rational& order, Int qscale = 2) {
    QSeries s(lat, order, qscale);
    s.add(Rational(0), LaurentPoly::one(lat));
    return s;
  }

  const CharLattice& lattice() const { return lattice_; }
  Int qscale() const { return qscale_; }
  const Rational& order() const { return order_; }
  const std::map<Int, LaurentPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // q-exponent in unscaled units.
  Rational qexp(Int key) const { return rat(key, qscale_); }
  LaurentPoly coeff(const Rational& q_exponent) const;

  void add(const Rational& q_exponent, const LaurentPoly& c);

  QSeries truncated(const Rational& new_order) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  // Multiply by c * q^shift * (monomial); order shifts along.
  QSeries shifted(const Rational& q_shift, const LaurentPoly& factor) const;
  QSeries scaled(const Rational& c) const;

  // Apply a map to every coefficient (lattice substitutions, restrictions).
  QSeries mapped(const CharLattice& target,
                 const std::function<LaurentPoly(const LaurentPoly&)>& fn) const;

  bool equal_through(const QSeries& o, const Rational& through_order) const;

  std::string str() const;

 private:
  Int key_of(const Rational& q_exponent) const;

  CharLattice lattice_;
  Int qscale_;
  Rational order_;
  std::map<Int, LaurentPoly> coeffs_;
};

// Truncated expansion of (x^{1/2} - x^{-1/2}) prod_{0<n<=N} (1-q^n x)(1-q^n/x).
// The scaled exponent vector of x must be even so x^{1/2} stays on the
// lattice. Errors when order < 1... order 0 is allowed and keeps just the
// constant term.
QSeries theta_expand(const CharLattice& lat, const ExpVec& x, const Rational& order,
                     Int qscale = 2);

// Expansion of the theta section at argument q^a * x; finitely many factors
// acquire negative q-powers, all kept exactly.
QSeries theta_expand_shifted(const CharLattice& lat, const ExpVec& x, const Rational& a,
                             const Rational& order, Int qscale = 2);

}  // namespace hypertoric
