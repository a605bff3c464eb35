#include "hypertoric/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace hypertoric {

Int QSeries::key_of(const Rational& q_exponent) const {
  Rational k = q_exponent * rat(qscale_);
  if (!is_integer(k)) throw std::domain_error("q-exponent outside q-scale");
  return static_cast<Int>(k.get_num().get_si());
}

LaurentPoly QSeries::coeff(const Rational& q_exponent) const {
  auto it = coeffs_.find(key_of(q_exponent));
  return it == coeffs_.end() ? LaurentPoly(lattice_) : it->second;
}

void QSeries::add(const Rational& q_exponent, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (q_exponent > order_) return;
  Int k = key_of(q_exponent);
  auto [it, inserted] = coeffs_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

QSeries QSeries::truncated(const Rational& new_order) const {
  QSeries r(lattice_, new_order, qscale_);
  for (const auto& [k, c] : coeffs_)
    if (qexp(k) <= new_order) r.coeffs_.emplace(k, c);
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  if (a.lattice_ != b.lattice_ || a.qscale_ != b.qscale_)
    throw std::invalid_argument("series lattice mismatch");
  QSeries r = a.truncated(std::min(a.order_, b.order_));
  for (const auto& [k, c] : b.coeffs_) r.add(b.qexp(k), c);
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  if (a.lattice_ != b.lattice_ || a.qscale_ != b.qscale_)
    throw std::invalid_argument("series lattice mismatch");
  QSeries r = a.truncated(std::min(a.order_, b.order_));
  for (const auto& [k, c] : b.coeffs_) r.add(b.qexp(k), -c);
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (a.lattice_ != b.lattice_ || a.qscale_ != b.qscale_)
    throw std::invalid_argument("series lattice mismatch");
  QSeries r(a.lattice_, std::min(a.order_, b.order_), a.qscale_);
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_) {
      Rational e = a.qexp(ka) + b.qexp(kb);
      if (e <= r.order_) r.add(e, ca * cb);
    }
  return r;
}

QSeries QSeries::shifted(const Rational& q_shift, const LaurentPoly& factor) const {
  QSeries r(lattice_, order_ + q_shift, qscale_);
  for (const auto& [k, c] : coeffs_) r.add(qexp(k) + q_shift, c * factor);
  return r;
}

QSeries QSeries::scaled(const Rational& c) const {
  QSeries r(lattice_, order_, qscale_);
  for (const auto& [k, p] : coeffs_) {
    LaurentPoly s = p.scaled(c);
    if (!s.is_zero()) r.coeffs_.emplace(k, s);
  }
  return r;
}

QSeries QSeries::mapped(const CharLattice& target,
                        const std::function<LaurentPoly(const LaurentPoly&)>& fn) const {
  QSeries r(target, order_, qscale_);
  for (const auto& [k, p] : coeffs_) {
    LaurentPoly img = fn(p);
    if (!img.is_zero()) r.add(qexp(k), img);
  }
  return r;
}

bool QSeries::equal_through(const QSeries& o, const Rational& through_order) const {
  if (through_order > order_ || through_order > o.order_)
    throw std::invalid_argument("comparison order exceeds truncation");
  for (const auto& [k, c] : coeffs_) {
    if (qexp(k) > through_order) continue;
    if (o.coeff(qexp(k)) != c) return false;
  }
  for (const auto& [k, c] : o.coeffs_) {
    if (o.qexp(k) > through_order) continue;
    if (coeff(o.qexp(k)) != c) return false;
  }
  return true;
}

std::string QSeries::str() const {
  std::ostringstream out;
  if (coeffs_.empty()) out << "0";
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    if (!first) out << " + ";
    first = false;
    Rational e = qexp(k);
    out << "(" << to_string(c) << ")";
    if (!hypertoric::is_zero(e)) {
      out << "*q";
      if (e != 1) {
        if (is_integer(e))
          out << "^" << e.get_str();
        else
          out << "^(" << e.get_str() << ")";
      }
    }
  }
  Rational next = order_ + 1;
  out << " + O(q^" << (is_integer(next) ? next.get_str() : "(" + next.get_str() + ")") << ")";
  return out.str();
}

QSeries theta_expand_shifted(const CharLattice& lat, const ExpVec& x, const Rational& a,
                             const Rational& order, Int qscale) {
  if (static_cast<int>(x.size()) != lat.rank())
    throw std::invalid_argument("argument rank mismatch");
  for (Int v : x)
    if (v % 2 != 0)
      throw std::domain_error("theta argument needs even scaled exponents (raise scale)");
  ExpVec half(x.size());
  for (size_t i = 0; i < x.size(); ++i) half[i] = x[i] / 2;

  // Factors with negative q-exponent lower later terms back under the
  // truncation bound, so the product runs at a raised working order and is
  // truncated only at the end.
  Rational abs_a = abs(a);
  Rational neg_total = abs_a / 2;
  for (Int n = 1; rat(n) < abs_a; ++n) neg_total += abs_a - rat(n);
  Rational work = order + neg_total;

  // Prefactor q^{a/2} x^{1/2} - q^{-a/2} x^{-1/2}.
  QSeries s(lat, work, qscale);
  s.add(a / 2, LaurentPoly::monomial(lat, half));
  s.add(-a / 2, LaurentPoly::monomial(lat, negate(half), Rational(-1)));

  // Factors (1 - q^{n+a} x)(1 - q^{n-a} x^{-1}); stop once both exponents
  // exceed the working order.
  for (Int n = 1;; ++n) {
    Rational ep = rat(n) + a;
    Rational em = rat(n) - a;
    if (ep > work && em > work) break;
    if (ep <= work) {
      QSeries f(lat, work, qscale);
      f.add(Rational(0), LaurentPoly::one(lat));
      f.add(ep, LaurentPoly::monomial(lat, x, Rational(-1)));
      s *= f;
    }
    if (em <= work) {
      QSeries f(lat, work, qscale);
      f.add(Rational(0), LaurentPoly::one(lat));
      f.add(em, LaurentPoly::monomial(lat, negate(x), Rational(-1)));
      s *= f;
    }
  }
  return s.truncated(order);
}

QSeries theta_expand(const CharLattice& lat, const ExpVec& x, const Rational& order,
                     Int qscale) {
  if (sgn(order) < 0) throw std::invalid_argument("truncation order must be >= 0");
  return theta_expand_shifted(lat, x, Rational(0), order, qscale);
}

}  // namespace hypertoric
