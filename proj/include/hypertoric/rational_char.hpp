#pragma once

#include <stdexcept>
#include <string>

#include "hypertoric/laurent.hpp"

namespace hypertoric {

// Element of the localized ring: a formal ratio of Laurent polynomials.
// Equality is decided by cross-multiplication; no reduction to lowest terms
// is attempted.
class RationalChar {
 public:
  RationalChar() = default;
  explicit RationalChar(LaurentPoly num)
      : num_(std::move(num)), den_(LaurentPoly::one(num_.lattice())) {}
  RationalChar(LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    if (num_.lattice() != den_.lattice())
      throw std::invalid_argument("lattice mismatch in ratio");
  }

  static RationalChar one(const CharLattice& lat) {
    return RationalChar(LaurentPoly::one(lat));
  }
  static RationalChar zero(const CharLattice& lat) {
    return RationalChar(LaurentPoly(lat), LaurentPoly::one(lat));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const CharLattice& lattice() const { return num_.lattice(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalChar inverse() const {
    if (num_.is_zero()) throw std::domain_error("inverse of zero");
    return RationalChar(den_, num_);
  }

  friend RationalChar operator*(const RationalChar& a, const RationalChar& b) {
    return RationalChar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalChar operator/(const RationalChar& a, const RationalChar& b) {
    return a * b.inverse();
  }
  friend RationalChar operator+(const RationalChar& a, const RationalChar& b) {
    return RationalChar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalChar operator-(const RationalChar& a, const RationalChar& b) {
    return RationalChar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RationalChar operator-() const { return RationalChar(-num_, den_); }

  bool equals(const RationalChar& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
  }
  bool equals(const LaurentPoly& p) const { return num_ == (p * den_); }
  bool is_one() const { return num_ == den_; }

  std::string str() const {
    if (den_.is_one()) return to_string(num_);
    return "(" + to_string(num_) + ") / (" + to_string(den_) + ")";
  }

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

// Exact sum of num/den pairs over a common denominator, using prefix/suffix
// products so each denominator is expanded once.
RationalChar sum_ratios(const CharLattice& lat,
                        const std::vector<std::pair<LaurentPoly, LaurentPoly>>& terms);

}  // namespace hypertoric
