#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "hypertoric/lattice.hpp"

namespace hypertoric {

// Sparse exact Laurent polynomial over a character lattice. Terms are keyed
// by scaled exponent vector; no zero coefficients are stored, so the map is
// the canonical form.
class LaurentPoly {
 public:
  using TermMap = std::map<ExpVec, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(CharLattice lattice) : lattice_(std::move(lattice)) {}
  LaurentPoly(CharLattice lattice, const Monomial& m) : lattice_(std::move(lattice)) {
    add_term(m.exponents, m.coeff);
  }

  static LaurentPoly constant(const CharLattice& lat, const Rational& c) {
    LaurentPoly p(lat);
    p.add_term(lat.zero(), c);
    return p;
  }
  static LaurentPoly one(const CharLattice& lat) { return constant(lat, Rational(1)); }
  static LaurentPoly monomial(const CharLattice& lat, const ExpVec& e,
                              const Rational& c = Rational(1)) {
    LaurentPoly p(lat);
    p.add_term(e, c);
    return p;
  }

  const CharLattice& lattice() const { return lattice_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool is_monomial() const { return terms_.size() == 1; }
  Monomial as_monomial() const {
    if (!is_monomial()) throw std::logic_error("not a monomial");
    return Monomial(terms_.begin()->first, terms_.begin()->second);
  }
  bool is_one() const {
    return terms_.size() == 1 && hypertoric::is_zero(terms_.begin()->first) &&
           terms_.begin()->second == 1;
  }

  Rational coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const ExpVec& e, const Rational& c) {
    if (static_cast<int>(e.size()) != lattice_.rank())
      throw std::invalid_argument("term rank does not match lattice");
    if (hypertoric::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (hypertoric::is_zero(it->second)) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly r(a.lattice_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly operator-() const {
    LaurentPoly r(lattice_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  LaurentPoly scaled(const Rational& c) const {
    LaurentPoly r(lattice_);
    if (hypertoric::is_zero(c)) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
  }

  // Multiply by a single character (monomial shift).
  LaurentPoly shifted(const ExpVec& e, const Rational& c = Rational(1)) const {
    LaurentPoly r(lattice_);
    if (hypertoric::is_zero(c)) return r;
    for (const auto& [f, k] : terms_) r.terms_.emplace(f + e, k * c);
    return r;
  }

  // Substitute each axis character by a monomial of a target lattice:
  // axis i  ->  coeffless monomial with scaled exponents images[i] (on the
  // target's scale). Source exponents must stay integral after substitution.
  LaurentPoly substituted(const CharLattice& target, const std::vector<ExpVec>& images) const {
    if (static_cast<int>(images.size()) != lattice_.rank())
      throw std::invalid_argument("substitution needs one image per axis");
    LaurentPoly r(target);
    for (const auto& [e, c] : terms_) {
      // scaled source exponent e[i]/scale_src applied to image exponents.
      std::vector<Rational> acc(static_cast<size_t>(target.rank()), Rational(0));
      for (int i = 0; i < lattice_.rank(); ++i) {
        Rational w = rat(e[static_cast<size_t>(i)], lattice_.scale());
        if (hypertoric::is_zero(w)) continue;
        const ExpVec& img = images[static_cast<size_t>(i)];
        for (int j = 0; j < target.rank(); ++j)
          acc[static_cast<size_t>(j)] += w * rat(img[static_cast<size_t>(j)], 1);
      }
      ExpVec f(static_cast<size_t>(target.rank()), 0);
      for (int j = 0; j < target.rank(); ++j) {
        if (!is_integer(acc[static_cast<size_t>(j)]))
          throw std::domain_error("substitution leaves the target lattice");
        f[static_cast<size_t>(j)] = static_cast<Int>(acc[static_cast<size_t>(j)].get_num().get_si());
      }
      r.add_term(f, c);
    }
    return r;
  }

  // Set one axis character to 1 (forget its exponents).
  LaurentPoly specialized_axis_to_one(int axis) const {
    LaurentPoly r(lattice_);
    for (const auto& [e, c] : terms_) {
      ExpVec f = e;
      f[static_cast<size_t>(axis)] = 0;
      r.add_term(f, c);
    }
    return r;
  }

  bool operator==(const LaurentPoly& o) const {
    return lattice_ == o.lattice_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

 private:
  void check_compatible(const LaurentPoly& o) const {
    if (lattice_ != o.lattice_) throw std::invalid_argument("lattice mismatch");
  }

  CharLattice lattice_;
  TermMap terms_;
};

// Canonical textual form: terms sorted lexicographically by exponent vector,
// coefficients as exact fractions, fractional exponents in parentheses.
std::string to_string(const LaurentPoly& p);

// Parse the canonical form back; inverse of to_string on valid input.
LaurentPoly parse_laurent(const CharLattice& lat, const std::string& text);

}  // namespace hypertoric
