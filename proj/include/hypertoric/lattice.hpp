#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hypertoric/rational.hpp"

namespace hypertoric {

using Int = std::int64_t;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// Exponent vector in scaled units: the exponent of axis i is exp[i] / scale.
using ExpVec = std::vector<Int>;

// Character lattice hosting Laurent exponents. `scale` is the common
// denominator bound: every stored exponent lives in (1/scale) * Z^rank.
class CharLattice {
 public:
  CharLattice() : rank_(0), scale_(1) {}
  CharLattice(std::vector<std::string> axis_labels, Int scale = 1)
      : rank_(static_cast<int>(axis_labels.size())),
        scale_(scale),
        labels_(std::move(axis_labels)) {
    if (scale_ < 1) throw std::invalid_argument("lattice scale must be >= 1");
    for (size_t i = 0; i < labels_.size(); ++i)
      for (size_t j = i + 1; j < labels_.size(); ++j)
        if (labels_[i] == labels_[j])
          throw std::invalid_argument("duplicate axis label: " + labels_[i]);
  }

  int rank() const { return rank_; }
  Int scale() const { return scale_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }

  int axis(const std::string& name) const {
    for (int i = 0; i < rank_; ++i)
      if (labels_[i] == name) return i;
    throw std::out_of_range("no axis named " + name);
  }
  bool has_axis(const std::string& name) const {
    for (int i = 0; i < rank_; ++i)
      if (labels_[i] == name) return true;
    return false;
  }

  bool operator==(const CharLattice& o) const {
    return rank_ == o.rank_ && scale_ == o.scale_ && labels_ == o.labels_;
  }
  bool operator!=(const CharLattice& o) const { return !(*this == o); }

  ExpVec zero() const { return ExpVec(static_cast<size_t>(rank_), 0); }

  // Exponent of a single axis, in unscaled units num/den; den must divide scale.
  ExpVec unit(int axis_index, Int num = 1, Int den = 1) const {
    if ((scale_ * num) % den != 0)
      throw std::invalid_argument("exponent denominator exceeds lattice scale");
    ExpVec e = zero();
    e.at(static_cast<size_t>(axis_index)) = scale_ * num / den;
    return e;
  }

  Rational exponent_of(const ExpVec& e, int axis_index) const {
    return rat(e.at(static_cast<size_t>(axis_index)), scale_);
  }

 private:
  int rank_;
  Int scale_;
  std::vector<std::string> labels_;
};

inline ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent rank mismatch");
  ExpVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline ExpVec operator-(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent rank mismatch");
  ExpVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline ExpVec negate(const ExpVec& a) {
  ExpVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

inline bool is_zero(const ExpVec& a) {
  for (Int v : a)
    if (v != 0) return false;
  return true;
}

// A single exact term: coefficient times the character with the given
// (scaled) exponent vector.
struct Monomial {
  ExpVec exponents;
  Rational coeff;

  Monomial() : coeff(0) {}
  Monomial(ExpVec e, Rational c) : exponents(std::move(e)), coeff(std::move(c)) {}
};

}  // namespace hypertoric
