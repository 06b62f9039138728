#pragma once

// Truncated formal power series with exact coefficients.
//
// A Series of order N stores the ordinary coefficients c[0..N] of
// c0 + c1 t + ... + cN t^N. All coefficients live in the series' ring.
// Operations that combine two series require equal order and ring; callers
// truncate or promote first (see unify()).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dseries/scalar.hpp"

namespace dseries {

class Series {
 public:
  Series() : Series(0, Ring::Q) {}
  Series(std::size_t order, Ring ring);
  // Promotes every coefficient to the largest ring present.
  explicit Series(std::vector<Scalar> coeffs);
  Series(std::vector<Scalar> coeffs, Ring ring);

  static Series zero(std::size_t order, Ring ring = Ring::Q) { return Series(order, ring); }
  static Series constant(const Scalar& c, std::size_t order);
  static Series identity(std::size_t order, Ring ring = Ring::Q);  // t
  static Series monomial(const Scalar& c, std::size_t power, std::size_t order);
  // e^t, log(1+t), 1/(1-t), each to the given order.
  static Series exp_t(std::size_t order);
  static Series log1p_t(std::size_t order);
  static Series geometric(std::size_t order);
  // Builds from exponential-generating-function coefficients a_n (c_n = a_n / n!).
  static Series from_egf(const std::vector<Scalar>& egf);

  std::size_t order() const noexcept { return c_.size() - 1; }
  Ring ring() const noexcept { return ring_; }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  const Scalar& operator[](std::size_t n) const { return c_.at(n); }

  // n! * c_n.
  Scalar egf(std::size_t n) const;

  Series truncated(std::size_t order) const;
  // Zero-pads or truncates to the given order.
  Series resized(std::size_t order) const;
  Series promoted(Ring r) const;
  // Moves to the smallest ring that holds every coefficient.
  Series demoted() const;
  // Index of the first nonzero coefficient, or order()+1 for the zero series.
  std::size_t valuation() const;
  bool is_zero() const;
  std::string str() const;

  friend bool operator==(const Series& a, const Series& b);

 private:
  std::vector<Scalar> c_;
  Ring ring_;
};

// Exponential-generating-function lens: egf_coeff(n) = n! * c_n.
class EgfView {
 public:
  explicit EgfView(const Series& s) : s_(&s) {}
  Scalar operator[](std::size_t n) const { return s_->egf(n); }
  std::size_t order() const noexcept { return s_->order(); }
  std::vector<Scalar> values() const;

 private:
  const Series* s_;
};

// f(0) = 0 and f'(0) invertible. Construction promotes Q[l] to Q(l) when
// f'(0) is a nonconstant polynomial. Throws NotDelta.
class DeltaSeries {
 public:
  explicit DeltaSeries(Series s);

  const Series& series() const noexcept { return s_; }
  std::size_t order() const noexcept { return s_.order(); }
  Ring ring() const noexcept { return s_.ring(); }
  const Scalar& linear() const { return s_[1]; }
  DeltaSeries truncated(std::size_t order) const { return DeltaSeries(s_.truncated(order)); }

 private:
  Series s_;
};

// Brings both series to the larger ring.
void unify(Series& a, Series& b);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, const Scalar& s);
Series div(const Series& a, const Series& b);
Series derivative(const Series& a);
Series integral(const Series& a);
// Divides by t^s; the low s coefficients must vanish. Order drops by s.
Series shift_down(const Series& a, std::size_t s);
// Multiplies by t^s, keeping the order.
Series shift_up(const Series& a, std::size_t s);

// g(f(t)) by Horner's scheme. The inner series must have zero constant term.
Series compose(const Series& g, const Series& f);
Series compose(const Series& g, const DeltaSeries& f);

// Compositional inverse by Newton iteration, doubling precision each step.
DeltaSeries invert_newton(const DeltaSeries& f);

// Lagrange inversion coefficients, kept as independent checks of invert_newton.
Scalar lagrange_coeff_inverse(const DeltaSeries& f, std::size_t n);
Scalar lagrange_coeff_power(const DeltaSeries& f, std::size_t k, std::size_t n);
Scalar lagrange_coeff_general(const Series& g, const DeltaSeries& f, std::size_t n);

Series exp_series(const Series& f);
Series log_series(const Series& g);
Series pow_int(const Series& f, long k);
Series pow_ratio(const Series& f, const Rat& r);

// Coefficient-wise l = value.
Series eval_lambda(const Series& s, const Rat& value);

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator/(const Series& a, const Series& b);
Series operator-(const Series& a);

}  // namespace dseries
