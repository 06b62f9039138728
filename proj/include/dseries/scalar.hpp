#pragma once

// Exact coefficient arithmetic over Q, Q[l] and Q(l), where l is the
// deformation parameter lambda. Every value is kept in a canonical normal
// form, so equality is structural.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dseries/error.hpp"

namespace dseries {

class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(mpq_class v);

  static Rat parse(std::string_view text);
  static Rat factorial(unsigned long n);

  const mpq_class& value() const noexcept { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  bool is_integer() const noexcept { return v_.get_den() == 1; }
  int sign() const noexcept { return sgn(v_); }

  Rat inverse() const;
  Rat pow(long e) const;
  std::string str() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

// C(m, j) for integer m of either sign: 0 when j < 0 or j > m >= 0,
// otherwise m(m-1)...(m-j+1)/j!.
Rat binomial(long m, long j);
// C(a, j) for rational upper argument, as a falling-factorial product.
Rat binomial(const Rat& a, long j);
// Exact r-th power of a rational when it exists (e.g. 4^(1/2) = 2).
bool exact_rational_power(const Rat& base, const Rat& exponent, Rat& out);

// Dense polynomial in l with rational coefficients; index i holds the
// coefficient of l^i. The zero polynomial has no coefficients.
class LPoly {
 public:
  LPoly() = default;
  LPoly(Rat c);  // NOLINT(google-explicit-constructor)
  explicit LPoly(std::vector<Rat> coeffs);

  static LPoly lambda();
  static LPoly parse(std::string_view text);

  const std::vector<Rat>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
  Rat constant() const { return c_.empty() ? Rat() : c_[0]; }
  Rat lead() const { return c_.empty() ? Rat() : c_.back(); }

  Rat eval(const Rat& at) const;
  LPoly monic() const;
  LPoly scaled(const Rat& s) const;
  std::string str() const;

  static std::pair<LPoly, LPoly> divmod(const LPoly& a, const LPoly& b);

  friend LPoly operator+(const LPoly& a, const LPoly& b);
  friend LPoly operator-(const LPoly& a, const LPoly& b);
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend LPoly operator-(const LPoly& a);
  friend bool operator==(const LPoly& a, const LPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rat> c_;
};

// Monic gcd over Q. Throws BothZero when both arguments vanish.
LPoly lpoly_gcd(const LPoly& a, const LPoly& b);

// Reduced rational function num/den: gcd(num, den) = 1 and den monic.
class LRat {
 public:
  LRat() : den_(Rat(1)) {}
  LRat(LPoly p) : num_(std::move(p)), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)

  // Throws ZeroDenominator.
  static LRat reduce(LPoly num, LPoly den);
  static LRat parse(std::string_view text);

  const LPoly& num() const noexcept { return num_; }
  const LPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  // True when the value lies in Q[l] (denominator normalized to 1).
  bool is_polynomial() const noexcept { return den_.is_one(); }

  LRat inverse() const;
  Rat eval(const Rat& at) const;
  std::string str() const;

  friend LRat operator+(const LRat& a, const LRat& b);
  friend LRat operator-(const LRat& a, const LRat& b);
  friend LRat operator*(const LRat& a, const LRat& b);
  friend LRat operator/(const LRat& a, const LRat& b);
  friend LRat operator-(const LRat& a);
  friend bool operator==(const LRat& a, const LRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  LRat(LPoly num, LPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  LPoly num_;
  LPoly den_;
};

LRat lrat_reduce(LPoly num, LPoly den);

enum class Ring : std::uint8_t { Q = 0, QL = 1, QLrat = 2 };

std::string_view ring_name(Ring r) noexcept;
Ring parse_ring(std::string_view name);
inline Ring join(Ring a, Ring b) noexcept { return a < b ? b : a; }

// A coefficient in one of the three rings. Mixed arithmetic promotes to the
// larger ring; equality compares values across rings.
class Scalar {
 public:
  Scalar() : v_(Rat()) {}
  Scalar(long v) : v_(Rat(v)) {}            // NOLINT(google-explicit-constructor)
  Scalar(Rat v) : v_(std::move(v)) {}       // NOLINT(google-explicit-constructor)
  Scalar(LPoly v) : v_(std::move(v)) {}     // NOLINT(google-explicit-constructor)
  Scalar(LRat v) : v_(std::move(v)) {}      // NOLINT(google-explicit-constructor)

  static Scalar lambda() { return Scalar(LPoly::lambda()); }
  // Parses the canonical text form and places the value in `ring`.
  static Scalar parse(std::string_view text, Ring ring);

  Ring ring() const noexcept { return static_cast<Ring>(v_.index()); }
  Scalar promoted(Ring r) const;
  // Moves the value to the smallest ring that holds it.
  Scalar demoted() const;

  const Rat& rat() const;
  const LPoly& lpoly() const;
  const LRat& lrat() const;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  // Invertible inside its own ring (a nonconstant polynomial is not).
  bool is_unit() const noexcept;
  // Inverse; a nonconstant polynomial is promoted to Q(l) first.
  Scalar inverse() const;
  Scalar pow(long e) const;
  std::string str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rat, LPoly, LRat> v_;
};

// Substitutes l = value. Throws PoleAtValue if a denominator vanishes there.
Rat eval_lambda(const Scalar& s, const Rat& value);

// s^e for rational e: integer e always; otherwise s = 1 or an exact rational root.
// Throws NonRepresentablePower otherwise.
Scalar pow_rational(const Scalar& s, const Rat& e);

}  // namespace dseries
