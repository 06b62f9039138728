#pragma once

// Stirling numbers of both kinds associated with a delta series f(t), the
// associated logarithm, Bernoulli polynomials of order alpha, partial Bell
// polynomials and the identities relating them.
//
// Notation: fbar is the compositional inverse of f, p1 = fbar'(0) and
// e(t) = exp(fbar(t)) - 1.
//   S2(n,k;f) = n! [t^n] e(t)^k / k!
//   S1(n,k;f) = n! [t^n] ebar(t)^k / k!, ebar the inverse of e.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dseries/fps.hpp"

namespace dseries {

enum class TriangleKind : std::uint8_t { S1assoc, S2assoc, S1, S2, Lah, T1, T2, Other };

std::string_view kind_name(TriangleKind k) noexcept;

// Lower-triangular table, entries (n,k) for 0 <= k <= n <= max_n.
class Triangle {
 public:
  Triangle(TriangleKind kind, std::size_t max_n, Ring ring, std::string fingerprint = {});

  TriangleKind kind() const noexcept { return kind_; }
  std::size_t max_n() const noexcept { return rows_.size() - 1; }
  Ring ring() const noexcept { return ring_; }
  const std::string& fingerprint() const noexcept { return fingerprint_; }
  const std::vector<std::vector<Scalar>>& rows() const noexcept { return rows_; }

  // Zero for k > n. Throws IndexOutOfOrder for n > max_n.
  const Scalar& at(std::size_t n, std::size_t k) const;
  void set(std::size_t n, std::size_t k, Scalar v);
  // Coefficient-wise l = value.
  Triangle specialized(const Rat& value) const;
  Triangle promoted(Ring r) const;

  friend bool operator==(const Triangle& a, const Triangle& b);

 private:
  TriangleKind kind_;
  Ring ring_;
  std::string fingerprint_;
  std::vector<std::vector<Scalar>> rows_;
};

enum class Basis : std::uint8_t { Monomial, Falling, FallingLambda, Associated };

std::string_view basis_name(Basis b) noexcept;

// Polynomial in x; coeffs[i] multiplies the i-th basis polynomial
// (x^i, (x)_i, (x)_{i,l} or p_i(x)).
struct XPoly {
  std::vector<Scalar> coeffs;
  Basis basis = Basis::Monomial;

  int degree() const;
  // Monomial basis only.
  Scalar eval(const Scalar& x) const;
  std::string str() const;

  friend bool operator==(const XPoly& a, const XPoly& b);
};

struct BernoulliFamily {
  DeltaSeries base;
  Rat alpha;
  std::vector<Scalar> values;            // B_{n,g}^{(alpha)}, n = 0..max_n
  std::optional<std::vector<XPoly>> polys;  // B_{n,g}^{(alpha)}(x) in the monomial basis
};

enum class S1Path : std::uint8_t { Inverse, Log };

// Classical triangles by their recurrences.
Triangle classical_s2(std::size_t max_n);
Triangle classical_s1(std::size_t max_n);

// Throws InsufficientOrder when f.order() < max_n.
Triangle s2_assoc(const DeltaSeries& f, std::size_t max_n);
// Inverse: powers of invert_newton(e). Log: powers of f(log(1+t)).
Triangle s1_assoc(const DeltaSeries& f, std::size_t max_n, S1Path path = S1Path::Inverse);

// f(log(1+t)) at f's order.
Series assoc_log(const DeltaSeries& f);

// Needs g.order() >= max_n + 1. A non-integer alpha needs g'(0) = 1
// (NonUnitBaseForRationalPower).
BernoulliFamily bernoulli_assoc(const DeltaSeries& g, const Rat& alpha, std::size_t max_n,
                                bool with_x = false);

// B_{n,k}(x_1, x_2, ...); xs[0] is x_1. Throws ArityTooSmall.
Scalar partial_bell(std::size_t n, std::size_t k, const std::vector<Scalar>& xs);

// S1(n,k;f) = C(n-1,k-1) B_{n-k,fbar}^{(n)}.
Scalar s1_via_bernoulli(const DeltaSeries& f, std::size_t n, std::size_t k);
// S1(n,k;f) = B_{n,k}(S1(1,1;f), S1(2,1;f), ...).
Scalar s1_via_partial_bell(const DeltaSeries& f, std::size_t n, std::size_t k);
// S1(n,k;f) = B_{n,k}(B_{0,fbar}^{(1)}, B_{1,fbar}^{(2)}, ...).
Scalar s1_via_bernoulli_bell(const DeltaSeries& f, std::size_t n, std::size_t k);

// p_n = n! [t^n] exp(fbar(t)), n = 0..max_n.
std::vector<Scalar> exp_moments(const DeltaSeries& f, std::size_t max_n);

// B_{n,k}(p2/2, p3/3, ...).
Scalar lemma_bell_moments(const DeltaSeries& f, std::size_t n, std::size_t k);
// sum_j C(n+k,k-j) n!/(n+k)! (-p1)^{k-j} S2(n+j,j;f).
Scalar lemma_bell_moments_rhs(const DeltaSeries& f, std::size_t n, std::size_t k);
// sum_k (-alpha)_k p1^{-alpha-k} B_{n,k}(p2/2, p3/3, ...).
Scalar lemma_bernoulli_bell(const DeltaSeries& f, const Rat& alpha, std::size_t n);

// B_{n,fbar}^{(alpha)} by the double sum over S2. Throws NonRepresentablePower.
Scalar bernoulli_via_s2(const DeltaSeries& f, const Rat& alpha, std::size_t n);
Scalar bernoulli_via_s2(const Triangle& s2, const Scalar& p1, const Rat& alpha, std::size_t n);
// alpha = 1, single sum.
Scalar bernoulli_via_s2_single(const DeltaSeries& f, std::size_t n);
Scalar bernoulli_via_s2_single(const Triangle& s2, const Scalar& p1, std::size_t n);

// S1(n,k;f) from S2 by the Schloemilch-type sum. Needs S2 up to 2(n-k).
Scalar schloemilch_s1(const DeltaSeries& f, std::size_t n, std::size_t k);
Scalar schloemilch_s1(const Triangle& s2, const Scalar& p1, std::size_t n, std::size_t k);

// The associated logarithm rebuilt from S2 entries, order max_n.
Series assoc_log_expansion(const DeltaSeries& f, std::size_t max_n);
Series assoc_log_expansion(const Triangle& s2, const Scalar& p1, std::size_t max_n);

// p_n(x) = n! [t^n] exp(x fbar(t)), monomial basis.
std::vector<XPoly> poly_seq(const DeltaSeries& f, std::size_t max_n);
// Bel_{n,f}(x) = sum_k S2(n,k;f) x^k.
std::vector<XPoly> bell_assoc(const DeltaSeries& f, std::size_t max_n);
// Exact change of basis. Associated needs f (InvalidArgument otherwise).
XPoly basis_convert(const XPoly& p, Basis target, const DeltaSeries* f = nullptr);

struct CheckReport {
  bool ok = true;
  std::size_t checked = 0;
  std::string relation;           // first violated relation
  std::vector<std::size_t> index; // its indices
  std::string lhs, rhs;

  std::string describe() const;
  void fail(std::string rel, std::vector<std::size_t> idx, const Scalar& l, const Scalar& r);
};

// Both orthogonality sums for 0 <= l <= n <= max_n, then the two inverse
// relations on random sequences drawn from `seed`.
CheckReport orthogonality_check(const DeltaSeries& f, std::size_t max_n, std::uint64_t seed = 1);
CheckReport orthogonality_check(const Triangle& s2, const Triangle& s1, std::uint64_t seed = 1);

// The two binomial identities behind the Schloemilch formula,
// 1 <= n <= max_n, 0 <= k <= n, 0 <= j <= n-k.
CheckReport binomial_identities_check(std::size_t max_n);

}  // namespace dseries
