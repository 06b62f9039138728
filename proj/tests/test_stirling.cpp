#include <doctest.h>

#include <functional>

#include "dseries/stirling.hpp"
#include "support.hpp"

using namespace dseries;

namespace {

Series t_at(std::size_t n) { return Series::identity(n); }
Series one_at(std::size_t n) { return Series::constant(1, n); }

DeltaSeries identity_f(std::size_t n) { return DeltaSeries(t_at(n)); }
// 1 - e^{-t}
DeltaSeries rising_f(std::size_t n) { return DeltaSeries(one_at(n) - exp_series(-t_at(n))); }
// (e^t - 1)/(e^t + 1)
DeltaSeries mittag_f(std::size_t n) {
  Series e = Series::exp_t(n);
  return DeltaSeries(div(e - one_at(n), e + one_at(n)));
}
DeltaSeries bell_f(std::size_t n) { return DeltaSeries(Series::log1p_t(n)); }

Rat lah(long n, long k) {
  if (n == 0 && k == 0) return 1;
  if (k == 0) return 0;
  return Rat::factorial(n) / Rat::factorial(k) * binomial(n - 1, k - 1);
}

// Monomial coefficients of prod (x - r_i).
std::vector<Rat> expand_roots(const std::vector<Rat>& roots) {
  std::vector<Rat> c{1};
  for (const Rat& r : roots) {
    std::vector<Rat> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * r;
    }
    c = next;
  }
  return c;
}

// Sum over set partitions of {1..n} into k blocks of prod x_{|block|}.
Scalar bell_brute(std::size_t n, std::size_t k, const std::vector<Scalar>& xs) {
  Scalar total;
  std::vector<std::size_t> block(n);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      if (used != k) return;
      std::vector<std::size_t> size(k, 0);
      for (std::size_t b : block) ++size[b];
      Scalar prod(1);
      for (std::size_t s : size) prod *= xs[s - 1];
      total += prod;
      return;
    }
    for (std::size_t b = 0; b <= used && b < k; ++b) {
      block[i] = b;
      walk(i + 1, b == used ? used + 1 : used);
    }
  };
  if (n == 0) return Scalar(k == 0 ? 1 : 0);
  walk(0, 0);
  return total;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("classical triangles") {
  Triangle s2 = classical_s2(6), s1 = classical_s1(6);
  CHECK(s2.at(4, 2) == Scalar(7));
  CHECK(s2.at(3, 5) == Scalar(0));
  std::vector<Rat> ff = expand_roots({0, 1, 2, 3});
  for (std::size_t k = 0; k <= 4; ++k) CHECK(s1.at(4, k) == Scalar(ff[k]));
  CHECK_THROWS_AS((void)s1.at(7, 0), Error);
}

TEST_CASE("second kind") {
  CHECK(s2_assoc(identity_f(8), 8) == classical_s2(8));
  Triangle r = s2_assoc(rising_f(8), 8);
  CHECK(r.at(4, 2) == Scalar(36));
  for (long n = 0; n <= 8; ++n)
    for (long k = 0; k <= n; ++k) CHECK(r.at(n, k) == Scalar(lah(n, k)));
  for (std::size_t n = 0; n <= 8; ++n) CHECK(r.at(n, 0) == Scalar(n == 0 ? 1 : 0));
  CHECK(code_of([] { (void)s2_assoc(identity_f(3), 5); }) == Errc::InsufficientOrder);
}

TEST_CASE("first kind") {
  Triangle s1 = s1_assoc(identity_f(8), 8);
  CHECK(s1 == classical_s1(8));
  CHECK(s1.at(4, 1) == Scalar(-6));
  Triangle ml = s1_assoc(mittag_f(6), 6);
  CHECK(ml.at(2, 1) == Scalar(Rat(-1, 2)));
  for (long n = 0; n <= 6; ++n)
    for (long k = 0; k <= n; ++k) {
      Rat sgn = (n - k) % 2 == 0 ? 1 : -1;
      CHECK(ml.at(n, k) == Scalar(sgn * lah(n, k) / Rat(2).pow(n)));
    }
  CHECK(s1_assoc(mittag_f(6), 6, S1Path::Log) == ml);
  // f = 3t + t^2: S1(n,n) = f'(0)^n.
  DeltaSeries f(Series(std::vector<Scalar>{0, 3, 1, 0, 0, 0}));
  Triangle t = s1_assoc(f, 5);
  for (long n = 0; n <= 5; ++n) CHECK(t.at(n, n) == Scalar(Rat(3).pow(n)));
  Triangle u = s2_assoc(f, 5);
  for (long n = 0; n <= 5; ++n) CHECK(u.at(n, n) == Scalar(Rat(1, 3).pow(n)));
}

TEST_CASE("associated logarithm") {
  CHECK(assoc_log(identity_f(8)) == Series::log1p_t(8));
  Series t = t_at(8);
  CHECK(assoc_log(rising_f(8)) == div(t, one_at(8) + t));
  Series ml = assoc_log(mittag_f(8));
  CHECK(ml == div(t, Series::constant(2, 8) + t));
  CHECK(ml[2] == Scalar(Rat(-1, 4)));
}

TEST_CASE("bernoulli families") {
  BernoulliFamily b = bernoulli_assoc(identity_f(7), 1, 6);
  std::vector<Rat> classical{1, Rat(-1, 2), Rat(1, 6), 0, Rat(-1, 30), 0, Rat(1, 42)};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(b.values[n] == Scalar(classical[n]));

  BernoulliFamily z = bernoulli_assoc(identity_f(6), 0, 5, true);
  REQUIRE(z.polys.has_value());
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<Scalar> c(n + 1, Scalar(0));
    c[n] = 1;
    CHECK((*z.polys)[n] == XPoly{c, Basis::Monomial});
  }
  BernoulliFamily three = bernoulli_assoc(identity_f(3), 3, 1);
  CHECK(three.values[1] == Scalar(Rat(-3, 2)));
  CHECK(Scalar(binomial(2, 1)) * three.values[1] == classical_s1(3).at(3, 2));

  // B_1(x) = x - 1/2
  BernoulliFamily bx = bernoulli_assoc(identity_f(3), 1, 2, true);
  CHECK((*bx.polys)[1] == XPoly{{Scalar(Rat(-1, 2)), Scalar(1)}, Basis::Monomial});
  CHECK((*bx.polys)[2].eval(Scalar(0)) == Scalar(Rat(1, 6)));

  DeltaSeries two_t(Series(std::vector<Scalar>{0, 2, 0, 0}));
  CHECK(code_of([&] { (void)bernoulli_assoc(two_t, Rat(1, 2), 2); }) == Errc::NonUnitBaseForRationalPower);
  CHECK(bernoulli_assoc(two_t, -1, 2).values[0] == Scalar(2));
  CHECK(code_of([] { (void)bernoulli_assoc(identity_f(3), 1, 3); }) == Errc::InsufficientOrder);
  // Rational order: (t/(e^t-1))^{1/2} squared is the alpha = 1 family.
  BernoulliFamily half = bernoulli_assoc(identity_f(7), Rat(1, 2), 6);
  Series h = Series::from_egf(half.values);
  CHECK(Series::from_egf(bernoulli_assoc(identity_f(7), 1, 6).values) == h * h);
}

TEST_CASE("partial bell polynomials") {
  testing::Gen g(201);
  std::vector<Scalar> xs;
  for (int i = 0; i < 8; ++i) xs.push_back(g.rat());
  Scalar x1 = xs[0], x2 = xs[1], x3 = xs[2];
  CHECK(partial_bell(4, 2, xs) == Scalar(3) * x2 * x2 + Scalar(4) * x1 * x3);
  CHECK(partial_bell(5, 1, xs) == xs[4]);
  CHECK(partial_bell(5, 5, {x1}) == x1.pow(5));
  CHECK(partial_bell(0, 0, {}) == Scalar(1));
  CHECK(partial_bell(3, 0, xs) == Scalar(0));
  CHECK(code_of([&] { (void)partial_bell(4, 2, {x1, x2}); }) == Errc::ArityTooSmall);
  for (std::size_t n = 0; n <= 7; ++n)
    for (std::size_t k = 0; k <= n; ++k) CHECK(partial_bell(n, k, xs) == bell_brute(n, k, xs));
  // Symbolic arguments.
  std::vector<Scalar> ls{Scalar::lambda(), Scalar(1), Scalar::lambda() * Scalar::lambda(), Scalar(2)};
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 1; k <= n; ++k) CHECK(partial_bell(n, k, ls) == bell_brute(n, k, ls));
}

TEST_CASE("first kind through bernoulli numbers") {
  CHECK(s1_via_bernoulli(identity_f(4), 3, 2) == Scalar(-3));
  CHECK(s1_via_bernoulli(identity_f(2), 0, 0) == Scalar(1));
  DeltaSeries f(Series(std::vector<Scalar>{0, 2, 1, 0, 0, 0, 0}));
  for (std::size_t n = 0; n <= 6; ++n) CHECK(s1_via_bernoulli(f, n, n) == Scalar(2).pow(static_cast<long>(n)));
  Triangle s1 = s1_assoc(rising_f(7), 7);
  for (std::size_t n = 0; n <= 7; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(s1_via_bernoulli(rising_f(7), n, k) == s1.at(n, k));
      CHECK(s1_via_partial_bell(rising_f(7), n, k) == s1.at(n, k));
      CHECK(s1_via_bernoulli_bell(rising_f(7), n, k) == s1.at(n, k));
    }
}

TEST_CASE("Bell polynomials of exponential moments") {
  CHECK(lemma_bell_moments(identity_f(4), 1, 1) == Scalar(Rat(1, 2)));
  CHECK(lemma_bell_moments_rhs(identity_f(4), 1, 1) == Scalar(Rat(1, 2)));
  CHECK(lemma_bell_moments(rising_f(5), 2, 1) == Scalar(2));
  CHECK(lemma_bell_moments_rhs(rising_f(5), 2, 1) == Scalar(2));
  for (std::size_t n = 0; n <= 4; ++n) CHECK(lemma_bell_moments(identity_f(6), n, 0) == Scalar(n == 0 ? 1 : 0));
  // f = 1 - e^{-t}: exp(fbar) = 1/(1-t), so p_n = n!.
  std::vector<Scalar> p = exp_moments(rising_f(5), 4);
  CHECK(p == std::vector<Scalar>{1, 1, 2, 6, 24});
}

TEST_CASE("bernoulli numbers from second kind") {
  CHECK(bernoulli_via_s2(identity_f(4), 1, 2) == Scalar(Rat(1, 6)));
  CHECK(bernoulli_via_s2_single(identity_f(4), 2) == Scalar(Rat(1, 6)));
  CHECK(bernoulli_via_s2(identity_f(4), 2, 1) == Scalar(-1));
  // Direct expansion of (t/(e^t-1))^2 at t^1: 2 * (-1/2).
  Series k = div(one_at(3), shift_down(Series::exp_t(4) - one_at(4), 1));
  CHECK((k * k).egf(1) == Scalar(-1));
  DeltaSeries f(Series(std::vector<Scalar>{0, 2, 1, 0, 0}));
  CHECK(bernoulli_via_s2(f, 3, 0) == Scalar(8));
  CHECK(code_of([&] { (void)bernoulli_via_s2(f, Rat(1, 3), 1); }) == Errc::NonRepresentablePower);
  DeltaSeries four(Series(std::vector<Scalar>{0, Rat(1, 4), 1, 0, 0}));
  CHECK(bernoulli_via_s2(four, Rat(1, 2), 0) == Scalar(Rat(1, 2)));
}

TEST_CASE("schloemilch formula") {
  CHECK(schloemilch_s1(identity_f(8), 4, 2) == Scalar(11));
  CHECK(schloemilch_s1(rising_f(8), 3, 1) == Scalar(6));
  CHECK(schloemilch_s1(identity_f(2), 0, 0) == Scalar(1));
  DeltaSeries f(Series(std::vector<Scalar>{0, 3, 1, 0, 0, 0, 0}));
  CHECK(schloemilch_s1(f, 4, 4) == Scalar(81));
  CHECK(code_of([] { (void)schloemilch_s1(identity_f(3), 4, 1); }) == Errc::InsufficientOrder);
}

TEST_CASE("logarithm from second kind") {
  CHECK(assoc_log_expansion(identity_f(14), 8) == Series::log1p_t(8));
  Series l = Series::log1p_t(8);
  DeltaSeries lah_bell(div(t_at(14), one_at(14) + t_at(14)));
  CHECK(assoc_log_expansion(lah_bell, 8) == div(l, one_at(8) + l));
  DeltaSeries f(Series(std::vector<Scalar>{0, 5, 1, 0, 0, 0}));
  CHECK(assoc_log_expansion(f, 1)[1] == Scalar(5));
}

TEST_CASE("associated sequences and bell polynomials") {
  auto mono = poly_seq(identity_f(5), 5);
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<Scalar> c(n + 1, Scalar(0));
    c[n] = 1;
    CHECK(mono[n] == XPoly{c, Basis::Monomial});
  }
  auto bell = poly_seq(bell_f(3), 3);
  CHECK(bell[2] == XPoly{{0, 1, 1}, Basis::Monomial});
  CHECK(bell_assoc(identity_f(3), 3)[2] == XPoly{{0, 1, 1}, Basis::Monomial});
  CHECK(bell_assoc(identity_f(3), 3)[0] == XPoly{{1}, Basis::Monomial});

  // (e^{lt}-1)/l has p_n(x) = (x)_{n,l}.
  Scalar lam = Scalar::lambda();
  std::vector<Scalar> c{0};
  Scalar pw(1);
  for (long n = 1; n <= 5; ++n) {
    c.push_back(pw / Scalar(Rat::factorial(n)));
    pw *= lam;
  }
  DeltaSeries deg(Series(c, Ring::QL));
  auto pl = poly_seq(deg, 5);
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<Scalar> unit(n + 1, Scalar(0));
    unit[n] = 1;
    CHECK(basis_convert(XPoly{unit, Basis::FallingLambda}, Basis::Monomial) == pl[n]);
  }

  auto bells = bell_assoc(rising_f(6), 6);
  Triangle s2 = s2_assoc(rising_f(6), 6);
  for (std::size_t n = 0; n <= 6; ++n) {
    Scalar sum;
    for (std::size_t k = 0; k <= n; ++k) sum += s2.at(n, k);
    CHECK(bells[n].eval(Scalar(1)) == sum);
  }
}

TEST_CASE("basis conversion") {
  CHECK(basis_convert(XPoly{{0, 0, 1}, Basis::Monomial}, Basis::Falling) == XPoly{{0, 1, 1}, Basis::Falling});
  CHECK(basis_convert(XPoly{{0, 0, 1}, Basis::Falling}, Basis::Monomial) == XPoly{{0, -1, 1}, Basis::Monomial});
  DeltaSeries r = rising_f(6);
  auto ps = poly_seq(r, 6);
  for (long n = 0; n <= 6; ++n) {
    std::vector<Scalar> lahs;
    for (long k = 0; k <= n; ++k) lahs.push_back(Scalar(lah(n, k)));
    CHECK(basis_convert(ps[n], Basis::Falling, &r) == XPoly{lahs, Basis::Falling});
  }
  CHECK(code_of([] { (void)basis_convert(XPoly{{1}, Basis::Monomial}, Basis::Associated); }) == Errc::InvalidArgument);

  testing::Gen g(202);
  for (int i = 0; i < 10; ++i) {
    std::vector<Scalar> c;
    for (int d = 0; d <= 5; ++d) c.push_back(g.rat());
    XPoly p{c, Basis::Monomial};
    for (Basis b : {Basis::Falling, Basis::FallingLambda, Basis::Associated}) {
      XPoly q = basis_convert(p, b, &r);
      CHECK(basis_convert(q, Basis::Monomial, &r) == p);
    }
  }
}

TEST_CASE("orthogonality") {
  CHECK(orthogonality_check(identity_f(8), 8).ok);
  CHECK(orthogonality_check(rising_f(8), 8).ok);
  Triangle s2 = s2_assoc(mittag_f(6), 6), s1 = s1_assoc(mittag_f(6), 6);
  s2.set(4, 2, s2.at(4, 2) + Scalar(1));
  CheckReport rep = orthogonality_check(s2, s1);
  CHECK_FALSE(rep.ok);
  CHECK(rep.index == std::vector<std::size_t>{4, 2});
  CHECK(rep.describe().find("(4,2)") != std::string::npos);
}

TEST_CASE("binomial identities") {
  CheckReport rep = binomial_identities_check(12);
  CHECK(rep.ok);
  CHECK(rep.checked > 0);
}

TEST_CASE("triangles specialize at lambda") {
  Scalar lam = Scalar::lambda();
  std::vector<Scalar> c{0};
  Scalar pw(1);
  for (long n = 1; n <= 6; ++n) {
    c.push_back(pw / Scalar(Rat::factorial(n)));
    pw *= lam;
  }
  DeltaSeries deg(Series(c, Ring::QL));
  Triangle s2 = s2_assoc(deg, 6);
  CHECK(s2.ring() == Ring::QL);
  CHECK(s2.specialized(0) == classical_s2(6));
  CHECK(s1_assoc(deg, 6).specialized(0) == classical_s1(6));
  // Degenerate recurrence S2(n+1,k) = S2(n,k-1) + (k - n l) S2(n,k).
  for (std::size_t n = 1; n < 6; ++n)
    for (std::size_t k = 1; k <= n + 1; ++k)
      CHECK(s2.at(n + 1, k) ==
            s2.at(n, k - 1) + (Scalar(static_cast<long>(k)) - Scalar(static_cast<long>(n)) * lam) * s2.at(n, k));
}

TEST_CASE("property: independent paths agree on random delta series") {
  testing::Gen g(203);
  for (int i = 0; i < 8; ++i) {
    Ring r = i % 2 == 0 ? Ring::Q : Ring::QL;
    DeltaSeries f = g.delta(14, r);
    const std::size_t N = 6;
    Triangle s1 = s1_assoc(f, N);
    CHECK(s1_assoc(f, N, S1Path::Log) == s1);
    Triangle s2 = s2_assoc(f, 2 * N);
    Scalar p1 = f.linear().inverse();
    for (std::size_t n = 0; n <= N; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        CHECK(schloemilch_s1(s2, p1, n, k) == s1.at(n, k));
        CHECK(s1_via_bernoulli(f, n, k) == s1.at(n, k));
        CHECK(s1_via_partial_bell(f, n, k) == s1.at(n, k));
      }
    Series lg = assoc_log(f.truncated(N));
    CHECK(assoc_log_expansion(s2, p1, N) == lg.promoted(join(lg.ring(), s2.ring())));
    CHECK(orthogonality_check(f, N, 5).ok);

    DeltaSeries fbar = invert_newton(f);
    for (long a : {-2, -1, 1, 2, 3}) {
      BernoulliFamily fam = bernoulli_assoc(fbar, a, 4);
      for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(bernoulli_via_s2(s2, p1, a, n) == fam.values[n]);
        CHECK(lemma_bernoulli_bell(f, a, n) == fam.values[n]);
      }
    }
    for (std::size_t n = 0; n <= 4; ++n) CHECK(bernoulli_via_s2_single(s2, p1, n) == bernoulli_assoc(fbar, 1, 4).values[n]);
    for (std::size_t n = 0; n <= 5; ++n)
      for (std::size_t k = 0; k <= n; ++k) CHECK(lemma_bell_moments(f, n, k) == lemma_bell_moments_rhs(f, n, k));
  }
}

TEST_CASE("property: associated sequences expand in falling factorials") {
  testing::Gen g(204);
  for (int i = 0; i < 6; ++i) {
    DeltaSeries f = g.delta(7, i % 2 == 0 ? Ring::Q : Ring::QL);
    const std::size_t N = 7;
    Triangle s2 = s2_assoc(f, N), s1 = s1_assoc(f, N);
    auto ps = poly_seq(f, N);
    Triangle c1 = classical_s1(N);
    for (std::size_t n = 0; n <= N; ++n) {
      // p_n(x) = sum_k S2(n,k;f) (x)_k
      std::vector<Scalar> viaf(n + 1, Scalar(0));
      for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t m = 0; m <= k; ++m) viaf[m] += s2.at(n, k) * c1.at(k, m);
      CHECK(XPoly{viaf, Basis::Monomial} == ps[n]);
      // (x)_n = sum_k S1(n,k;f) p_k(x)
      std::vector<Scalar> back(n + 1, Scalar(0));
      for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t m = 0; m < ps[k].coeffs.size(); ++m) back[m] += s1.at(n, k) * ps[k].coeffs[m];
      std::vector<Scalar> ff;
      for (std::size_t m = 0; m <= n; ++m) ff.push_back(c1.at(n, m));
      CHECK(XPoly{back, Basis::Monomial} == XPoly{ff, Basis::Monomial});
    }
  }
}
