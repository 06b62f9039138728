#include "dseries/stirling.hpp"

#include <algorithm>
#include <random>

namespace dseries {

namespace {

Scalar zero_of(Ring r) { return Scalar(0).promoted(r); }
Scalar one_of(Ring r) { return Scalar(1).promoted(r); }

void require_order(std::size_t have, std::size_t need, const char* what) {
  if (have < need)
    throw Error(Errc::InsufficientOrder, std::string(what) + ": series order " + std::to_string(have) +
                                             " is below the required " + std::to_string(need));
}

Scalar factorial_of(std::size_t n) { return Scalar(Rat::factorial(n)); }

DeltaSeries at_order(const DeltaSeries& f, std::size_t order) {
  return f.truncated(std::max<std::size_t>(order, 1));
}

Series minus_one(const Series& s) { return s - Series::constant(one_of(s.ring()), s.order()); }

// exp(fbar(t)) - 1.
Series exp_bar_minus_one(const DeltaSeries& f) {
  return minus_one(exp_series(invert_newton(f).series()));
}

// Entry (n,k) = n! [t^n] base^k / k!.
Triangle power_columns(TriangleKind kind, const Series& base, std::size_t max_n, std::string fp) {
  Series b = base.resized(max_n);
  Triangle tri(kind, max_n, b.ring(), std::move(fp));
  tri.set(0, 0, one_of(b.ring()));
  Series col = Series::constant(one_of(b.ring()), max_n);
  for (std::size_t k = 1; k <= max_n; ++k) {
    col = scale(col * b, Scalar(Rat(1, static_cast<long>(k))));
    for (std::size_t n = k; n <= max_n; ++n) tri.set(n, k, col.egf(n));
  }
  return tri;
}

// t / (exp(g(t)) - 1) at order m.
Series bernoulli_kernel(const DeltaSeries& g, std::size_t m) {
  require_order(g.order(), m + 1, "bernoulli");
  Series q = shift_down(minus_one(exp_series(g.series().truncated(m + 1))), 1);
  return div(Series::constant(one_of(q.ring()), m), q);
}

Series kernel_power(const Series& kernel, const Rat& alpha) {
  if (alpha.is_integer()) return pow_int(kernel, alpha.num().get_si());
  if (!kernel[0].is_one())
    throw Error(Errc::NonUnitBaseForRationalPower,
                "order " + alpha.str() + " needs g'(0) = 1, got constant term " + kernel[0].str());
  return pow_ratio(kernel, alpha);
}

Scalar sign(std::size_t j) { return Scalar(j % 2 == 0 ? 1 : -1); }

Scalar kronecker(std::size_t a, std::size_t b) { return Scalar(a == b ? 1 : 0); }

// out_k = sum_n c_n T(n,k).
std::vector<Scalar> through(const Triangle& t, const std::vector<Scalar>& c) {
  std::vector<Scalar> out(c.size(), Scalar(0));
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n].is_zero()) continue;
    for (std::size_t k = 0; k <= n; ++k) out[k] += c[n] * t.at(n, k);
  }
  return out;
}

// Monomial coefficients of (x)_{n,l} for n = 0..max_n.
std::vector<std::vector<Scalar>> falling_lambda_expansions(std::size_t max_n) {
  std::vector<std::vector<Scalar>> e{{Scalar(1)}};
  for (std::size_t n = 0; n < max_n; ++n) {
    const auto& prev = e.back();
    std::vector<Scalar> next(prev.size() + 1, Scalar(0));
    Scalar shift = Scalar(static_cast<long>(n)) * Scalar::lambda();
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i + 1] += prev[i];
      next[i] -= prev[i] * shift;
    }
    e.push_back(std::move(next));
  }
  return e;
}

std::size_t degree_span(const XPoly& p) { return p.coeffs.empty() ? 0 : p.coeffs.size() - 1; }

XPoly to_monomial(const XPoly& p, const DeltaSeries* f);

XPoly from_monomial(const XPoly& m, Basis target, const DeltaSeries* f) {
  std::size_t d = degree_span(m);
  switch (target) {
    case Basis::Monomial: return m;
    case Basis::Falling: return XPoly{through(classical_s2(d), m.coeffs), Basis::Falling};
    case Basis::FallingLambda: {
      auto ex = falling_lambda_expansions(d);
      std::vector<Scalar> rest = m.coeffs, out(m.coeffs.size(), Scalar(0));
      for (std::size_t n = rest.size(); n-- > 0;) {
        out[n] = rest[n];
        if (out[n].is_zero()) continue;
        for (std::size_t i = 0; i <= n; ++i) rest[i] -= out[n] * ex[n][i];
      }
      return XPoly{std::move(out), Basis::FallingLambda};
    }
    case Basis::Associated: {
      if (f == nullptr) throw Error(Errc::InvalidArgument, "associated basis needs a delta series");
      XPoly fall = from_monomial(m, Basis::Falling, f);
      return XPoly{through(s1_assoc(*f, d), fall.coeffs), Basis::Associated};
    }
  }
  return m;
}

XPoly to_monomial(const XPoly& p, const DeltaSeries* f) {
  std::size_t d = degree_span(p);
  switch (p.basis) {
    case Basis::Monomial: return p;
    case Basis::Falling: return XPoly{through(classical_s1(d), p.coeffs), Basis::Monomial};
    case Basis::FallingLambda: {
      auto ex = falling_lambda_expansions(d);
      std::vector<Scalar> out(p.coeffs.size(), Scalar(0));
      for (std::size_t n = 0; n < p.coeffs.size(); ++n)
        for (std::size_t i = 0; i <= n; ++i) out[i] += p.coeffs[n] * ex[n][i];
      return XPoly{std::move(out), Basis::Monomial};
    }
    case Basis::Associated: {
      if (f == nullptr) throw Error(Errc::InvalidArgument, "associated basis needs a delta series");
      XPoly fall{through(s2_assoc(*f, d), p.coeffs), Basis::Falling};
      return to_monomial(fall, f);
    }
  }
  return p;
}

}  // namespace

std::string_view kind_name(TriangleKind k) noexcept {
  switch (k) {
    case TriangleKind::S1assoc: return "S1assoc";
    case TriangleKind::S2assoc: return "S2assoc";
    case TriangleKind::S1: return "S1";
    case TriangleKind::S2: return "S2";
    case TriangleKind::Lah: return "Lah";
    case TriangleKind::T1: return "T1";
    case TriangleKind::T2: return "T2";
    case TriangleKind::Other: return "Other";
  }
  return "Other";
}

Triangle::Triangle(TriangleKind kind, std::size_t max_n, Ring ring, std::string fingerprint)
    : kind_(kind), ring_(ring), fingerprint_(std::move(fingerprint)) {
  rows_.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) rows_.emplace_back(n + 1, zero_of(ring));
}

const Scalar& Triangle::at(std::size_t n, std::size_t k) const {
  static const Scalar zero;
  if (n > max_n())
    throw Error(Errc::IndexOutOfOrder, "row " + std::to_string(n) + " beyond triangle size " + std::to_string(max_n()));
  return k > n ? zero : rows_[n][k];
}

void Triangle::set(std::size_t n, std::size_t k, Scalar v) {
  if (n > max_n() || k > n) throw Error(Errc::IndexOutOfOrder, "cell outside the triangle");
  if (v.ring() > ring_) {
    ring_ = v.ring();
    for (auto& row : rows_)
      for (auto& c : row) c = c.promoted(ring_);
  }
  rows_[n][k] = v.promoted(ring_);
}

Triangle Triangle::specialized(const Rat& value) const {
  Triangle t(kind_, max_n(), Ring::Q, fingerprint_);
  for (std::size_t n = 0; n <= max_n(); ++n)
    for (std::size_t k = 0; k <= n; ++k) t.rows_[n][k] = eval_lambda(rows_[n][k], value);
  return t;
}

Triangle Triangle::promoted(Ring r) const {
  Triangle t = *this;
  if (r > ring_) {
    t.ring_ = r;
    for (auto& row : t.rows_)
      for (auto& c : row) c = c.promoted(r);
  }
  return t;
}

bool operator==(const Triangle& a, const Triangle& b) {
  if (a.max_n() != b.max_n()) return false;
  for (std::size_t n = 0; n <= a.max_n(); ++n)
    for (std::size_t k = 0; k <= n; ++k)
      if (!(a.rows_[n][k] == b.rows_[n][k])) return false;
  return true;
}

std::string_view basis_name(Basis b) noexcept {
  switch (b) {
    case Basis::Monomial: return "monomial";
    case Basis::Falling: return "falling";
    case Basis::FallingLambda: return "falling_lambda";
    case Basis::Associated: return "associated";
  }
  return "monomial";
}

int XPoly::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (!coeffs[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Scalar XPoly::eval(const Scalar& x) const {
  if (basis != Basis::Monomial) throw Error(Errc::InvalidArgument, "eval needs the monomial basis");
  Scalar acc;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

std::string XPoly::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    std::string c = coeffs[i].str();
    if (c.find(' ') != std::string::npos) c = "(" + c + ")";
    std::string b;
    std::string idx = std::to_string(i);
    switch (basis) {
      case Basis::Monomial: b = i == 0 ? "" : (i == 1 ? "x" : "x^" + idx); break;
      case Basis::Falling: b = "(x)_" + idx; break;
      case Basis::FallingLambda: b = "(x)_{" + idx + ",l}"; break;
      case Basis::Associated: b = "p_" + idx + "(x)"; break;
    }
    if (!out.empty()) out += " + ";
    if (b.empty()) out += c;
    else if (c == "1") out += b;
    else out += c + "*" + b;
  }
  return out.empty() ? "0" : out;
}

bool operator==(const XPoly& a, const XPoly& b) {
  if (a.basis != b.basis) return false;
  std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t i = 0; i < n; ++i) {
    Scalar x = i < a.coeffs.size() ? a.coeffs[i] : Scalar();
    Scalar y = i < b.coeffs.size() ? b.coeffs[i] : Scalar();
    if (!(x == y)) return false;
  }
  return true;
}

Triangle classical_s2(std::size_t max_n) {
  Triangle t(TriangleKind::S2, max_n, Ring::Q, "t");
  t.set(0, 0, Scalar(1));
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      t.set(n, k, Scalar(static_cast<long>(k)) * t.at(n - 1, k) + t.at(n - 1, k - 1));
  return t;
}

Triangle classical_s1(std::size_t max_n) {
  Triangle t(TriangleKind::S1, max_n, Ring::Q, "t");
  t.set(0, 0, Scalar(1));
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      t.set(n, k, t.at(n - 1, k - 1) - Scalar(static_cast<long>(n - 1)) * t.at(n - 1, k));
  return t;
}

Triangle s2_assoc(const DeltaSeries& f, std::size_t max_n) {
  require_order(f.order(), max_n, "s2_assoc");
  return power_columns(TriangleKind::S2assoc, exp_bar_minus_one(at_order(f, max_n)), max_n, f.series().str());
}

Triangle s1_assoc(const DeltaSeries& f, std::size_t max_n, S1Path path) {
  require_order(f.order(), max_n, "s1_assoc");
  DeltaSeries g = at_order(f, max_n);
  Series ebar = path == S1Path::Inverse ? invert_newton(DeltaSeries(exp_bar_minus_one(g))).series() : assoc_log(g);
  return power_columns(TriangleKind::S1assoc, ebar, max_n, f.series().str());
}

Series assoc_log(const DeltaSeries& f) {
  return compose(f.series(), Series::log1p_t(f.order()).promoted(f.ring()));
}

BernoulliFamily bernoulli_assoc(const DeltaSeries& g, const Rat& alpha, std::size_t max_n, bool with_x) {
  Series k = kernel_power(bernoulli_kernel(g, max_n), alpha);
  BernoulliFamily fam{g, alpha, {}, std::nullopt};
  for (std::size_t n = 0; n <= max_n; ++n) fam.values.push_back(k.egf(n));
  if (with_x) {
    Series gs = g.series().truncated(max_n);
    unify(k, gs);
    std::vector<XPoly> polys(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) polys[n].coeffs.assign(n + 1, zero_of(k.ring()));
    Series col = Series::constant(one_of(k.ring()), max_n);
    for (std::size_t j = 0; j <= max_n; ++j) {
      Series prod = k * col;
      for (std::size_t n = j; n <= max_n; ++n) polys[n].coeffs[j] = prod.egf(n);
      col = scale(col * gs, Scalar(Rat(1, static_cast<long>(j + 1))));
    }
    fam.polys = std::move(polys);
  }
  return fam;
}

Scalar partial_bell(std::size_t n, std::size_t k, const std::vector<Scalar>& xs) {
  if (k > n) return Scalar(0);
  if (k == 0) return kronecker(n, 0);
  std::size_t arity = n - k + 1;
  if (xs.size() < arity)
    throw Error(Errc::ArityTooSmall, "B_{" + std::to_string(n) + "," + std::to_string(k) + "} needs " +
                                         std::to_string(arity) + " arguments, got " + std::to_string(xs.size()));
  std::vector<Scalar> c(n + 1, Scalar(0));
  for (std::size_t m = 1; m <= arity; ++m) c[m] = xs[m - 1] / factorial_of(m);
  Series x(std::move(c));
  return pow_int(x, static_cast<long>(k))[n] * factorial_of(n) / factorial_of(k);
}

Scalar s1_via_bernoulli(const DeltaSeries& f, std::size_t n, std::size_t k) {
  if (k > n) return Scalar(0);
  if (k == 0) return kronecker(n, 0);
  std::size_t m = n - k;
  require_order(f.order(), m + 1, "s1_via_bernoulli");
  DeltaSeries fbar = invert_newton(f.truncated(m + 1));
  Scalar b = pow_int(bernoulli_kernel(fbar, m), static_cast<long>(n)).egf(m);
  return Scalar(binomial(static_cast<long>(n) - 1, static_cast<long>(k) - 1)) * b;
}

Scalar s1_via_partial_bell(const DeltaSeries& f, std::size_t n, std::size_t k) {
  if (k > n) return Scalar(0);
  if (k == 0) return kronecker(n, 0);
  std::size_t arity = n - k + 1;
  require_order(f.order(), arity, "s1_via_partial_bell");
  Series lg = assoc_log(f.truncated(arity));
  std::vector<Scalar> xs;
  for (std::size_t m = 1; m <= arity; ++m) xs.push_back(lg.egf(m));
  return partial_bell(n, k, xs);
}

Scalar s1_via_bernoulli_bell(const DeltaSeries& f, std::size_t n, std::size_t k) {
  if (k > n) return Scalar(0);
  if (k == 0) return kronecker(n, 0);
  std::size_t arity = n - k + 1;
  require_order(f.order(), arity, "s1_via_bernoulli_bell");
  DeltaSeries fbar = invert_newton(f.truncated(arity));
  Series kernel = bernoulli_kernel(fbar, arity - 1);
  std::vector<Scalar> xs;
  Series pw = kernel;
  for (std::size_t m = 1; m <= arity; ++m) {
    xs.push_back(pw.egf(m - 1));
    pw = pw * kernel;
  }
  return partial_bell(n, k, xs);
}

std::vector<Scalar> exp_moments(const DeltaSeries& f, std::size_t max_n) {
  require_order(f.order(), max_n, "exp_moments");
  Series e = exp_series(invert_newton(at_order(f, max_n)).series());
  std::vector<Scalar> p;
  for (std::size_t n = 0; n <= max_n; ++n) p.push_back(e.egf(n));
  return p;
}

namespace {

// p_{m+1}/(m+1) for m = 1..count.
std::vector<Scalar> shifted_moments(const std::vector<Scalar>& p, std::size_t count) {
  std::vector<Scalar> xs;
  for (std::size_t m = 1; m <= count; ++m) xs.push_back(p[m + 1] / Scalar(static_cast<long>(m + 1)));
  return xs;
}

}  // namespace

Scalar lemma_bell_moments(const DeltaSeries& f, std::size_t n, std::size_t k) {
  if (k > n) return Scalar(0);
  if (k == 0) return kronecker(n, 0);
  std::size_t arity = n - k + 1;
  std::vector<Scalar> p = exp_moments(f, arity + 1);
  return partial_bell(n, k, shifted_moments(p, arity));
}

Scalar lemma_bell_moments_rhs(const DeltaSeries& f, std::size_t n, std::size_t k) {
  Triangle s2 = s2_assoc(f, n + k);
  Scalar p1 = f.linear().inverse();
  Scalar scale_nk = factorial_of(n) / factorial_of(n + k);
  Scalar sum;
  for (std::size_t j = 0; j <= k; ++j) {
    Scalar term = Scalar(binomial(static_cast<long>(n + k), static_cast<long>(k - j))) * scale_nk *
                  (-p1).pow(static_cast<long>(k - j)) * s2.at(n + j, j);
    sum += term;
  }
  return sum;
}

Scalar lemma_bernoulli_bell(const DeltaSeries& f, const Rat& alpha, std::size_t n) {
  std::vector<Scalar> p = exp_moments(f, n + 1);
  std::vector<Scalar> xs = shifted_moments(p, n);
  Scalar sum;
  Rat falling(1);
  for (std::size_t k = 0; k <= n; ++k) {
    Scalar term = Scalar(falling) * pow_rational(p[1], -alpha - Rat(static_cast<long>(k))) * partial_bell(n, k, xs);
    sum += term;
    falling *= -alpha - Rat(static_cast<long>(k));
  }
  return sum;
}

Scalar bernoulli_via_s2(const Triangle& s2, const Scalar& p1, const Rat& alpha, std::size_t n) {
  (void)pow_rational(p1, -alpha);
  Scalar sum;
  for (std::size_t k = 0; k <= n; ++k) {
    Rat outer = binomial(alpha + Rat(static_cast<long>(k)) - Rat(1), static_cast<long>(k));
    for (std::size_t j = 0; j <= k; ++j) {
      const Scalar& s = s2.at(n + j, j);
      if (s.is_zero()) continue;
      Rat w = outer * binomial(static_cast<long>(k), static_cast<long>(j)) /
              binomial(static_cast<long>(n + j), static_cast<long>(j));
      sum += Scalar(w) * sign(j) * pow_rational(p1, -alpha - Rat(static_cast<long>(j))) * s;
    }
  }
  return sum;
}

Scalar bernoulli_via_s2(const DeltaSeries& f, const Rat& alpha, std::size_t n) {
  return bernoulli_via_s2(s2_assoc(f, 2 * n), f.linear().inverse(), alpha, n);
}

Scalar bernoulli_via_s2_single(const Triangle& s2, const Scalar& p1, std::size_t n) {
  Scalar sum;
  for (std::size_t j = 0; j <= n; ++j) {
    Rat w = binomial(static_cast<long>(n + 1), static_cast<long>(j + 1)) /
            binomial(static_cast<long>(n + j), static_cast<long>(j));
    sum += Scalar(w) * sign(j) * p1.pow(-1 - static_cast<long>(j)) * s2.at(n + j, j);
  }
  return sum;
}

Scalar bernoulli_via_s2_single(const DeltaSeries& f, std::size_t n) {
  return bernoulli_via_s2_single(s2_assoc(f, 2 * n), f.linear().inverse(), n);
}

Scalar schloemilch_s1(const Triangle& s2, const Scalar& p1, std::size_t n, std::size_t k) {
  if (k > n) return Scalar(0);
  const long ln = static_cast<long>(n), lk = static_cast<long>(k);
  Scalar sum;
  for (std::size_t j = 0; j <= n - k; ++j) {
    const long lj = static_cast<long>(j);
    const Scalar& s = s2.at(n - k + j, j);
    if (s.is_zero()) continue;
    Rat w = binomial(ln + lj - 1, ln + lj - lk) * binomial(2 * ln - lk, ln - lk - lj);
    if (w.is_zero()) continue;
    sum += Scalar(w) * sign(j) * p1.pow(-ln - lj) * s;
  }
  return sum;
}

Scalar schloemilch_s1(const DeltaSeries& f, std::size_t n, std::size_t k) {
  if (k > n) return Scalar(0);
  return schloemilch_s1(s2_assoc(f, 2 * (n - k)), f.linear().inverse(), n, k);
}

Series assoc_log_expansion(const Triangle& s2, const Scalar& p1, std::size_t max_n) {
  std::vector<Scalar> c(max_n + 1, zero_of(s2.ring()));
  for (std::size_t n = 1; n <= max_n; ++n) {
    const long ln = static_cast<long>(n);
    Scalar sum;
    for (std::size_t j = 0; j < n; ++j) {
      const long lj = static_cast<long>(j);
      sum += Scalar(binomial(2 * ln - 1, ln - 1 - lj)) * sign(j) * p1.pow(-ln - lj) * s2.at(n - 1 + j, j);
    }
    c[n] = sum / factorial_of(n);
  }
  return Series(std::move(c));
}

Series assoc_log_expansion(const DeltaSeries& f, std::size_t max_n) {
  std::size_t need = max_n == 0 ? 0 : 2 * max_n - 2;
  Series s = assoc_log_expansion(s2_assoc(f, need), f.linear().inverse(), max_n);
  return s.promoted(f.ring());
}

std::vector<XPoly> poly_seq(const DeltaSeries& f, std::size_t max_n) {
  require_order(f.order(), max_n, "poly_seq");
  Series fbar = invert_newton(at_order(f, max_n)).series();
  Triangle t = power_columns(TriangleKind::Other, fbar, max_n, f.series().str());
  std::vector<XPoly> out;
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(XPoly{t.rows()[n], Basis::Monomial});
  return out;
}

std::vector<XPoly> bell_assoc(const DeltaSeries& f, std::size_t max_n) {
  Triangle t = s2_assoc(f, max_n);
  std::vector<XPoly> out;
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(XPoly{t.rows()[n], Basis::Monomial});
  return out;
}

XPoly basis_convert(const XPoly& p, Basis target, const DeltaSeries* f) {
  if (p.basis == target) return p;
  if (p.basis == Basis::Associated && target == Basis::Falling) {
    if (f == nullptr) throw Error(Errc::InvalidArgument, "associated basis needs a delta series");
    return XPoly{through(s2_assoc(*f, degree_span(p)), p.coeffs), Basis::Falling};
  }
  if (p.basis == Basis::Falling && target == Basis::Associated) {
    if (f == nullptr) throw Error(Errc::InvalidArgument, "associated basis needs a delta series");
    return XPoly{through(s1_assoc(*f, degree_span(p)), p.coeffs), Basis::Associated};
  }
  return from_monomial(to_monomial(p, f), target, f);
}

std::string CheckReport::describe() const {
  if (ok) return "ok (" + std::to_string(checked) + " checks)";
  std::string idx;
  for (std::size_t i : index) idx += (idx.empty() ? "" : ",") + std::to_string(i);
  return relation + " fails at (" + idx + "): " + lhs + " != " + rhs;
}

void CheckReport::fail(std::string rel, std::vector<std::size_t> idx, const Scalar& l, const Scalar& r) {
  if (!ok) return;
  ok = false;
  relation = std::move(rel);
  index = std::move(idx);
  lhs = l.str();
  rhs = r.str();
}

CheckReport orthogonality_check(const Triangle& s2, const Triangle& s1, std::uint64_t seed) {
  CheckReport rep;
  const std::size_t N = std::min(s2.max_n(), s1.max_n());
  // Descending l so a single corrupted cell is reported at its own coordinates.
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t l = n + 1; l-- > 0;) {
      Scalar a, b;
      for (std::size_t k = l; k <= n; ++k) {
        a += s2.at(n, k) * s1.at(k, l);
        b += s1.at(n, k) * s2.at(k, l);
      }
      rep.checked += 2;
      if (!(a == kronecker(n, l))) rep.fail("sum S2(n,k)S1(k,l) = delta", {n, l}, a, kronecker(n, l));
      if (!(b == kronecker(n, l))) rep.fail("sum S1(n,k)S2(k,l) = delta", {n, l}, b, kronecker(n, l));
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  std::vector<Scalar> b(N + 1);
  for (auto& x : b) x = Scalar(Rat(num(rng), den(rng)));

  std::vector<Scalar> a(N + 1), back(N + 1);
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t k = 0; k <= n; ++k) a[n] += s2.at(n, k) * b[k];
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t k = 0; k <= n; ++k) back[n] += s1.at(n, k) * a[k];
    ++rep.checked;
    if (!(back[n] == b[n])) rep.fail("inverse relation (b)", {n}, back[n], b[n]);
  }

  std::fill(a.begin(), a.end(), Scalar());
  std::fill(back.begin(), back.end(), Scalar());
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t k = n; k <= N; ++k) a[n] += s2.at(k, n) * b[k];
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t k = n; k <= N; ++k) back[n] += s1.at(k, n) * a[k];
    ++rep.checked;
    if (!(back[n] == b[n])) rep.fail("inverse relation (c)", {n}, back[n], b[n]);
  }
  return rep;
}

CheckReport orthogonality_check(const DeltaSeries& f, std::size_t max_n, std::uint64_t seed) {
  return orthogonality_check(s2_assoc(f, max_n), s1_assoc(f, max_n), seed);
}

CheckReport binomial_identities_check(std::size_t max_n) {
  CheckReport rep;
  for (long n = 1; n <= static_cast<long>(max_n); ++n) {
    for (long k = 0; k <= n; ++k) {
      for (long j = 0; j <= n - k; ++j) {
        Rat lhs1;
        for (long i = j; i <= n - k; ++i) lhs1 += binomial(n + i - 1, i) * binomial(i, j);
        Rat rhs1 = Rat(n, n + j) * binomial(2 * n - k, n) * binomial(n - k, j);
        ++rep.checked;
        if (lhs1 != rhs1 || !lhs1.is_integer())
          rep.fail("first binomial identity", {static_cast<std::size_t>(n), static_cast<std::size_t>(k),
                                               static_cast<std::size_t>(j)}, lhs1, rhs1);
        Rat lhs2 = binomial(n - 1, k - 1) * binomial(2 * n - k, n) * Rat(n, n + j) * binomial(n - k, j) /
                   binomial(n - k + j, j);
        Rat rhs2 = binomial(n + j - 1, n + j - k) * binomial(2 * n - k, n - k - j);
        ++rep.checked;
        if (lhs2 != rhs2)
          rep.fail("second binomial identity", {static_cast<std::size_t>(n), static_cast<std::size_t>(k),
                                                static_cast<std::size_t>(j)}, lhs2, rhs2);
      }
    }
  }
  return rep;
}

}  // namespace dseries
