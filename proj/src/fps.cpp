#include "dseries/fps.hpp"

#include <algorithm>

namespace dseries {

namespace {

void require_same_shape(const Series& a, const Series& b, const char* op) {
  if (a.order() != b.order())
    throw Error(Errc::OrderMismatch, std::string(op) + ": orders " + std::to_string(a.order()) +
                                         " and " + std::to_string(b.order()));
  if (a.ring() != b.ring())
    throw Error(Errc::RingMismatch, std::string(op) + ": rings " + std::string(ring_name(a.ring())) +
                                        " and " + std::string(ring_name(b.ring())));
}

Scalar zero_in(Ring r) { return Scalar(0).promoted(r); }

}  // namespace

// ---------------------------------------------------------------- Series

Series::Series(std::size_t order, Ring ring) : c_(order + 1, zero_in(ring)), ring_(ring) {}

Series::Series(std::vector<Scalar> coeffs) : c_(std::move(coeffs)), ring_(Ring::Q) {
  if (c_.empty()) throw Error(Errc::InvalidArgument, "series needs at least one coefficient");
  for (const auto& c : c_) ring_ = join(ring_, c.ring());
  for (auto& c : c_) c = c.promoted(ring_);
}

Series::Series(std::vector<Scalar> coeffs, Ring ring) : c_(std::move(coeffs)), ring_(ring) {
  if (c_.empty()) throw Error(Errc::InvalidArgument, "series needs at least one coefficient");
  for (auto& c : c_) {
    if (c.ring() > ring)
      throw Error(Errc::RingMismatch, "coefficient " + c.str() + " outside ring " + std::string(ring_name(ring)));
    c = c.promoted(ring);
  }
}

Series Series::constant(const Scalar& c, std::size_t order) {
  Series s(order, c.ring());
  s.c_[0] = c;
  return s;
}

Series Series::identity(std::size_t order, Ring ring) { return monomial(Scalar(1).promoted(ring), 1, order); }

Series Series::monomial(const Scalar& c, std::size_t power, std::size_t order) {
  Series s(order, c.ring());
  if (power <= order) s.c_[power] = c;
  return s;
}

Series Series::exp_t(std::size_t order) {
  std::vector<Scalar> c(order + 1);
  Rat f(1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) f /= Rat(static_cast<long>(n));
    c[n] = f;
  }
  return Series(std::move(c));
}

Series Series::log1p_t(std::size_t order) {
  std::vector<Scalar> c(order + 1, Scalar(0));
  for (std::size_t n = 1; n <= order; ++n)
    c[n] = Rat(n % 2 == 1 ? 1 : -1, static_cast<long>(n));
  return Series(std::move(c));
}

Series Series::geometric(std::size_t order) { return Series(std::vector<Scalar>(order + 1, Scalar(1))); }

Series Series::from_egf(const std::vector<Scalar>& egf) {
  std::vector<Scalar> c;
  c.reserve(egf.size());
  for (std::size_t n = 0; n < egf.size(); ++n) c.push_back(egf[n] / Scalar(Rat::factorial(n)));
  return Series(std::move(c));
}

Scalar Series::egf(std::size_t n) const { return c_.at(n) * Scalar(Rat::factorial(n)); }

Series Series::truncated(std::size_t order) const {
  if (order > this->order())
    throw Error(Errc::InsufficientOrder, "cannot truncate order " + std::to_string(this->order()) +
                                             " series to order " + std::to_string(order));
  return resized(order);
}

Series Series::resized(std::size_t order) const {
  Series s = *this;
  s.c_.resize(order + 1, zero_in(ring_));
  return s;
}

Series Series::promoted(Ring r) const {
  if (r <= ring_) return *this;
  Series s = *this;
  for (auto& c : s.c_) c = c.promoted(r);
  s.ring_ = r;
  return s;
}

Series Series::demoted() const {
  std::vector<Scalar> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(x.demoted());
  return Series(std::move(c));
}

std::size_t Series::valuation() const {
  for (std::size_t n = 0; n < c_.size(); ++n)
    if (!c_[n].is_zero()) return n;
  return c_.size();
}

bool Series::is_zero() const { return valuation() == c_.size(); }

std::string Series::str() const {
  std::string out;
  for (std::size_t n = 0; n < c_.size(); ++n) {
    if (c_[n].is_zero()) continue;
    std::string c = c_[n].str();
    if (c.find(' ') != std::string::npos) c = "(" + c + ")";
    if (!out.empty()) out += " + ";
    if (n == 0) out += c;
    else {
      std::string mono = "t" + (n > 1 ? "^" + std::to_string(n) : std::string());
      if (c == "1") out += mono;
      else if (c == "-1") out += "-" + mono;
      else out += c + "*" + mono;
    }
  }
  out += (out.empty() ? "O(t^" : " + O(t^") + std::to_string(order() + 1) + ")";
  return out;
}

bool operator==(const Series& a, const Series& b) {
  if (a.order() != b.order()) return false;
  for (std::size_t n = 0; n <= a.order(); ++n)
    if (!(a.c_[n] == b.c_[n])) return false;
  return true;
}

std::vector<Scalar> EgfView::values() const {
  std::vector<Scalar> v;
  for (std::size_t n = 0; n <= s_->order(); ++n) v.push_back(s_->egf(n));
  return v;
}

// ---------------------------------------------------------------- DeltaSeries

DeltaSeries::DeltaSeries(Series s) : s_(std::move(s)) {
  if (s_.order() < 1) throw Error(Errc::NotDelta, "a delta series needs order >= 1");
  if (!s_[0].is_zero()) throw Error(Errc::NotDelta, "nonzero constant term " + s_[0].str());
  if (s_[1].is_zero()) throw Error(Errc::NotDelta, "zero linear term");
  if (!s_[1].is_unit()) s_ = s_.promoted(Ring::QLrat);
}

// ---------------------------------------------------------------- arithmetic

void unify(Series& a, Series& b) {
  Ring r = join(a.ring(), b.ring());
  a = a.promoted(r);
  b = b.promoted(r);
}

Series add(const Series& a, const Series& b) {
  require_same_shape(a, b, "add");
  std::vector<Scalar> c(a.coeffs());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] += b[n];
  return Series(std::move(c), a.ring());
}

Series sub(const Series& a, const Series& b) {
  require_same_shape(a, b, "sub");
  std::vector<Scalar> c(a.coeffs());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] -= b[n];
  return Series(std::move(c), a.ring());
}

Series neg(const Series& a) {
  std::vector<Scalar> c(a.coeffs());
  for (auto& x : c) x = -x;
  return Series(std::move(c), a.ring());
}

Series mul(const Series& a, const Series& b) {
  require_same_shape(a, b, "mul");
  const std::size_t order = a.order();
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j <= order; ++j)
    if (!b[j].is_zero()) nz.push_back(j);
  std::vector<Scalar> c(order + 1, zero_in(a.ring()));
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j : nz) {
      if (i + j > order) break;
      c[i + j] += a[i] * b[j];
    }
  }
  return Series(std::move(c), a.ring());
}

Series scale(const Series& a, const Scalar& s) {
  Ring r = join(a.ring(), s.ring());
  std::vector<Scalar> c;
  c.reserve(a.order() + 1);
  for (const auto& x : a.coeffs()) c.push_back((x * s).promoted(r));
  return Series(std::move(c), r);
}

Series div(const Series& a, const Series& b) {
  require_same_shape(a, b, "div");
  const Scalar& b0 = b[0];
  if (b0.is_zero()) throw Error(Errc::NonUnitConstantTerm, "divisor has zero constant term");
  if (!b0.is_unit()) return div(a.promoted(Ring::QLrat), b.promoted(Ring::QLrat));
  const Scalar inv = b0.inverse();
  const std::size_t order = a.order();
  std::vector<Scalar> q(order + 1, zero_in(a.ring()));
  for (std::size_t n = 0; n <= order; ++n) {
    Scalar acc = a[n];
    for (std::size_t k = 1; k <= n; ++k)
      if (!b[k].is_zero() && !q[n - k].is_zero()) acc -= b[k] * q[n - k];
    q[n] = acc * inv;
  }
  return Series(std::move(q), a.ring());
}

Series derivative(const Series& a) {
  if (a.order() == 0) return Series(0, a.ring());
  std::vector<Scalar> c;
  c.reserve(a.order());
  for (std::size_t n = 1; n <= a.order(); ++n) c.push_back(a[n] * Scalar(static_cast<long>(n)));
  return Series(std::move(c), a.ring());
}

Series integral(const Series& a) {
  std::vector<Scalar> c;
  c.reserve(a.order() + 2);
  c.push_back(zero_in(a.ring()));
  for (std::size_t n = 0; n <= a.order(); ++n) c.push_back(a[n] / Scalar(static_cast<long>(n + 1)));
  return Series(std::move(c), a.ring());
}

Series shift_down(const Series& a, std::size_t s) {
  if (s > a.order()) throw Error(Errc::InsufficientOrder, "shift exceeds series order");
  for (std::size_t n = 0; n < s; ++n)
    if (!a[n].is_zero()) throw Error(Errc::InvalidArgument, "shift_down over a nonzero coefficient");
  std::vector<Scalar> c(a.coeffs().begin() + static_cast<std::ptrdiff_t>(s), a.coeffs().end());
  return Series(std::move(c), a.ring());
}

Series shift_up(const Series& a, std::size_t s) {
  std::vector<Scalar> c(a.order() + 1, zero_in(a.ring()));
  for (std::size_t n = 0; n + s <= a.order(); ++n) c[n + s] = a[n];
  return Series(std::move(c), a.ring());
}

Series compose(const Series& g, const Series& f) {
  if (g.order() != f.order()) throw Error(Errc::OrderMismatch, "compose: orders differ");
  if (!f[0].is_zero()) throw Error(Errc::BadConstantTerm, "compose: inner series has nonzero constant term");
  Series gg = g, ff = f;
  unify(gg, ff);
  const std::size_t order = gg.order();
  Series r = Series::constant(gg[order], order).promoted(gg.ring());
  for (std::size_t i = order; i-- > 0;) {
    r = mul(r, ff);
    std::vector<Scalar> c(r.coeffs());
    c[0] += gg[i];
    r = Series(std::move(c), gg.ring());
  }
  return r;
}

Series compose(const Series& g, const DeltaSeries& f) { return compose(g, f.series()); }

DeltaSeries invert_newton(const DeltaSeries& f) {
  const std::size_t order = f.order();
  const Ring ring = f.ring();
  const Series& fs = f.series();
  const Series fprime = derivative(fs);

  Series g(std::vector<Scalar>{zero_in(ring), f.linear().inverse()}, ring);

  std::size_t prec = 1;
  while (prec < order) {
    const std::size_t p2 = std::min(2 * prec, order);
    const std::size_t v = prec + 1;
    Series G = g.resized(p2);
    Series residual = compose(fs.truncated(p2), G) - Series::identity(p2, ring);
    Series d = compose(fprime.truncated(p2 - v), G.truncated(p2 - v));
    Series step = div(shift_down(residual, v), d);
    g = G - shift_up(step.resized(p2), v);
    prec = p2;
  }
  return DeltaSeries(g);
}

namespace {

// (t/f(t))^n truncated to order m.
Series lagrange_kernel(const DeltaSeries& f, std::size_t n, std::size_t m) {
  Series h = shift_down(f.series().truncated(m + 1), 1);
  Series one = Series::constant(Scalar(1), m).promoted(h.ring());
  return pow_int(div(one, h), static_cast<long>(n));
}

}  // namespace

Scalar lagrange_coeff_inverse(const DeltaSeries& f, std::size_t n) {
  if (n < 1 || n > f.order())
    throw Error(Errc::IndexOutOfOrder, "lagrange_coeff_inverse: n = " + std::to_string(n));
  return lagrange_kernel(f, n, n - 1)[n - 1] / Scalar(static_cast<long>(n));
}

Scalar lagrange_coeff_power(const DeltaSeries& f, std::size_t k, std::size_t n) {
  if (k < 1 || k > n || n > f.order())
    throw Error(Errc::IndexOutOfOrder, "lagrange_coeff_power: (k, n) = (" + std::to_string(k) + ", " +
                                           std::to_string(n) + ")");
  return lagrange_kernel(f, n, n - 1)[n - k] * Scalar(Rat(static_cast<long>(k), static_cast<long>(n)));
}

Scalar lagrange_coeff_general(const Series& g, const DeltaSeries& f, std::size_t n) {
  if (n < 1 || n > f.order() || n > g.order())
    throw Error(Errc::IndexOutOfOrder, "lagrange_coeff_general: n = " + std::to_string(n));
  Series kernel = lagrange_kernel(f, n, n - 1);
  Series gp = derivative(g.truncated(n));
  unify(gp, kernel);
  return mul(gp, kernel)[n - 1] / Scalar(static_cast<long>(n));
}

Series exp_series(const Series& f) {
  if (!f[0].is_zero()) throw Error(Errc::BadConstantTerm, "exp needs a zero constant term");
  const std::size_t order = f.order();
  std::vector<Scalar> h(order + 1, zero_in(f.ring()));
  h[0] = Scalar(1).promoted(f.ring());
  for (std::size_t n = 1; n <= order; ++n) {
    Scalar acc = zero_in(f.ring());
    for (std::size_t k = 1; k <= n; ++k)
      if (!f[k].is_zero()) acc += Scalar(static_cast<long>(k)) * f[k] * h[n - k];
    h[n] = acc / Scalar(static_cast<long>(n));
  }
  return Series(std::move(h), f.ring());
}

Series log_series(const Series& g) {
  if (!g[0].is_one()) throw Error(Errc::BadConstantTerm, "log needs constant term 1");
  const std::size_t order = g.order();
  std::vector<Scalar> l(order + 1, zero_in(g.ring()));
  for (std::size_t n = 1; n <= order; ++n) {
    Scalar acc = zero_in(g.ring());
    for (std::size_t k = 1; k < n; ++k)
      if (!g[n - k].is_zero()) acc += Scalar(static_cast<long>(k)) * l[k] * g[n - k];
    l[n] = g[n] - acc / Scalar(static_cast<long>(n));
  }
  return Series(std::move(l), g.ring());
}

Series pow_int(const Series& f, long k) {
  if (k < 0) {
    Series one = Series::constant(Scalar(1), f.order()).promoted(f.ring());
    Series inv = div(one, f);
    return pow_int(inv, -k);
  }
  Series result = Series::constant(Scalar(1), f.order()).promoted(f.ring());
  Series base = f;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Series pow_ratio(const Series& f, const Rat& r) {
  if (!f[0].is_one()) throw Error(Errc::NonUnitConstantTerm, "pow_ratio needs constant term 1");
  const std::size_t order = f.order();
  const Rat rp1 = r + Rat(1);
  std::vector<Scalar> h(order + 1, zero_in(f.ring()));
  h[0] = Scalar(1).promoted(f.ring());
  for (std::size_t n = 1; n <= order; ++n) {
    Scalar acc = zero_in(f.ring());
    for (std::size_t k = 1; k <= n; ++k) {
      if (f[k].is_zero()) continue;
      Rat w = rp1 * Rat(static_cast<long>(k)) - Rat(static_cast<long>(n));
      if (!w.is_zero()) acc += Scalar(w) * f[k] * h[n - k];
    }
    h[n] = acc / Scalar(static_cast<long>(n));
  }
  return Series(std::move(h), f.ring());
}

Series eval_lambda(const Series& s, const Rat& value) {
  std::vector<Scalar> c;
  c.reserve(s.order() + 1);
  for (const auto& x : s.coeffs()) c.push_back(eval_lambda(x, value));
  return Series(std::move(c), Ring::Q);
}

Series operator+(const Series& a, const Series& b) { return add(a, b); }
Series operator-(const Series& a, const Series& b) { return sub(a, b); }
Series operator*(const Series& a, const Series& b) { return mul(a, b); }
Series operator/(const Series& a, const Series& b) { return div(a, b); }
Series operator-(const Series& a) { return neg(a); }

}  // namespace dseries
