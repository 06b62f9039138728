#include "dseries/presets.hpp"

#include <json.hpp>

namespace dseries {

namespace {

const Scalar& lam() {
  static const Scalar l = Scalar::lambda();
  return l;
}

Series t_at(std::size_t n) { return Series::identity(n); }
Series const_at(const Scalar& c, std::size_t n) { return Series::constant(c, n); }

Series scaled(const Series& s, const Rat& r) { return scale(s, Scalar(r)); }

// t/2 + sqrt(1 + t^2/4) with t replaced by s.
Series half_plus_root(const Series& s) {
  Series sq = s * s;
  Series root = pow_ratio(const_at(1, s.order()).promoted(s.ring()) + scaled(sq, Rat(1, 4)), Rat(1, 2));
  return scaled(s, Rat(1, 2)) + root;
}

Series composed(Series g, Series f) {
  unify(g, f);
  return compose(g, f);
}

Triangle gf_triangle(TriangleKind kind, const Series& base, std::size_t max_n) {
  Series b = base.resized(max_n);
  Triangle tri(kind, max_n, b.ring());
  tri.set(0, 0, Scalar(1));
  Series col = Series::constant(Scalar(1).promoted(b.ring()), max_n);
  for (std::size_t k = 1; k <= max_n; ++k) {
    col = scale(col * b, Scalar(Rat(1, static_cast<long>(k))));
    for (std::size_t n = k; n <= max_n; ++n) tri.set(n, k, col.egf(n));
  }
  return tri;
}

// C(n,k) = sum_l A(n,l) B(l,k) w(l,k).
Triangle product(const Triangle& a, const Triangle& b, TriangleKind kind,
                 const std::function<Scalar(std::size_t, std::size_t)>& w = nullptr) {
  std::size_t N = std::min(a.max_n(), b.max_n());
  Triangle c(kind, N, join(a.ring(), b.ring()));
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      Scalar sum;
      for (std::size_t l = k; l <= n; ++l) {
        Scalar term = a.at(n, l) * b.at(l, k);
        if (w) term *= w(l, k);
        sum += term;
      }
      c.set(n, k, sum);
    }
  return c;
}

Triangle entrywise(const Triangle& a, TriangleKind kind, const std::function<Scalar(std::size_t, std::size_t)>& w) {
  Triangle c(kind, a.max_n(), a.ring());
  for (std::size_t n = 0; n <= a.max_n(); ++n)
    for (std::size_t k = 0; k <= n; ++k) c.set(n, k, a.at(n, k) * w(n, k));
  return c;
}

Scalar parity(std::size_t e) { return Scalar(e % 2 == 0 ? 1 : -1); }

Series symbolic_f(std::string_view id, std::size_t order) {
  Series t = t_at(order);
  Series one = const_at(1, order);
  if (id == "identity") return t;
  if (id == "deg_falling") return deg_expm1(order, lam());
  if (id == "rising") return one - exp_series(-t);
  if (id == "deg_rising") return deg_expm1(order, -lam());
  if (id == "central") return exp_series(scaled(t, Rat(1, 2))) - exp_series(scaled(t, Rat(-1, 2)));
  if (id == "central_bell") return scale(log_series(half_plus_root(t)), Scalar(2));
  if (id == "deg_central_bell") {
    Series u = half_plus_root(t);
    return deg_log1p(u * u - one, lam());
  }
  if (id == "lah_bell") return div(t, one + t);
  if (id == "deg_lah_bell") {
    Series g = deg_expm1(order, lam());
    return div(g, one.promoted(g.ring()) + g);
  }
  if (id == "bell") return Series::log1p_t(order);
  if (id == "partial_deg_bell") return deg_log1p(t, lam());
  if (id == "full_deg_bell") return deg_log1p(deg_expm1(order, lam()), lam());
  if (id == "mittag_leffler") {
    Series e = Series::exp_t(order);
    return div(e - one, e + one);
  }
  if (id == "laguerre_m1") return div(t, t - one);
  throw Error(Errc::UnknownPreset, "unknown preset '" + std::string(id) + "'");
}

void require_mode(const PresetInfo& info, const LambdaMode& mode) {
  if (info.degenerate && mode.kind == LambdaMode::Kind::Absent)
    throw Error(Errc::LambdaModeRequired, "preset '" + std::string(info.id) + "' needs --lambda");
}

// Monomial coefficients (in y) of (y)_{n,l}.
std::vector<Scalar> falling_lambda_in_y(std::size_t n) {
  std::vector<Scalar> c{Scalar(1)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> next(c.size() + 1, Scalar(0));
    Scalar shift = Scalar(static_cast<long>(i)) * lam();
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= c[j] * shift;
    }
    c = std::move(next);
  }
  return c;
}

Scalar eval_y(const std::vector<Scalar>& c, const Rat& y) {
  Scalar acc;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * Scalar(y) + c[i];
  return acc;
}

Scalar moment_mode(const Scalar& s, const LambdaMode& mode) {
  if (mode.kind == LambdaMode::Kind::Absent) return Scalar(eval_lambda(s, 0));
  return apply_mode(s, mode);
}

}  // namespace

std::string LambdaMode::str() const {
  switch (kind) {
    case Kind::Absent: return "absent";
    case Kind::Symbolic: return "symbolic";
    case Kind::Value: return value.str();
  }
  return "absent";
}

Scalar apply_mode(const Scalar& s, const LambdaMode& mode) {
  switch (mode.kind) {
    case LambdaMode::Kind::Symbolic: return s;
    case LambdaMode::Kind::Value: return Scalar(eval_lambda(s, mode.value));
    case LambdaMode::Kind::Absent: {
      Scalar d = s.demoted();
      if (d.ring() != Ring::Q) throw Error(Errc::LambdaModeRequired, "value depends on lambda: " + s.str());
      return d;
    }
  }
  return s;
}

Series apply_mode(const Series& s, const LambdaMode& mode) {
  switch (mode.kind) {
    case LambdaMode::Kind::Symbolic: return s;
    case LambdaMode::Kind::Value: return eval_lambda(s, mode.value);
    case LambdaMode::Kind::Absent: {
      Series d = s.demoted();
      if (d.ring() != Ring::Q) throw Error(Errc::LambdaModeRequired, "series depends on lambda");
      return d;
    }
  }
  return s;
}

Triangle apply_mode(const Triangle& t, const LambdaMode& mode) {
  switch (mode.kind) {
    case LambdaMode::Kind::Symbolic: return t;
    case LambdaMode::Kind::Value: return t.specialized(mode.value);
    case LambdaMode::Kind::Absent: {
      Triangle out(t.kind(), t.max_n(), Ring::Q, t.fingerprint());
      for (std::size_t n = 0; n <= t.max_n(); ++n)
        for (std::size_t k = 0; k <= n; ++k) out.set(n, k, apply_mode(t.at(n, k), mode));
      return out;
    }
  }
  return t;
}

const std::vector<PresetInfo>& preset_registry() {
  static const std::vector<PresetInfo> reg{
      {"probabilistic", 'a', "inverse of log E[e_lambda^Y(t)], Y ~ U[0,1]", false, "", false, false, false},
      {"identity", 'b', "t", false, "", true, true, true},
      {"deg_falling", 'c', "(exp(lambda*t)-1)/lambda", true, "identity", true, true, true},
      {"rising", 'd', "1-exp(-t)", false, "", true, true, true},
      {"deg_rising", 'e', "(1-exp(-lambda*t))/lambda", true, "identity", true, true, true},
      {"central", 'f', "exp(t/2)-exp(-t/2)", false, "", true, true, true},
      {"central_bell", 'g', "2*log((t+sqrt(t^2+4))/2)", false, "", true, true, true},
      {"deg_central_bell", 'h', "(exp(2*lambda*log((t+sqrt(t^2+4))/2))-1)/lambda", true, "central_bell", true,
       true, true},
      {"lah_bell", 'i', "t/(1+t)", false, "", true, true, true},
      {"deg_lah_bell", 'j', "(exp(lambda*t)-1)/(lambda+exp(lambda*t)-1)", true, "lah_bell", true, true, true},
      {"bell", 'k', "log(1+t)", false, "", true, true, true},
      {"partial_deg_bell", 'l', "(exp(lambda*log(1+t))-1)/lambda", true, "bell", true, true, true},
      {"full_deg_bell", 'm', "(exp(lambda*log(1+(exp(lambda*t)-1)/lambda))-1)/lambda", true, "bell", true, true,
       true},
      {"mittag_leffler", 'n', "(exp(t)-1)/(exp(t)+1)", false, "", true, true, true},
      {"laguerre_m1", 'o', "t/(t-1)", false, "", true, true, true},
  };
  return reg;
}

const PresetInfo& preset_info(std::string_view id) {
  for (const auto& p : preset_registry())
    if (p.id == id) return p;
  throw Error(Errc::UnknownPreset, "unknown preset '" + std::string(id) + "'");
}

std::string preset_registry_json() {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& p : preset_registry()) {
    out.push_back({{"id", p.id},
                   {"example", std::string(1, p.letter)},
                   {"formula", p.formula},
                   {"degenerate", p.degenerate},
                   {"classical_partner", p.partner.empty() ? nlohmann::ordered_json(nullptr)
                                                           : nlohmann::ordered_json(p.partner)},
                   {"oracles", {{"s2", p.s2_oracle}, {"s1", p.s1_oracle}, {"log", p.log_oracle}}}});
  }
  return out.dump(2);
}

Preset make_preset(std::string_view id, std::size_t order, const LambdaMode& mode) {
  const PresetInfo& info = preset_info(id);
  if (order < 1) throw Error(Errc::InvalidArgument, "preset order must be at least 1");
  require_mode(info, mode);
  if (id == "probabilistic") return Preset{std::string(id), mode, moment_delta(uniform_moments(mode), order)};
  Series f = symbolic_f(id, order);
  if (mode.kind == LambdaMode::Kind::Absent) f = f.demoted();
  else f = apply_mode(f, mode);
  return Preset{std::string(id), mode, DeltaSeries(f)};
}

Series deg_expm1(std::size_t order, const Scalar& nu) {
  std::vector<Scalar> c{Scalar(0)};
  Scalar pw(1);
  for (std::size_t m = 1; m <= order; ++m) {
    c.push_back(pw / Scalar(Rat::factorial(m)));
    pw *= nu;
  }
  return Series(std::move(c)).promoted(nu.ring());
}

Series deg_log1p(const Series& s, const Scalar& nu) {
  std::vector<Scalar> c{Scalar(0)};
  Scalar prod(1);
  for (std::size_t m = 1; m <= s.order(); ++m) {
    c.push_back(prod / Scalar(Rat::factorial(m)));
    prod *= nu - Scalar(static_cast<long>(m));
  }
  return composed(Series(std::move(c)).promoted(nu.ring()), s);
}

Series deg_exp(std::size_t order, const Scalar& nu, const Rat& a) {
  std::vector<Scalar> c{Scalar(0)};
  Scalar pw(1);
  for (std::size_t m = 1; m <= order; ++m) {
    Scalar term = pw / Scalar(static_cast<long>(m));
    c.push_back(m % 2 == 1 ? term : -term);
    pw *= nu;
  }
  return exp_series(scale(Series(std::move(c)).promoted(nu.ring()), Scalar(a)));
}

Triangle lah_triangle(std::size_t max_n) {
  Triangle t(TriangleKind::Lah, max_n, Ring::Q);
  t.set(0, 0, Scalar(1));
  for (long n = 1; n <= static_cast<long>(max_n); ++n)
    for (long k = 1; k <= n; ++k)
      t.set(n, k, Scalar(Rat::factorial(n) / Rat::factorial(k) * binomial(n - 1, k - 1)));
  return t;
}

Triangle degenerate_s2(std::size_t max_n, const Scalar& nu) {
  Triangle t(TriangleKind::Other, max_n, nu.ring());
  t.set(0, 0, Scalar(1));
  for (std::size_t n = 0; n < max_n; ++n)
    for (std::size_t k = 1; k <= n + 1; ++k)
      t.set(n + 1, k, t.at(n, k - 1) + (Scalar(static_cast<long>(k)) - Scalar(static_cast<long>(n)) * nu) * t.at(n, k));
  return t;
}

Triangle degenerate_s1(std::size_t max_n, const Scalar& nu) {
  Triangle t(TriangleKind::Other, max_n, nu.ring());
  t.set(0, 0, Scalar(1));
  for (std::size_t n = 0; n < max_n; ++n)
    for (std::size_t k = 1; k <= n + 1; ++k)
      t.set(n + 1, k, t.at(n, k - 1) + (Scalar(static_cast<long>(k)) * nu - Scalar(static_cast<long>(n))) * t.at(n, k));
  return t;
}

Triangle degenerate_lah(std::size_t max_n, const Scalar& mu) {
  std::size_t order = std::max<std::size_t>(max_n, 1);
  Series e = deg_exp(order, -mu);
  return gf_triangle(TriangleKind::Lah, e - Series::constant(Scalar(1).promoted(e.ring()), order), max_n);
}

Triangle central_t1(std::size_t max_n) {
  std::size_t order = std::max<std::size_t>(max_n, 1);
  return gf_triangle(TriangleKind::T1, symbolic_f("central_bell", order), max_n);
}

Triangle central_t2(std::size_t max_n) {
  std::size_t order = std::max<std::size_t>(max_n, 1);
  return gf_triangle(TriangleKind::T2, symbolic_f("central", order), max_n);
}

Triangle central_t1_lambda(std::size_t max_n) {
  std::size_t order = std::max<std::size_t>(max_n, 1);
  return gf_triangle(TriangleKind::T1, symbolic_f("deg_central_bell", order), max_n);
}

Triangle central_t2_lambda(std::size_t max_n) {
  std::size_t order = std::max<std::size_t>(max_n, 1);
  Series base = deg_exp(order, lam(), Rat(1, 2)) - deg_exp(order, lam(), Rat(-1, 2));
  return gf_triangle(TriangleKind::T2, base, max_n);
}

Scalar degenerate_bernoulli_s1(std::size_t n, std::size_t k) {
  if (k > n) return Scalar(0);
  if (k == 0) return Scalar(n == 0 ? 1 : 0);
  std::size_t m = n - k;
  Series e = deg_exp(m + 1, lam());
  Series q = shift_down(e - Series::constant(Scalar(1).promoted(e.ring()), m + 1), 1);
  Series kernel = div(Series::constant(Scalar(1).promoted(q.ring()), m), q);
  Scalar beta = pow_int(kernel, static_cast<long>(n)).egf(m);
  return Scalar(binomial(static_cast<long>(n) - 1, static_cast<long>(k) - 1)) * beta;
}

Triangle reciprocal_lah_form(std::size_t max_n) {
  Triangle l = degenerate_lah(max_n, lam().inverse());
  Triangle out(TriangleKind::Other, max_n, Ring::QL);
  for (std::size_t n = 0; n <= max_n; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      out.set(n, k, ((-lam()).pow(static_cast<long>(n - k)) * l.at(n, k)).demoted());
  return out;
}

Triangle oracle_s2_triangle(std::string_view id, std::size_t N, const LambdaMode& mode) {
  const PresetInfo& info = preset_info(id);
  if (!info.s2_oracle) throw Error(Errc::NoOracle, "no closed form for S2 of '" + std::string(id) + "'");
  require_mode(info, mode);
  const auto S = TriangleKind::S2assoc;
  Triangle t = [&]() -> Triangle {
    if (id == "identity") return classical_s2(N);
    if (id == "deg_falling") return degenerate_s2(N, lam());
    if (id == "rising") return lah_triangle(N);
    if (id == "deg_rising") return degenerate_lah(N, lam());
    if (id == "central") return product(central_t1(N), classical_s2(N), S);
    if (id == "central_bell") return product(central_t2(N), classical_s2(N), S);
    if (id == "deg_central_bell") return product(central_t2_lambda(N), classical_s2(N), S);
    if (id == "lah_bell") return product(lah_triangle(N), classical_s2(N), S);
    if (id == "deg_lah_bell") return product(lah_triangle(N), degenerate_lah(N, -lam()), S);
    if (id == "bell") return product(classical_s2(N), classical_s2(N), S);
    if (id == "partial_deg_bell") return product(degenerate_s2(N, lam()), classical_s2(N), S);
    if (id == "full_deg_bell") return product(degenerate_s2(N, lam()), degenerate_lah(N, -lam()), S);
    if (id == "mittag_leffler")
      return entrywise(lah_triangle(N), S, [](std::size_t, std::size_t k) { return Scalar(Rat(2).pow(static_cast<long>(k))); });
    // laguerre_m1
    return product(lah_triangle(N), classical_s2(N), S, [](std::size_t l, std::size_t) { return parity(l); });
  }();
  return apply_mode(t, mode);
}

Triangle oracle_s1_triangle(std::string_view id, std::size_t N, const LambdaMode& mode) {
  const PresetInfo& info = preset_info(id);
  if (!info.s1_oracle) throw Error(Errc::NoOracle, "no closed form for S1 of '" + std::string(id) + "'");
  require_mode(info, mode);
  const auto S = TriangleKind::S1assoc;
  auto alt = [](std::size_t l, std::size_t k) { return parity(l - k); };
  Triangle t = [&]() -> Triangle {
    if (id == "identity") return classical_s1(N);
    if (id == "deg_falling") return degenerate_s1(N, lam());
    if (id == "rising") return entrywise(lah_triangle(N), S, alt);
    if (id == "deg_rising") return degenerate_s1(N, -lam());
    if (id == "central") return product(classical_s1(N), central_t2(N), S);
    if (id == "central_bell") return product(classical_s1(N), central_t1(N), S);
    if (id == "deg_central_bell") return product(classical_s1(N), central_t1_lambda(N), S);
    if (id == "lah_bell") return product(classical_s1(N), lah_triangle(N), S, alt);
    if (id == "deg_lah_bell") return product(degenerate_s1(N, lam()), lah_triangle(N), S, alt);
    if (id == "bell") return product(classical_s1(N), classical_s1(N), S);
    if (id == "partial_deg_bell") return product(classical_s1(N), degenerate_s1(N, lam()), S);
    if (id == "full_deg_bell") return product(degenerate_s1(N, lam()), degenerate_s1(N, lam()), S);
    if (id == "mittag_leffler")
      return entrywise(lah_triangle(N), S, [](std::size_t n, std::size_t k) {
        return parity(n - k) / Scalar(Rat(2).pow(static_cast<long>(n)));
      });
    // laguerre_m1
    Triangle p = product(classical_s1(N), lah_triangle(N), S);
    return entrywise(p, S, [](std::size_t, std::size_t k) { return parity(k); });
  }();
  return apply_mode(t, mode);
}

Scalar oracle_s2(std::string_view id, std::size_t n, std::size_t k, const LambdaMode& mode) {
  if (k > n) return Scalar(0);
  return oracle_s2_triangle(id, n, mode).at(n, k);
}

Scalar oracle_s1(std::string_view id, std::size_t n, std::size_t k, const LambdaMode& mode) {
  if (k > n) return Scalar(0);
  return oracle_s1_triangle(id, n, mode).at(n, k);
}

Series oracle_log(std::string_view id, std::size_t order, const LambdaMode& mode) {
  const PresetInfo& info = preset_info(id);
  if (!info.log_oracle) throw Error(Errc::NoOracle, "no closed-form logarithm for '" + std::string(id) + "'");
  require_mode(info, mode);
  Series t = t_at(order);
  Series one = const_at(1, order);
  Series L = Series::log1p_t(order);
  Series out = [&]() -> Series {
    if (id == "identity") return L;
    if (id == "deg_falling") return deg_log1p(t, lam());
    if (id == "rising") return div(t, one + t);
    if (id == "deg_rising") return deg_log1p(t, -lam());
    if (id == "central") return pow_ratio(one + t, Rat(1, 2)) - pow_ratio(one + t, Rat(-1, 2));
    if (id == "central_bell") return scale(log_series(half_plus_root(L)), Scalar(2));
    if (id == "deg_central_bell") {
      Series u = half_plus_root(L);
      return deg_log1p(u * u - one, lam());
    }
    if (id == "lah_bell") return div(L, one + L);
    if (id == "deg_lah_bell") {
      Series d = deg_log1p(t, lam());
      return div(d, one.promoted(d.ring()) + d);
    }
    if (id == "bell") return log_series(one + L);
    if (id == "partial_deg_bell") return deg_log1p(L, lam());
    if (id == "full_deg_bell") return deg_log1p(deg_log1p(t, lam()), lam());
    if (id == "mittag_leffler") return div(t, const_at(2, order) + t);
    // laguerre_m1
    return -div(L, one - L);
  }();
  return apply_mode(out, mode);
}

MomentSeq uniform_moments(const LambdaMode& mode) {
  return MomentSeq{"uniform", [mode](std::size_t n) {
                     std::vector<Scalar> c = falling_lambda_in_y(n);
                     Scalar sum;
                     for (std::size_t i = 0; i < c.size(); ++i) sum += c[i] / Scalar(static_cast<long>(i + 1));
                     return moment_mode(sum, mode);
                   }};
}

MomentSeq deterministic_moments(const Rat& c, const LambdaMode& mode) {
  return MomentSeq{"deterministic", [c, mode](std::size_t n) {
                     return moment_mode(eval_y(falling_lambda_in_y(n), c), mode);
                   }};
}

MomentSeq two_point_moments(const Rat& a, const Rat& b, const Rat& p, const LambdaMode& mode) {
  return MomentSeq{"two_point", [a, b, p, mode](std::size_t n) {
                     std::vector<Scalar> c = falling_lambda_in_y(n);
                     Scalar m = Scalar(p) * eval_y(c, a) + Scalar(Rat(1) - p) * eval_y(c, b);
                     return moment_mode(m, mode);
                   }};
}

DeltaSeries moment_delta(const MomentSeq& m, std::size_t order) {
  if (m.moment(1).is_zero()) throw Error(Errc::ZeroFirstMoment, "first moment of " + m.name + " vanishes");
  std::vector<Scalar> c{Scalar(1)};
  for (std::size_t n = 1; n <= order; ++n) c.push_back(m.moment(n) / Scalar(Rat::factorial(n)));
  Series fbar = log_series(Series(std::move(c)));
  return invert_newton(DeltaSeries(fbar));
}

Series a2_series(std::size_t order) {
  Series e = Series::exp_t(order + 2);
  Series tail = shift_down(e - Series::constant(1, order + 2) - Series::identity(order + 2), 2);
  return div(Series::constant(Scalar(Rat(1, 2)), order), tail);
}

Scalar uniform_s1_formula(std::size_t n) {
  if (n == 0) return Scalar(0);
  Series a2 = a2_series(n);
  std::vector<Rat> A;
  for (std::size_t j = 0; j <= n; ++j) A.push_back(a2.egf(j).rat());

  // sum over (j_1..j_n), j_i >= 0, sum m, of m!/prod j_i! * prod A_{j_i}
  std::function<Rat(std::size_t, std::size_t)> comps = [&](std::size_t slots, std::size_t rest) -> Rat {
    if (slots == 0) return rest == 0 ? Rat(1) : Rat(0);
    Rat total;
    for (std::size_t j = 0; j <= rest; ++j) total += A[j] / Rat::factorial(j) * comps(slots - 1, rest - j);
    return total;
  };
  Scalar sum;
  for (std::size_t m = 0; m < n; ++m) {
    Rat inner = Rat::factorial(m) * comps(n, m) * binomial(static_cast<long>(n) - 1, static_cast<long>(m));
    sum += Scalar(inner) * lam().pow(static_cast<long>(n - m - 1));
  }
  return (Scalar(Rat(2).pow(static_cast<long>(n))) * sum).demoted();
}

}  // namespace dseries
