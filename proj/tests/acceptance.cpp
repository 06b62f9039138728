// Acceptance criteria 1-12. One line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dseries/exprparse.hpp"
#include "dseries/presets.hpp"
#include "dseries/stirling.hpp"
#include "dseries/verify.hpp"

using namespace dseries;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool same(const Scalar& a, const Scalar& b) { return a.demoted() == b.demoted(); }

std::string at(std::size_t n, std::size_t k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

LambdaMode mode_of(std::string_view id) {
  return preset_info(id).degenerate ? LambdaMode::symbolic() : LambdaMode::absent();
}

Subject moment_subject(const std::string& label, std::function<MomentSeq()> moments) {
  Subject s;
  s.label = label;
  s.mode = LambdaMode::symbolic();
  s.build = [moments](std::size_t order, const LambdaMode&) { return moment_delta(moments(), order); };
  return s;
}

std::vector<Subject> preset_subjects() {
  std::vector<Subject> out;
  for (const auto& p : preset_registry())
    if (p.id != "probabilistic") out.push_back(preset_subject(std::string(p.id), LambdaMode::absent()));
  out.push_back(moment_subject("uniform Y", [] { return uniform_moments(LambdaMode::symbolic()); }));
  out.push_back(moment_subject("Y = 1", [] { return deterministic_moments(1, LambdaMode::symbolic()); }));
  return out;
}

std::vector<Subject> corpus() {
  std::vector<Subject> out = preset_subjects();
  for (const char* src : {"t+t^2", "2*t-t^3", "t*exp(t)", "lambda*t+t^2"})
    out.push_back(expr_subject(src, LambdaMode::absent()));
  return out;
}

Outcome suite_outcome(Suite suite, const std::vector<Subject>& subjects, std::size_t n) {
  Outcome o;
  std::size_t checks = 0;
  for (const SuiteResult& r : run_suites({suite}, subjects, n)) {
    checks += r.report.checked;
    if (!r.applicable) continue;
    if (!r.error.empty()) o.fail(r.subject + ": " + r.error);
    else if (!r.report.ok) o.fail(r.subject + ": " + r.report.describe());
  }
  if (o.ok) o.detail = std::to_string(subjects.size()) + " series, " + std::to_string(checks) + " checks";
  return o;
}

// Classical Bernoulli numbers from sum_{j<=m} C(m+1,j) B_j = 0.
std::vector<Rat> bernoulli_numbers(std::size_t max_m) {
  std::vector<Rat> b{1};
  for (std::size_t m = 1; m <= max_m; ++m) {
    Rat s;
    for (std::size_t j = 0; j < m; ++j) s += binomial(static_cast<long>(m + 1), static_cast<long>(j)) * b[j];
    b.push_back(-s / Rat(static_cast<long>(m + 1)));
  }
  return b;
}

// Ordinary coefficients of (t/(e^t-1))^a up to t^max_m.
std::vector<Rat> bernoulli_power(const std::vector<Rat>& b, std::size_t a, std::size_t max_m) {
  std::vector<Rat> base(max_m + 1), acc(max_m + 1);
  for (std::size_t j = 0; j <= max_m; ++j) base[j] = b[j] / Rat::factorial(j);
  acc[0] = 1;
  for (std::size_t p = 0; p < a; ++p) {
    std::vector<Rat> next(max_m + 1);
    for (std::size_t i = 0; i <= max_m; ++i)
      for (std::size_t j = 0; i + j <= max_m; ++j) next[i + j] += acc[i] * base[j];
    acc = next;
  }
  return acc;
}

Outcome criterion1() {
  const std::size_t N = 12;
  Outcome o;
  Triangle s1 = s1_assoc(DeltaSeries(Series::identity(N)), N);
  Triangle classical = classical_s1(N);
  std::vector<Rat> b = bernoulli_numbers(N);
  for (std::size_t n = 1; n <= N; ++n) {
    Rat col1 = Rat::factorial(n - 1) * Rat(n % 2 == 1 ? 1 : -1);
    if (!same(s1.at(n, 1), Scalar(col1))) o.fail("S1" + at(n, 1) + " = " + s1.at(n, 1).str());
    std::vector<Rat> bn = bernoulli_power(b, n, n);
    for (std::size_t k = 1; k <= n; ++k) {
      Rat rhs = binomial(static_cast<long>(n - 1), static_cast<long>(k - 1)) * Rat::factorial(n - k) * bn[n - k];
      if (!same(s1.at(n, k), Scalar(rhs))) o.fail("S1" + at(n, k) + ": " + s1.at(n, k).str() + " != " + rhs.str());
      if (!same(s1.at(n, k), classical.at(n, k))) o.fail("S1" + at(n, k) + " differs from the recurrence");
    }
  }
  if (o.ok) o.detail = "n <= 12";
  return o;
}

Outcome criterion7() {
  const std::size_t N = 8;
  Outcome o;
  std::size_t families = 0;
  for (const auto& p : preset_registry()) {
    if (!p.s2_oracle) continue;
    ++families;
    std::string id(p.id);
    LambdaMode mode = mode_of(id);
    DeltaSeries f = make_preset(id, N, mode).f;
    Triangle s2 = s2_assoc(f, N), s1 = s1_assoc(f, N);
    Triangle o2 = oracle_s2_triangle(id, N, mode), o1 = oracle_s1_triangle(id, N, mode);
    for (std::size_t n = 0; n <= N; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        if (!same(s2.at(n, k), o2.at(n, k))) o.fail(id + " S2" + at(n, k));
        if (!same(s1.at(n, k), o1.at(n, k))) o.fail(id + " S1" + at(n, k));
      }
    Series lg = assoc_log(f), ol = oracle_log(id, N, mode);
    for (std::size_t n = 0; n <= N; ++n)
      if (!same(lg[n], ol[n])) o.fail(id + " log coefficient " + std::to_string(n));
  }
  // Central factorial numbers: T1 and T2 are inverse, and S2 of the central
  // family is T1 composed with S2.
  Triangle t1 = central_t1(N), t2 = central_t2(N);
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      Scalar s;
      for (std::size_t l = k; l <= n; ++l) s += t1.at(n, l) * t2.at(l, k);
      if (!same(s, Scalar(n == k ? 1 : 0))) o.fail("T1*T2 not the identity at " + at(n, k));
    }
  // t/(t-1) is its own inverse.
  DeltaSeries lag = make_preset("laguerre_m1", 12, LambdaMode::absent()).f;
  if (!(invert_newton(lag).series() == lag.series())) o.fail("t/(t-1) is not self-inverse");
  if (o.ok) o.detail = std::to_string(families) + " families, n <= 8";
  return o;
}

Outcome criterion8() {
  const std::size_t N = 8;
  Outcome o;
  std::size_t families = 0;
  for (const auto& p : preset_registry()) {
    if (!p.degenerate) continue;
    ++families;
    std::string id(p.id);
    DeltaSeries f = make_preset(id, N, LambdaMode::symbolic()).f;
    DeltaSeries base = make_preset(p.partner, N, LambdaMode::absent()).f;
    Triangle s2 = s2_assoc(f, N).specialized(0), s1 = s1_assoc(f, N).specialized(0);
    Triangle b2 = s2_assoc(base, N), b1 = s1_assoc(base, N);
    for (std::size_t n = 0; n <= N; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        if (!same(s2.at(n, k), b2.at(n, k))) o.fail(id + " S2" + at(n, k) + " at l=0");
        if (!same(s1.at(n, k), b1.at(n, k))) o.fail(id + " S1" + at(n, k) + " at l=0");
      }
  }
  if (o.ok) o.detail = std::to_string(families) + " degenerate families, n <= 8";
  return o;
}

Outcome criterion9() {
  Outcome o;
  DeltaSeries f = moment_delta(uniform_moments(LambdaMode::symbolic()), 5);
  Triangle s1 = s1_assoc(f, 5);
  for (std::size_t n = 1; n <= 5; ++n) {
    Scalar want = uniform_s1_formula(n);
    if (!same(s1.at(n, 1), want)) o.fail("S1" + at(n, 1) + ": " + s1.at(n, 1).str() + " != " + want.str());
  }
  if (o.ok) o.detail = "n <= 5, symbolic lambda";
  return o;
}

Outcome criterion10() {
  Outcome o;
  CheckReport r = binomial_identities_check(12);
  if (!r.ok) o.fail(r.describe());
  else o.detail = std::to_string(r.checked) + " checks";
  return o;
}

Outcome criterion11(const std::vector<Subject>& subjects) {
  const std::size_t N = 12;
  Outcome o;
  std::size_t checks = 0;
  for (const Subject& s : subjects) {
    DeltaSeries f = s.build(N, s.mode);
    Series inv = invert_newton(f).series();
    Series g = Series::exp_t(N).promoted(inv.ring());
    Series gc = compose(g, inv);
    for (std::size_t n = 1; n <= N; ++n) {
      checks += n + 2;
      if (!same(lagrange_coeff_inverse(f, n), inv[n])) o.fail(s.label + " (A) at n=" + std::to_string(n));
      for (std::size_t k = 1; k <= n; ++k)
        if (!same(lagrange_coeff_power(f, k, n), pow_int(inv, static_cast<long>(k))[n]))
          o.fail(s.label + " (B) at n=" + std::to_string(n) + ", k=" + std::to_string(k));
      if (!same(lagrange_coeff_general(g, f, n), gc[n])) o.fail(s.label + " (C) at n=" + std::to_string(n));
    }
  }
  if (o.ok) o.detail = std::to_string(subjects.size()) + " series, " + std::to_string(checks) + " checks";
  return o;
}

Outcome criterion12() {
  Outcome o;
  auto t0 = Clock::now();
  DeltaSeries id(Series::identity(64));
  Triangle s2 = s2_assoc(id, 64), s1 = s1_assoc(id, 64);
  double classical = seconds_since(t0);
  if (!(s2.rows() == classical_s2(64).rows()) || !(s1.rows() == classical_s1(64).rows()))
    o.fail("f=t triangles at n=64 are wrong");
  if (classical >= 10) o.fail("f=t at n=64 took " + std::to_string(classical) + " s");

  t0 = Clock::now();
  DeltaSeries df(make_preset("deg_falling", 24, LambdaMode::symbolic()).f.series().promoted(Ring::QLrat));
  Triangle d2 = s2_assoc(df, 24), d1 = s1_assoc(df, 24);
  double degenerate = seconds_since(t0);
  if (d2.ring() != Ring::QLrat) o.fail("deg_falling run was not over Q(l)");
  Triangle r2 = degenerate_s2(24, Scalar::lambda()), r1 = degenerate_s1(24, Scalar::lambda());
  for (std::size_t n = 0; n <= 24; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      if (!same(d2.at(n, k), r2.at(n, k)) || !same(d1.at(n, k), r1.at(n, k))) {
        o.fail("deg_falling triangles differ from the recurrences at " + at(n, k));
        n = 25;
        break;
      }
  if (degenerate >= 60) o.fail("deg_falling at n=24 took " + std::to_string(degenerate) + " s");
  char buf[128];
  std::snprintf(buf, sizeof buf, "f=t n=64: %.2f s (limit 10), deg_falling n=24 over Q(l): %.2f s (limit 60)",
                classical, degenerate);
  if (o.ok) o.detail = buf;
  else o.detail += std::string("; ") + buf;
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit;  // seconds, 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Subject> presets = preset_subjects();
  const std::vector<Subject> all = corpus();

  std::vector<Criterion> criteria{
      {1, "S1 of f=t: (-1)^(n-1)(n-1)! and C(n-1,k-1) B^(n)_(n-k), n <= 12", 1, criterion1},
      {2, "orthogonality of S1 and S2 for every preset, n <= 10", 30,
       [&] { return suite_outcome(Suite::Orthogonality, presets, 10); }},
      {3, "Schloemilch sum equals S1 for every corpus series, n <= 10", 0,
       [&] { return suite_outcome(Suite::Schloemilch, all, 10); }},
      {4, "four expressions for S1 agree, n <= 10", 0, [&] { return suite_outcome(Suite::S1Agreement, all, 10); }},
      {5, "logarithm: S2 expansion, f(log(1+t)), inverse of exp(fbar)-1, order 12", 0,
       [&] { return suite_outcome(Suite::Logarithm, all, 12); }},
      {6, "Bell moments, Bernoulli of order alpha via Bell and S2 sums, n <= 8", 0,
       [&] { return suite_outcome(Suite::Lemmas, all, 8); }},
      {7, "closed forms for S2, S1 and the logarithm of each family, n <= 8", 0, criterion7},
      {8, "degenerate families reduce to their partners at lambda = 0, n <= 8", 0, criterion8},
      {9, "uniform Y: S1(n,1) from the A2 multinomial sum, n <= 5", 60, criterion9},
      {10, "binomial identities, n <= 12", 0, criterion10},
      {11, "Lagrange coefficients (A), (B), (C) match Newton inversion, n <= 12", 0,
       [&] { return criterion11(all); }},
      {12, "performance of full triangles", 0, criterion12},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = seconds_since(t0);
    if (c.limit > 0 && secs >= c.limit) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit));
    if (!o.ok) ++failures;
    std::printf("criterion %2d: %s  %s [%.2f s] %s\n", c.id, o.ok ? "PASS" : "FAIL", c.title, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
