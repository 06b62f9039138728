#include "dseries/verify.hpp"

#include <chrono>
#include <future>
#include <sstream>

#include "dseries/exprparse.hpp"

namespace dseries {

namespace {

const long kAlphas[] = {-2, -1, 1, 2, 3};

bool same(const Scalar& a, const Scalar& b) { return a.demoted() == b.demoted(); }

void compare_triangles(CheckReport& r, const std::string& rel, const Triangle& got, const Triangle& want,
                       std::size_t n) {
  for (std::size_t i = 0; i <= n && r.ok; ++i)
    for (std::size_t k = 0; k <= i; ++k) {
      ++r.checked;
      if (!same(got.at(i, k), want.at(i, k))) {
        r.fail(rel, {i, k}, got.at(i, k), want.at(i, k));
        return;
      }
    }
}

void compare_series(CheckReport& r, const std::string& rel, const Series& got, const Series& want, std::size_t n) {
  for (std::size_t i = 0; i <= n; ++i) {
    ++r.checked;
    if (!same(got[i], want[i])) {
      r.fail(rel, {i}, got[i], want[i]);
      return;
    }
  }
}

CheckReport orthogonality(const Subject& s, std::size_t n) {
  if (s.s2 && s.s1) return orthogonality_check(*s.s2, *s.s1);
  if (s.s2 || s.s1) {
    DeltaSeries f = s.build(n, s.mode);
    Triangle s2 = s.s2 ? *s.s2 : s2_assoc(f, n);
    Triangle s1 = s.s1 ? *s.s1 : s1_assoc(f, n);
    return orthogonality_check(s2, s1);
  }
  return orthogonality_check(s.build(n, s.mode), n);
}

CheckReport schloemilch(const Subject& s, std::size_t n) {
  DeltaSeries f = s.build(2 * n + 2, s.mode);
  Triangle s2 = s2_assoc(f, 2 * n);
  Triangle s1 = s1_assoc(f, n);
  Scalar p1 = f.linear().inverse();
  CheckReport r;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t k = 0; k <= i; ++k) {
      ++r.checked;
      Scalar v = schloemilch_s1(s2, p1, i, k);
      if (!same(v, s1.at(i, k))) {
        r.fail("Schloemilch sum = S1", {i, k}, v, s1.at(i, k));
        return r;
      }
    }
  return r;
}

CheckReport s1_agreement(const Subject& s, std::size_t n) {
  DeltaSeries f = s.build(2 * n + 2, s.mode);
  Triangle s1 = s1_assoc(f, n);
  Triangle s2 = s2_assoc(f, 2 * n);
  Scalar p1 = f.linear().inverse();
  CheckReport r;
  compare_triangles(r, "S1 by logarithm = S1 by inversion", s1_assoc(f, n, S1Path::Log), s1, n);
  for (std::size_t i = 0; i <= n && r.ok; ++i)
    for (std::size_t k = 0; k <= i; ++k) {
      const Scalar& want = s1.at(i, k);
      std::pair<const char*, Scalar> paths[] = {
          {"C(n-1,k-1) B^(n)_{n-k} = S1", s1_via_bernoulli(f, i, k)},
          {"B_{n,k}(S1(m,1)) = S1", s1_via_partial_bell(f, i, k)},
          {"B_{n,k}(B^(m)_{m-1}) = S1", s1_via_bernoulli_bell(f, i, k)},
          {"Schloemilch sum = S1", schloemilch_s1(s2, p1, i, k)},
      };
      for (auto& [rel, v] : paths) {
        ++r.checked;
        if (!same(v, want)) {
          r.fail(rel, {i, k}, v, want);
          return r;
        }
      }
    }
  return r;
}

CheckReport lemmas(const Subject& s, std::size_t n) {
  DeltaSeries f = s.build(2 * n + 2, s.mode);
  Triangle s2 = s2_assoc(f, 2 * n);
  Scalar p1 = f.linear().inverse();
  DeltaSeries fbar = invert_newton(f);
  CheckReport r;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t k = 0; k <= i; ++k) {
      ++r.checked;
      Scalar l = lemma_bell_moments(f, i, k), rhs = lemma_bell_moments_rhs(f, i, k);
      if (!same(l, rhs)) {
        r.fail("B_{n,k}(p2/2,...) = S2 sum", {i, k}, l, rhs);
        return r;
      }
    }
  for (long a : kAlphas) {
    BernoulliFamily fam = bernoulli_assoc(fbar, a, n);
    for (std::size_t i = 0; i <= n; ++i) {
      r.checked += 2;
      Scalar bell = lemma_bernoulli_bell(f, a, i);
      if (!same(bell, fam.values[i])) {
        r.fail("Bell form of B^(alpha) (alpha=" + std::to_string(a) + ")", {i}, bell, fam.values[i]);
        return r;
      }
      Scalar dbl = bernoulli_via_s2(s2, p1, a, i);
      if (!same(dbl, fam.values[i])) {
        r.fail("S2 double sum for B^(alpha) (alpha=" + std::to_string(a) + ")", {i}, dbl, fam.values[i]);
        return r;
      }
    }
  }
  BernoulliFamily one = bernoulli_assoc(fbar, 1, n);
  for (std::size_t i = 0; i <= n; ++i) {
    ++r.checked;
    Scalar v = bernoulli_via_s2_single(s2, p1, i);
    if (!same(v, one.values[i])) {
      r.fail("S2 single sum for B^(1)", {i}, v, one.values[i]);
      return r;
    }
  }
  CheckReport b = binomial_identities_check(n);
  r.checked += b.checked;
  if (!b.ok) return b;
  return r;
}

CheckReport logarithm(const Subject& s, std::size_t n) {
  DeltaSeries big = s.build(2 * n + 2, s.mode);
  DeltaSeries f = big.truncated(n);
  Series lg = assoc_log(f);
  CheckReport r;
  Triangle s2 = s2_assoc(big, 2 * n);
  compare_series(r, "S2 expansion = f(log(1+t))", assoc_log_expansion(s2, big.linear().inverse(), n), lg, n);
  if (!r.ok) return r;
  Series fbar = invert_newton(f).series();
  Series e = exp_series(fbar) - Series::constant(Scalar(1).promoted(fbar.ring()), n);
  compare_series(r, "inverse of exp(fbar)-1 = f(log(1+t))", invert_newton(DeltaSeries(e)).series(), lg, n);
  if (!r.ok) return r;
  if (!s.preset.empty() && preset_info(s.preset).log_oracle)
    compare_series(r, "closed form = f(log(1+t))", oracle_log(s.preset, n, s.mode), lg, n);
  return r;
}

std::optional<CheckReport> lambda_limit(const Subject& s, std::size_t n) {
  if (s.mode.kind != LambdaMode::Kind::Symbolic) return std::nullopt;
  DeltaSeries f = s.build(n, s.mode);
  std::optional<DeltaSeries> base;
  if (!s.preset.empty()) {
    const PresetInfo& info = preset_info(s.preset);
    if (!info.degenerate) return std::nullopt;
    base = make_preset(std::string(info.partner), n, LambdaMode::absent()).f;
  } else {
    if (f.ring() == Ring::Q) return std::nullopt;
    try {
      base = s.build(n, LambdaMode::at(0));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  CheckReport r;
  compare_series(r, "f at l=0 = partner f", eval_lambda(f.series(), 0), base->series(), n);
  if (r.ok) compare_triangles(r, "S2 at l=0 = partner S2", s2_assoc(f, n).specialized(0), s2_assoc(*base, n), n);
  if (r.ok) compare_triangles(r, "S1 at l=0 = partner S1", s1_assoc(f, n).specialized(0), s1_assoc(*base, n), n);
  if (r.ok) compare_series(r, "log at l=0 = partner log", eval_lambda(assoc_log(f), 0), assoc_log(*base), n);
  return r;
}

}  // namespace

std::string_view suite_name(Suite s) noexcept {
  switch (s) {
    case Suite::Orthogonality: return "orthogonality";
    case Suite::Schloemilch: return "schloemilch";
    case Suite::S1Agreement: return "theorem22";
    case Suite::Lemmas: return "lemmas";
    case Suite::Logarithm: return "logarithm";
    case Suite::LambdaLimit: return "lambda-limit";
  }
  return "?";
}

std::vector<Suite> parse_suites(std::string_view name) {
  std::vector<Suite> all{Suite::Orthogonality, Suite::Schloemilch, Suite::S1Agreement,
                         Suite::Lemmas,        Suite::Logarithm,   Suite::LambdaLimit};
  if (name == "all") return all;
  for (Suite s : all)
    if (suite_name(s) == name) return {s};
  throw Error(Errc::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

LambdaMode default_mode(const std::string& preset, const LambdaMode& requested) {
  if (requested.kind != LambdaMode::Kind::Absent) return requested;
  if (!preset.empty() && preset_info(preset).degenerate) return LambdaMode::symbolic();
  return requested;
}

Subject preset_subject(const std::string& id, const LambdaMode& mode) {
  (void)preset_info(id);
  Subject s;
  s.label = id;
  s.preset = id;
  s.mode = default_mode(id, mode);
  s.build = [id](std::size_t order, const LambdaMode& m) { return make_preset(id, order, m).f; };
  return s;
}

Subject expr_subject(const std::string& src, const LambdaMode& mode) {
  ExprPtr e = parse_expr(src);
  Subject s;
  s.label = src;
  s.mode = mode.kind == LambdaMode::Kind::Absent && e->has_lambda() ? LambdaMode::symbolic() : mode;
  s.build = [e](std::size_t order, const LambdaMode& m) { return require_delta(eval_expr(*e, order, m)); };
  return s;
}

SuiteResult run_suite(Suite suite, const Subject& subject, std::size_t n) {
  SuiteResult out;
  out.suite = suite;
  out.subject = subject.label;
  auto start = std::chrono::steady_clock::now();
  try {
    switch (suite) {
      case Suite::Orthogonality: out.report = orthogonality(subject, n); break;
      case Suite::Schloemilch: out.report = schloemilch(subject, n); break;
      case Suite::S1Agreement: out.report = s1_agreement(subject, n); break;
      case Suite::Lemmas: out.report = lemmas(subject, n); break;
      case Suite::Logarithm: out.report = logarithm(subject, n); break;
      case Suite::LambdaLimit: {
        auto r = lambda_limit(subject, n);
        if (r) out.report = *r;
        else out.applicable = false;
        break;
      }
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<SuiteResult> run_suites(const std::vector<Suite>& suites, const std::vector<Subject>& subjects,
                                    std::size_t n) {
  std::vector<std::future<SuiteResult>> tasks;
  for (const Subject& subj : subjects)
    for (Suite s : suites)
      tasks.push_back(std::async(std::launch::async, [s, &subj, n] { return run_suite(s, subj, n); }));
  std::vector<SuiteResult> out;
  for (auto& t : tasks) out.push_back(t.get());
  return out;
}

std::string render_matrix(const std::vector<SuiteResult>& results, const std::vector<Suite>& suites,
                          const std::vector<Subject>& subjects) {
  std::size_t width = 8;
  for (const Subject& s : subjects) width = std::max(width, s.label.size());
  std::ostringstream out;
  out << std::string(width, ' ');
  for (Suite s : suites) out << "  " << suite_name(s);
  out << "\n";
  for (std::size_t i = 0; i < subjects.size(); ++i) {
    out << subjects[i].label << std::string(width - subjects[i].label.size(), ' ');
    for (std::size_t j = 0; j < suites.size(); ++j) {
      const SuiteResult& r = results[i * suites.size() + j];
      std::string cell = !r.applicable ? "n/a" : r.passed() ? "pass" : "FAIL";
      std::size_t w = suite_name(suites[j]).size();
      out << "  " << cell << std::string(w > cell.size() ? w - cell.size() : 0, ' ');
    }
    out << "\n";
  }
  for (const SuiteResult& r : results) {
    if (r.passed()) continue;
    out << "\n" << suite_name(r.suite) << " / " << r.subject << ": ";
    out << (r.error.empty() ? r.report.describe() : "error: " + r.error) << "\n";
  }
  return out.str();
}

}  // namespace dseries
