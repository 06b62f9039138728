#include "dseries/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dseries/exprparse.hpp"
#include "dseries/presets.hpp"
#include "dseries/serialize.hpp"
#include "dseries/stirling.hpp"
#include "dseries/verify.hpp"

namespace dseries {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string preset, f;
  std::size_t n = 0, order = 0;
  std::string lambda;
  std::string kind = "s2";
  std::string alpha;
  std::string format = "plain";
  std::string out;
  bool egf = false;
  bool with_x = false;
  std::string suite = "all";
  std::string s2_file, s1_file;
};

LambdaMode parse_lambda(const std::string& text) {
  if (text.empty()) return LambdaMode::absent();
  if (text == "symbolic") return LambdaMode::symbolic();
  try {
    return LambdaMode::at(Rat::parse(text));
  } catch (const Error&) {
    throw UsageError("--lambda expects 'symbolic' or a rational, got '" + text + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out), mode_(parse_lambda(o.lambda)) {}

  std::size_t order_for(std::size_t n) const {
    std::size_t order = o_.order ? o_.order : n;
    if (o_.order && o_.n && o_.n > o_.order) throw UsageError("--n must not exceed --order");
    std::size_t cap = max_order_from_env();
    if (order > cap || n > cap)
      throw UsageError("order " + std::to_string(std::max(order, n)) + " exceeds DELTASERIES_MAX_ORDER=" +
                       std::to_string(cap));
    if (order < 1) throw UsageError("--order (or --n) must be at least 1");
    return order;
  }

  void require_source() const {
    if (o_.preset.empty() == o_.f.empty()) throw UsageError("give exactly one of --preset and --f");
  }

  std::string label() const { return o_.preset.empty() ? o_.f : o_.preset; }

  Series series(std::size_t order) const {
    require_source();
    if (!o_.preset.empty()) return make_preset(o_.preset, order, mode_).f.series();
    return eval_expr(*parse_expr(o_.f), order, mode_);
  }

  DeltaSeries delta(std::size_t order) const {
    require_source();
    if (!o_.preset.empty()) return make_preset(o_.preset, order, mode_).f;
    return require_delta(eval_expr(*parse_expr(o_.f), order, mode_));
  }

  void emit(const std::string& text) const {
    if (o_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(o_.out);
    if (!file) throw UsageError("cannot write '" + o_.out + "'");
    file << text;
  }

  void check_format(std::initializer_list<const char*> allowed) const {
    for (const char* a : allowed)
      if (o_.format == a) return;
    throw UsageError("format '" + o_.format + "' is not available here");
  }

  int table() const {
    if (!o_.n) throw UsageError("table needs --n");
    if (o_.kind != "s1" && o_.kind != "s2") throw UsageError("--kind must be s1 or s2");
    check_format({"plain", "csv", "json"});
    DeltaSeries f = delta(order_for(o_.n));
    Triangle t = o_.kind == "s2" ? s2_assoc(f, o_.n) : s1_assoc(f, o_.n);
    if (o_.format == "json") emit(triangle_json(t, label()) + "\n");
    else if (o_.format == "csv") emit(triangle_csv(t));
    else emit(triangle_plain(t));
    return 0;
  }

  void emit_series(const Series& s) const {
    check_format({"plain", "csv", "json"});
    if (o_.format == "json") emit(series_json(s, o_.egf) + "\n");
    else if (o_.format == "csv") emit(series_csv(s, o_.egf));
    else emit(series_plain(s, o_.egf));
  }

  std::size_t series_order() const {
    std::size_t want = o_.order ? o_.order : o_.n;
    if (!want) throw UsageError("give --order");
    return order_for(want);
  }

  int log() const {
    emit_series(assoc_log(delta(series_order())));
    return 0;
  }

  int invert() const {
    emit_series(invert_newton(delta(series_order())).series());
    return 0;
  }

  int eval() const {
    emit_series(series(series_order()));
    return 0;
  }

  int bernoulli() const {
    if (o_.alpha.empty()) throw UsageError("bernoulli needs --alpha");
    if (!o_.n) throw UsageError("bernoulli needs --n");
    check_format({"plain", "csv", "json"});
    Rat alpha;
    try {
      alpha = Rat::parse(o_.alpha);
    } catch (const Error&) {
      throw UsageError("--alpha expects a rational, got '" + o_.alpha + "'");
    }
    std::size_t order = std::max(order_for(o_.n), o_.n + 1);
    if (order > max_order_from_env()) throw UsageError("order exceeds DELTASERIES_MAX_ORDER");
    BernoulliFamily b = bernoulli_assoc(delta(order), alpha, o_.n, o_.with_x);
    if (o_.format == "json") emit(bernoulli_json(b, label()) + "\n");
    else if (o_.format == "csv") emit(bernoulli_csv(b));
    else emit(bernoulli_plain(b));
    return 0;
  }

  int presets_list() const {
    check_format({"plain", "json"});
    if (o_.format == "json") {
      emit(preset_registry_json() + "\n");
      return 0;
    }
    std::string text;
    for (const auto& p : preset_registry()) {
      text += "(" + std::string(1, p.letter) + ") " + std::string(p.id);
      text += std::string(p.id.size() < 18 ? 18 - p.id.size() : 1, ' ') + std::string(p.formula);
      if (p.degenerate) text += "    [lambda]";
      text += "\n";
    }
    emit(text);
    return 0;
  }

  int verify() const {
    check_format({"plain", "json"});
    std::vector<Suite> suites = parse_suites(o_.suite);
    std::size_t n = o_.n ? o_.n : 8;
    order_for(2 * n + 2);
    std::vector<Subject> subjects;
    if (o_.preset == "all") {
      if (!o_.f.empty()) throw UsageError("give exactly one of --preset and --f");
      for (const auto& p : preset_registry()) subjects.push_back(preset_subject(std::string(p.id), mode_));
    } else if (!o_.preset.empty() || !o_.f.empty()) {
      require_source();
      subjects.push_back(o_.preset.empty() ? expr_subject(o_.f, mode_) : preset_subject(o_.preset, mode_));
    } else if (!o_.s2_file.empty() && !o_.s1_file.empty()) {
      Subject s;
      s.label = o_.s2_file;
      subjects.push_back(s);
    } else {
      throw UsageError("verify needs --preset, --f, or both --s2-file and --s1-file");
    }
    if (!o_.s2_file.empty() || !o_.s1_file.empty()) {
      if (subjects.size() != 1) throw UsageError("cached tables apply to a single subject");
      if (!o_.s2_file.empty()) subjects[0].s2 = triangle_from_json(read_file(o_.s2_file));
      if (!o_.s1_file.empty()) subjects[0].s1 = triangle_from_json(read_file(o_.s1_file));
      if (!subjects[0].build) {
        if (suites.size() != 1 || suites[0] != Suite::Orthogonality)
          throw UsageError("cached tables without --preset/--f support only the orthogonality suite");
        n = std::min({n, subjects[0].s2->max_n(), subjects[0].s1->max_n()});
      } else {
        if (subjects[0].s2) n = std::min(n, subjects[0].s2->max_n());
        if (subjects[0].s1) n = std::min(n, subjects[0].s1->max_n());
      }
    }
    std::vector<SuiteResult> results = run_suites(suites, subjects, n);
    bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed(); });
    if (o_.format == "json") {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const SuiteResult& r : results) {
        j.push_back({{"suite", suite_name(r.suite)},
                     {"subject", r.subject},
                     {"status", !r.applicable ? "n/a" : r.passed() ? "pass" : "fail"},
                     {"checks", r.report.checked},
                     {"detail", r.error.empty() ? r.report.describe() : r.error},
                     {"seconds", r.seconds}});
      }
      emit(j.dump(2) + "\n");
    } else {
      emit(render_matrix(results, suites, subjects) + (ok ? "all checks passed\n" : "verification FAILED\n"));
    }
    return ok ? 0 : 1;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  LambdaMode mode_;
};

void add_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--preset", o.preset, "preset id (see presets-list)");
  cmd->add_option("--f", o.f, "expression in t, e.g. \"t/(1+t)\"");
  cmd->add_option("--lambda", o.lambda, "symbolic or a rational value");
  cmd->add_option("--format", o.format, "plain, csv or json");
  cmd->add_option("--out", o.out, "write output to a file");
}

}  // namespace

std::size_t max_order_from_env() {
  const char* v = std::getenv("DELTASERIES_MAX_ORDER");
  if (!v || !*v) return 128;
  char* end = nullptr;
  unsigned long long cap = std::strtoull(v, &end, 10);
  if (*end != '\0' || cap == 0) return 128;
  return static_cast<std::size_t>(cap);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Stirling numbers, logarithms and Bernoulli families of delta series", "deltaseries"};
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "S1 or S2 triangle of f");
  add_source(table, o);
  table->add_option("--n", o.n, "largest row")->required();
  table->add_option("--order", o.order, "working order of f (default n)");
  table->add_option("--kind", o.kind, "s1 or s2");

  auto* log = app.add_subcommand("log", "associated logarithm f(log(1+t))");
  add_source(log, o);
  log->add_option("--order", o.order, "series order");
  log->add_option("--n", o.n, "alias for --order");
  log->add_flag("--egf", o.egf, "list n! * coefficients");

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers of order alpha with base f");
  add_source(bern, o);
  bern->add_option("--alpha", o.alpha, "rational order")->required();
  bern->add_option("--n", o.n, "largest index")->required();
  bern->add_option("--order", o.order, "working order of f");
  bern->add_flag("--with-x", o.with_x, "also emit the polynomials in x");

  auto* inv = app.add_subcommand("invert", "compositional inverse of f");
  add_source(inv, o);
  inv->add_option("--order", o.order, "series order");
  inv->add_option("--n", o.n, "alias for --order");
  inv->add_flag("--egf", o.egf, "list n! * coefficients");

  auto* ev = app.add_subcommand("eval", "expand f as a power series");
  add_source(ev, o);
  ev->add_option("--order", o.order, "series order");
  ev->add_option("--n", o.n, "alias for --order");
  ev->add_flag("--egf", o.egf, "list n! * coefficients");

  auto* ver = app.add_subcommand("verify", "run identity suites");
  add_source(ver, o);
  ver->add_option("suite", o.suite, "orthogonality, schloemilch, theorem22, lemmas, logarithm, lambda-limit or all");
  ver->add_option("--n", o.n, "largest index (default 8)");
  ver->add_option("--order", o.order, "accepted for symmetry; suites pick their own working order");
  ver->add_option("--s2-file", o.s2_file, "cached S2 triangle (JSON)");
  ver->add_option("--s1-file", o.s1_file, "cached S1 triangle (JSON)");

  auto* list = app.add_subcommand("presets-list", "list the built-in families");
  list->add_option("--format", o.format, "plain or json");
  list->add_option("--out", o.out, "write output to a file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    Runner run(o, out);
    if (*table) return run.table();
    if (*log) return run.log();
    if (*bern) return run.bernoulli();
    if (*inv) return run.invert();
    if (*ev) return run.eval();
    if (*ver) return run.verify();
    return run.presets_list();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dseries
