#pragma once

// The fifteen example families of delta series, each with closed-form
// oracles for S2, S1 and the associated logarithm built from primitives that
// bypass the associated-Stirling machinery.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dseries/fps.hpp"
#include "dseries/stirling.hpp"

namespace dseries {

struct LambdaMode {
  enum class Kind : std::uint8_t { Absent, Symbolic, Value };
  Kind kind = Kind::Absent;
  Rat value;

  static LambdaMode absent() { return {}; }
  static LambdaMode symbolic() { return {Kind::Symbolic, Rat()}; }
  static LambdaMode at(const Rat& v) { return {Kind::Value, v}; }
  std::string str() const;
};

// Symbolic values pass through; a Value mode substitutes l. Absent rejects
// values that depend on l.
Scalar apply_mode(const Scalar& s, const LambdaMode& mode);
Series apply_mode(const Series& s, const LambdaMode& mode);
Triangle apply_mode(const Triangle& t, const LambdaMode& mode);

struct PresetInfo {
  std::string_view id;
  char letter;
  std::string_view formula;   // in the expression grammar where expressible
  bool degenerate;            // needs a lambda mode
  std::string_view partner;   // classical family at l = 0 (degenerate ids)
  bool s2_oracle, s1_oracle, log_oracle;
};

const std::vector<PresetInfo>& preset_registry();
// Throws UnknownPreset.
const PresetInfo& preset_info(std::string_view id);
std::string preset_registry_json();

struct Preset {
  std::string id;
  LambdaMode mode;
  DeltaSeries f;
};

// Throws LambdaModeRequired, UnknownPreset.
Preset make_preset(std::string_view id, std::size_t order, const LambdaMode& mode);

// Series building blocks over Q[l] (or Q(l) when nu is a rational function).
// (e^{nu t} - 1)/nu
Series deg_expm1(std::size_t order, const Scalar& nu);
// log_nu(1 + s) = ((1+s)^nu - 1)/nu, s(0) = 0.
Series deg_log1p(const Series& s, const Scalar& nu);
// e_nu(t)^a = (1 + nu t)^{a/nu}
Series deg_exp(std::size_t order, const Scalar& nu, const Rat& a = 1);

// Independent primitives.
Triangle lah_triangle(std::size_t max_n);
// Degenerate Stirling numbers by their recurrences in the parameter nu.
Triangle degenerate_s2(std::size_t max_n, const Scalar& nu);
Triangle degenerate_s1(std::size_t max_n, const Scalar& nu);
// Degenerate Lah numbers L_mu from (e_{-mu}(t) - 1)^k / k!.
Triangle degenerate_lah(std::size_t max_n, const Scalar& mu);
// Central factorial numbers from their generating functions.
Triangle central_t1(std::size_t max_n);
Triangle central_t2(std::size_t max_n);
Triangle central_t1_lambda(std::size_t max_n);
Triangle central_t2_lambda(std::size_t max_n);
// C(n-1,k-1) beta_{n-k,l}^{(n)} with beta from (t/(e_l(t)-1))^alpha.
Scalar degenerate_bernoulli_s1(std::size_t n, std::size_t k);
// (-l)^{n-k} L_{1/l}(n,k), computed in Q(l).
Triangle reciprocal_lah_form(std::size_t max_n);

// Throw NoOracle for ids without a stated closed form.
Triangle oracle_s2_triangle(std::string_view id, std::size_t max_n, const LambdaMode& mode = LambdaMode::symbolic());
Triangle oracle_s1_triangle(std::string_view id, std::size_t max_n, const LambdaMode& mode = LambdaMode::symbolic());
Scalar oracle_s2(std::string_view id, std::size_t n, std::size_t k, const LambdaMode& mode = LambdaMode::symbolic());
Scalar oracle_s1(std::string_view id, std::size_t n, std::size_t k, const LambdaMode& mode = LambdaMode::symbolic());
Series oracle_log(std::string_view id, std::size_t order, const LambdaMode& mode = LambdaMode::symbolic());

// Moments E[(Y)_{n,l}] (l-dependent) or E[Y^n] (Absent mode).
struct MomentSeq {
  std::string name;
  std::function<Scalar(std::size_t)> moment;
};

MomentSeq uniform_moments(const LambdaMode& mode);
MomentSeq deterministic_moments(const Rat& c, const LambdaMode& mode);
// P(Y = a) = p, P(Y = b) = 1 - p.
MomentSeq two_point_moments(const Rat& a, const Rat& b, const Rat& p, const LambdaMode& mode);

// f with fbar = log(1 + sum_{n>=1} m(n) t^n/n!). Throws ZeroFirstMoment.
DeltaSeries moment_delta(const MomentSeq& m, std::size_t order);

// Ordinary coefficients of (t^2/2)/(e^t - 1 - t); EGF values are A_{2,n}.
Series a2_series(std::size_t order);

// S1(n,1) for uniform Y by the multinomial sum over compositions of A_{2,j}.
Scalar uniform_s1_formula(std::size_t n);

}  // namespace dseries
