#include "dseries/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace dseries {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::PoleAtValue: return "PoleAtValue";
    case Errc::BadScalarText: return "BadScalarText";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::IndexOutOfOrder: return "IndexOutOfOrder";
    case Errc::BadConstantTerm: return "BadConstantTerm";
    case Errc::NoExactRoot: return "NoExactRoot";
    case Errc::NotDelta: return "NotDelta";
    case Errc::InsufficientOrder: return "InsufficientOrder";
    case Errc::NonUnitBaseForRationalPower: return "NonUnitBaseForRationalPower";
    case Errc::ArityTooSmall: return "ArityTooSmall";
    case Errc::NonRepresentablePower: return "NonRepresentablePower";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::LambdaModeRequired: return "LambdaModeRequired";
    case Errc::UnknownPreset: return "UnknownPreset";
    case Errc::NoOracle: return "NoOracle";
    case Errc::ZeroFirstMoment: return "ZeroFirstMoment";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownFunction: return "UnknownFunction";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Rat

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view n = s.substr(0, slash);
  std::string_view d = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(n) || !all_digits(d))
    throw Error(Errc::BadScalarText, "not a rational: '" + std::string(text) + "'");
  mpz_class num(std::string(n), 10);
  mpz_class den(std::string(d), 10);
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  if (neg) num = -num;
  return Rat(mpq_class(num, den));
}

Rat Rat::factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(mpq_class(f));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division of " + str() + " by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inverse() const { return Rat(1) / *this; }

Rat Rat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(mpq_class(n, d));
}

std::string Rat::str() const { return v_.get_str(10); }

Rat binomial(long m, long j) {
  if (j < 0) return Rat();
  if (m >= 0 && j > m) return Rat();
  mpz_class n(m), r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(j));
  return Rat(mpq_class(r));
}

Rat binomial(const Rat& a, long j) {
  if (j < 0) return Rat();
  Rat r(1);
  for (long i = 0; i < j; ++i) r *= (a - Rat(i)) / Rat(i + 1);
  return r;
}

bool exact_rational_power(const Rat& base, const Rat& exponent, Rat& out) {
  if (exponent.is_integer()) {
    if (base.is_zero() && exponent.sign() < 0) return false;
    out = base.pow(exponent.num().get_si());
    return true;
  }
  mpz_class q = exponent.den();
  if (!q.fits_ulong_p()) return false;
  unsigned long qq = q.get_ui();
  if (base.sign() < 0 && qq % 2 == 0) return false;
  if (base.is_zero()) {
    if (exponent.sign() < 0) return false;
    out = Rat();
    return true;
  }
  mpz_class n = abs(base.num()), d = base.den(), rn, rd;
  if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), qq) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), qq) == 0) return false;
  if (base.sign() < 0) rn = -rn;
  out = Rat(mpq_class(rn, rd)).pow(exponent.num().get_si());
  return true;
}

// ---------------------------------------------------------------- LPoly

LPoly::LPoly(Rat c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

LPoly::LPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

LPoly LPoly::lambda() { return LPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

void LPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat LPoly::eval(const Rat& at) const {
  Rat r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
  return r;
}

LPoly LPoly::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  return scaled(c_.back().inverse());
}

LPoly LPoly::scaled(const Rat& s) const {
  if (s.is_zero()) return LPoly();
  LPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

LPoly operator+(const LPoly& a, const LPoly& b) {
  const LPoly& lo = a.c_.size() < b.c_.size() ? a : b;
  LPoly r = a.c_.size() < b.c_.size() ? b : a;
  for (std::size_t i = 0; i < lo.c_.size(); ++i) r.c_[i] += lo.c_[i];
  r.trim();
  return r;
}

LPoly operator-(const LPoly& a) {
  LPoly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

LPoly operator-(const LPoly& a, const LPoly& b) { return a + (-b); }

LPoly operator*(const LPoly& a, const LPoly& b) {
  if (a.is_zero() || b.is_zero()) return LPoly();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return LPoly(std::move(r));
}

std::pair<LPoly, LPoly> LPoly::divmod(const LPoly& a, const LPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {LPoly(), a};
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  std::vector<Rat> r = a.c_;
  Rat inv_lead = b.lead().inverse();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    Rat c = r[static_cast<std::size_t>(i + b.degree())] * inv_lead;
    q[static_cast<std::size_t>(i)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j)
      r[static_cast<std::size_t>(i + j)] -= c * b.c_[static_cast<std::size_t>(j)];
  }
  return {LPoly(std::move(q)), LPoly(std::move(r))};
}

LPoly lpoly_gcd(const LPoly& a, const LPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd of two zero polynomials");
  LPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    LPoly r = LPoly::divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

namespace {

std::string term_str(const Rat& c, int power) {
  if (power == 0) return c.str();
  std::string mono = power == 1 ? "l" : "l^" + std::to_string(power);
  if (c.is_one()) return mono;
  if (c == Rat(-1)) return "-" + mono;
  return c.str() + "*" + mono;
}

// Cursor-based reader for the canonical polynomial text "c0 + c1*l + c2*l^2".
class PolyReader {
 public:
  explicit PolyReader(std::string_view s) : s_(s) {}

  LPoly read() {
    std::vector<Rat> coeffs;
    skip_ws();
    if (at_end()) fail();
    bool first = true;
    while (true) {
      bool neg = read_signs(first);
      first = false;
      auto [c, p] = read_term();
      if (neg) c = -c;
      if (coeffs.size() <= static_cast<std::size_t>(p)) coeffs.resize(static_cast<std::size_t>(p) + 1);
      coeffs[static_cast<std::size_t>(p)] += c;
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail();
    }
    return LPoly(std::move(coeffs));
  }

 private:
  bool at_end() const { return i_ >= s_.size(); }
  char peek() const { return s_[i_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
  }
  [[noreturn]] void fail() const {
    throw Error(Errc::BadScalarText, "malformed polynomial '" + std::string(s_) + "'");
  }

  bool read_signs(bool first) {
    bool neg = false;
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) fail();
      if (peek() == '+' || peek() == '-') {
        neg ^= peek() == '-';
        any = true;
        ++i_;
      } else {
        break;
      }
    }
    if (!first && !any) fail();
    return neg;
  }

  std::string_view digits() {
    std::size_t b = i_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    if (b == i_) fail();
    return s_.substr(b, i_ - b);
  }

  bool read_lambda() {
    if (s_.substr(i_, 6) == "lambda") {
      i_ += 6;
      return true;
    }
    if (!at_end() && peek() == 'l') {
      ++i_;
      return true;
    }
    return false;
  }

  std::pair<Rat, int> read_term() {
    skip_ws();
    Rat c(1);
    bool has_var = read_lambda();
    if (!has_var) {
      std::string text(digits());
      if (!at_end() && peek() == '/') {
        ++i_;
        text += "/";
        text += digits();
      }
      c = Rat::parse(text);
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++i_;
        skip_ws();
        if (!read_lambda()) fail();
        has_var = true;
      }
    }
    int p = 0;
    if (has_var) {
      p = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++i_;
        skip_ws();
        p = std::stoi(std::string(digits()));
      }
    }
    return {c, p};
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

std::string LPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += term_str(c_[i], static_cast<int>(i));
  }
  return out;
}

LPoly LPoly::parse(std::string_view text) { return PolyReader(text).read(); }

// ---------------------------------------------------------------- LRat

LRat LRat::reduce(LPoly num, LPoly den) {
  if (den.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
  if (num.is_zero()) return LRat();
  if (den.is_constant()) return LRat(num.scaled(den.constant().inverse()));
  LPoly g = lpoly_gcd(num, den);
  if (!g.is_one()) {
    num = LPoly::divmod(num, g).first;
    den = LPoly::divmod(den, g).first;
  }
  Rat lc = den.lead();
  if (!lc.is_one()) {
    Rat inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return LRat(std::move(num), std::move(den), true);
}

LRat lrat_reduce(LPoly num, LPoly den) { return LRat::reduce(std::move(num), std::move(den)); }

LRat LRat::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty() || s.front() != '(') return LRat(LPoly::parse(s));
  int depth = 0;
  std::size_t close = std::string_view::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) {
      close = i;
      break;
    }
  }
  if (close == std::string_view::npos)
    throw Error(Errc::BadScalarText, "unbalanced parentheses in '" + std::string(text) + "'");
  std::string_view num = s.substr(1, close - 1);
  std::string_view rest = trim(s.substr(close + 1));
  if (rest.empty()) return LRat(LPoly::parse(num));
  if (rest.size() < 3 || rest[0] != '/' || trim(rest.substr(1)).front() != '(' || rest.back() != ')')
    throw Error(Errc::BadScalarText, "malformed rational function '" + std::string(text) + "'");
  rest = trim(rest.substr(1));
  std::string_view den = rest.substr(1, rest.size() - 2);
  return reduce(LPoly::parse(num), LPoly::parse(den));
}

LRat LRat::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero rational function");
  return reduce(den_, num_);
}

Rat LRat::eval(const Rat& at) const {
  Rat d = den_.eval(at);
  if (d.is_zero())
    throw Error(Errc::PoleAtValue, "(" + str() + ") has a pole at l = " + at.str());
  return num_.eval(at) / d;
}

std::string LRat::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

LRat operator+(const LRat& a, const LRat& b) {
  if (a.is_polynomial() && b.is_polynomial()) return LRat(a.num_ + b.num_);
  if (a.den_ == b.den_) return LRat::reduce(a.num_ + b.num_, a.den_);
  return LRat::reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LRat operator-(const LRat& a) { return LRat(-a.num_, a.den_, true); }

LRat operator-(const LRat& a, const LRat& b) { return a + (-b); }

LRat operator*(const LRat& a, const LRat& b) {
  if (a.is_zero() || b.is_zero()) return LRat();
  if (a.is_polynomial() && b.is_polynomial()) return LRat(a.num_ * b.num_);
  return LRat::reduce(a.num_ * b.num_, a.den_ * b.den_);
}

LRat operator/(const LRat& a, const LRat& b) { return a * b.inverse(); }

// ---------------------------------------------------------------- Scalar

std::string_view ring_name(Ring r) noexcept {
  switch (r) {
    case Ring::Q: return "Q";
    case Ring::QL: return "QL";
    case Ring::QLrat: return "QLrat";
  }
  return "?";
}

Ring parse_ring(std::string_view name) {
  if (name == "Q") return Ring::Q;
  if (name == "QL") return Ring::QL;
  if (name == "QLrat") return Ring::QLrat;
  throw Error(Errc::BadScalarText, "unknown ring '" + std::string(name) + "'");
}

Scalar Scalar::parse(std::string_view text, Ring ring) {
  Scalar v = Scalar(LRat::parse(text)).demoted();
  if (v.ring() > ring)
    throw Error(Errc::BadScalarText,
                "'" + std::string(text) + "' does not lie in ring " + std::string(ring_name(ring)));
  return v.promoted(ring);
}

Scalar Scalar::promoted(Ring r) const {
  if (ring() >= r) return *this;
  if (r == Ring::QL) return Scalar(LPoly(std::get<Rat>(v_)));
  if (ring() == Ring::Q) return Scalar(LRat(LPoly(std::get<Rat>(v_))));
  return Scalar(LRat(std::get<LPoly>(v_)));
}

Scalar Scalar::demoted() const {
  if (ring() == Ring::QLrat) {
    const LRat& r = std::get<LRat>(v_);
    if (!r.is_polynomial()) return *this;
    return Scalar(r.num()).demoted();
  }
  if (ring() == Ring::QL) {
    const LPoly& p = std::get<LPoly>(v_);
    if (p.is_constant()) return Scalar(p.constant());
  }
  return *this;
}

const Rat& Scalar::rat() const {
  if (ring() != Ring::Q) throw Error(Errc::RingMismatch, "scalar " + str() + " is not rational");
  return std::get<Rat>(v_);
}

const LPoly& Scalar::lpoly() const {
  if (ring() != Ring::QL) throw Error(Errc::RingMismatch, "scalar " + str() + " is not in Q[l]");
  return std::get<LPoly>(v_);
}

const LRat& Scalar::lrat() const {
  if (ring() != Ring::QLrat) throw Error(Errc::RingMismatch, "scalar " + str() + " is not in Q(l)");
  return std::get<LRat>(v_);
}

bool Scalar::is_zero() const noexcept {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Scalar::is_one() const noexcept {
  switch (ring()) {
    case Ring::Q: return std::get<Rat>(v_).is_one();
    case Ring::QL: return std::get<LPoly>(v_).is_one();
    case Ring::QLrat: {
      const LRat& r = std::get<LRat>(v_);
      return r.is_polynomial() && r.num().is_one();
    }
  }
  return false;
}

bool Scalar::is_unit() const noexcept {
  if (ring() == Ring::QL) {
    const LPoly& p = std::get<LPoly>(v_);
    return p.is_constant() && !p.is_zero();
  }
  return !is_zero();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  switch (ring()) {
    case Ring::Q: return Scalar(std::get<Rat>(v_).inverse());
    case Ring::QL: {
      const LPoly& p = std::get<LPoly>(v_);
      if (p.is_constant()) return Scalar(LPoly(p.constant().inverse()));
      return Scalar(LRat::reduce(LPoly(Rat(1)), p));
    }
    case Ring::QLrat: return Scalar(std::get<LRat>(v_).inverse());
  }
  return *this;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = Scalar(1).promoted(ring());
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Scalar::str() const {
  return std::visit([](const auto& x) { return x.str(); }, v_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (ring() == Ring::Q && o.ring() == Ring::Q) {
    std::get<Rat>(v_) += std::get<Rat>(o.v_);
    return *this;
  }
  Ring r = join(ring(), o.ring());
  Scalar a = promoted(r), b = o.promoted(r);
  if (r == Ring::QL) *this = Scalar(std::get<LPoly>(a.v_) + std::get<LPoly>(b.v_));
  else *this = Scalar(std::get<LRat>(a.v_) + std::get<LRat>(b.v_));
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (ring() == Ring::Q && o.ring() == Ring::Q) {
    std::get<Rat>(v_) *= std::get<Rat>(o.v_);
    return *this;
  }
  Ring r = join(ring(), o.ring());
  Scalar a = promoted(r), b = o.promoted(r);
  if (r == Ring::QL) *this = Scalar(std::get<LPoly>(a.v_) * std::get<LPoly>(b.v_));
  else *this = Scalar(std::get<LRat>(a.v_) * std::get<LRat>(b.v_));
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division of " + str() + " by zero");
  if (ring() == Ring::Q && o.ring() == Ring::Q) {
    std::get<Rat>(v_) /= std::get<Rat>(o.v_);
    return *this;
  }
  Scalar inv = o.inverse();
  Ring r = join(ring(), inv.ring());
  *this = promoted(r) * inv.promoted(r);
  return *this;
}

Scalar operator-(const Scalar& a) {
  return std::visit([](const auto& x) { return Scalar(-x); }, a.v_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.ring() == b.ring()) return a.v_ == b.v_;
  Ring r = join(a.ring(), b.ring());
  return a.promoted(r).v_ == b.promoted(r).v_;
}

Rat eval_lambda(const Scalar& s, const Rat& value) {
  switch (s.ring()) {
    case Ring::Q: return s.rat();
    case Ring::QL: return s.lpoly().eval(value);
    case Ring::QLrat: return s.lrat().eval(value);
  }
  return Rat();
}

Scalar pow_rational(const Scalar& s, const Rat& e) {
  if (e.is_integer()) return s.pow(e.num().get_si());
  if (s.is_one()) return s;
  Scalar d = s.demoted();
  Rat out;
  if (d.ring() == Ring::Q && exact_rational_power(d.rat(), e, out)) return Scalar(out).promoted(s.ring());
  throw Error(Errc::NonRepresentablePower, "(" + s.str() + ")^(" + e.str() + ") is not exact");
}

}  // namespace dseries
