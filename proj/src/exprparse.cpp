#include "dseries/exprparse.hpp"

#include <algorithm>
#include <cctype>

namespace dseries {

namespace {

constexpr std::size_t kMaxNesting = 256;

ExprPtr node(Expr::Op op, std::vector<ExprPtr> args = {}, Rat value = Rat(), std::string fn = {}) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->args = std::move(args);
  e->value = std::move(value);
  e->fn = std::move(fn);
  return e;
}

bool known_function(std::string_view name) { return name == "exp" || name == "log" || name == "sqrt"; }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr parse() {
    skip();
    if (pos_ == src_.size()) fail({"expression"}, "empty input");
    ExprPtr e = expr();
    skip();
    if (pos_ != src_.size()) fail({"+", "-", "*", "/", "^", "end of input"}, "unexpected '" + peek_text() + "'");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t nesting_ = 0;

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) const {
    std::string msg = what + "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
    throw SyntaxError(pos_, std::move(expected), msg);
  }

  std::string peek_text() const {
    if (pos_ >= src_.size()) return "end of input";
    return std::string(1, src_[pos_]);
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail({std::string(1, c)}, "unexpected " + quoted_peek());
  }

  std::string quoted_peek() const {
    return pos_ >= src_.size() ? "end of input" : "'" + peek_text() + "'";
  }

  struct Nest {
    Parser& p;
    explicit Nest(Parser& parser) : p(parser) {
      if (++p.nesting_ > kMaxNesting) p.fail({"shallower nesting"}, "expression nested too deeply");
    }
    ~Nest() { --p.nesting_; }
  };

  ExprPtr expr() {
    Nest guard(*this);
    ExprPtr lhs = term();
    for (;;) {
      if (eat('+')) lhs = node(Expr::Op::Add, {lhs, term()});
      else if (eat('-')) lhs = node(Expr::Op::Sub, {lhs, term()});
      else return lhs;
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      if (eat('*')) lhs = node(Expr::Op::Mul, {lhs, unary()});
      else if (eat('/')) lhs = node(Expr::Op::Div, {lhs, unary()});
      else return lhs;
    }
  }

  ExprPtr unary() {
    Nest guard(*this);
    if (eat('-')) return node(Expr::Op::Neg, {unary()});
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!eat('^')) return base;
    return node(Expr::Op::Pow, {base}, exponent());
  }

  Rat integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail({"integer"}, "unexpected " + quoted_peek());
    return Rat::parse(src_.substr(start, pos_ - start));
  }

  Rat exponent() {
    skip();
    if (!eat('(')) {
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) return integer();
      fail({"integer", "("}, "unexpected " + quoted_peek());
    }
    bool negative = eat('-');
    Rat r = integer();
    if (eat('/')) {
      std::size_t at = pos_;
      Rat den = integer();
      if (den.is_zero()) {
        pos_ = at;
        skip();
        fail({"nonzero integer"}, "zero denominator in exponent");
      }
      r /= den;
    }
    expect(')');
    return negative ? -r : r;
  }

  ExprPtr atom() {
    skip();
    if (pos_ >= src_.size()) fail({"integer", "t", "lambda", "(", "function"}, "unexpected end of input");
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return node(Expr::Op::Number, {}, integer());
    if (c == '(') {
      ++pos_;
      ExprPtr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      if (name == "t") return node(Expr::Op::T);
      if (name == "lambda") return node(Expr::Op::Lambda);
      skip();
      if (pos_ < src_.size() && src_[pos_] == '(') {
        if (!known_function(name)) throw Error(Errc::UnknownFunction, "unknown function '" + name + "'");
        ++pos_;
        ExprPtr arg = expr();
        expect(')');
        return node(Expr::Op::Call, {arg}, Rat(), name);
      }
      pos_ = start;
      fail({"t", "lambda", "function call"}, "unknown name '" + name + "'");
    }
    fail({"integer", "t", "lambda", "(", "function"}, "unexpected '" + std::string(1, c) + "'");
  }
};

int precedence(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Add:
    case Expr::Op::Sub: return 1;
    case Expr::Op::Mul:
    case Expr::Op::Div: return 2;
    case Expr::Op::Neg: return 3;
    case Expr::Op::Pow: return 4;
    case Expr::Op::Number: return e.value.is_integer() && e.value >= Rat(0) ? 5 : 2;
    default: return 5;
  }
}

void print(const Expr& e, int min_prec, std::string& out) {
  bool paren = precedence(e) < min_prec;
  if (paren) out += '(';
  auto bin = [&](const char* op, int l, int r) {
    print(*e.args[0], l, out);
    out += op;
    print(*e.args[1], r, out);
  };
  switch (e.op) {
    case Expr::Op::Number:
      if (e.value.is_integer() && e.value < Rat(0)) out += "-" + (-e.value).str();
      else out += e.value.str();
      break;
    case Expr::Op::T: out += "t"; break;
    case Expr::Op::Lambda: out += "lambda"; break;
    case Expr::Op::Neg:
      out += "-";
      print(*e.args[0], 3, out);
      break;
    case Expr::Op::Add: bin("+", 1, 2); break;
    case Expr::Op::Sub: bin("-", 1, 2); break;
    case Expr::Op::Mul: bin("*", 2, 3); break;
    case Expr::Op::Div: bin("/", 2, 3); break;
    case Expr::Op::Pow:
      print(*e.args[0], 5, out);
      out += "^";
      if (e.value.is_integer() && e.value >= Rat(0)) out += e.value.str();
      else out += "(" + e.value.str() + ")";
      break;
    case Expr::Op::Call:
      out += e.fn + "(";
      print(*e.args[0], 0, out);
      out += ")";
      break;
  }
  if (paren) out += ')';
}

// Evaluation keeps each intermediate at the precision it actually carries:
// a quotient that cancels t^s loses s coefficients.
class Evaluator {
 public:
  Evaluator(std::size_t order, const LambdaMode& mode) : order_(order), mode_(mode) {}

  Series eval(const Expr& e) {
    switch (e.op) {
      case Expr::Op::Number: return Series::constant(Scalar(e.value), order_);
      case Expr::Op::T: return Series::identity(order_);
      case Expr::Op::Lambda: return Series::constant(lambda_value(), order_);
      case Expr::Op::Neg: return -eval(*e.args[0]);
      case Expr::Op::Add: return binary(e, [](const Series& a, const Series& b) { return a + b; });
      case Expr::Op::Sub: return binary(e, [](const Series& a, const Series& b) { return a - b; });
      case Expr::Op::Mul: return binary(e, [](const Series& a, const Series& b) { return a * b; });
      case Expr::Op::Div: return quotient(eval(*e.args[0]), eval(*e.args[1]));
      case Expr::Op::Pow: return power(eval(*e.args[0]), e.value);
      case Expr::Op::Call: return call(e.fn, eval(*e.args[0]));
    }
    throw Error(Errc::InvalidArgument, "bad expression node");
  }

 private:
  std::size_t order_;
  LambdaMode mode_;

  Scalar lambda_value() const {
    switch (mode_.kind) {
      case LambdaMode::Kind::Symbolic: return Scalar::lambda();
      case LambdaMode::Kind::Value: return Scalar(mode_.value);
      case LambdaMode::Kind::Absent: break;
    }
    throw Error(Errc::LambdaModeRequired, "expression uses lambda; pass a lambda mode");
  }

  static void align(Series& a, Series& b) {
    std::size_t n = std::min(a.order(), b.order());
    a = a.truncated(n);
    b = b.truncated(n);
    unify(a, b);
  }

  template <class F>
  Series binary(const Expr& e, F op) {
    Series a = eval(*e.args[0]);
    Series b = eval(*e.args[1]);
    align(a, b);
    return op(a, b);
  }

  static Series quotient(Series a, Series b) {
    align(a, b);
    if (b.is_zero()) throw Error(Errc::NonUnitConstantTerm, "division by a series that vanishes to this order");
    std::size_t s = std::min(a.valuation(), b.valuation());
    if (s > 0) {
      a = shift_down(a, s);
      b = shift_down(b, s);
    }
    if (b[0].is_zero()) throw Error(Errc::NonUnitConstantTerm, "divisor keeps a zero constant term after cancelling t^" + std::to_string(s));
    return div(a, b).demoted();
  }

  static Series power(const Series& base, const Rat& r) {
    if (r.is_integer()) {
      long k = std::stol(r.str());
      if (k >= 0) return pow_int(base, k);
      return quotient(Series::constant(Scalar(1), base.order()).promoted(base.ring()), pow_int(base, -k));
    }
    return scaled_root(base, r, "power");
  }

  // base^r for rational r via c^r (1 + (base - c)/c)^r with c the constant term.
  static Series scaled_root(const Series& base, const Rat& r, const char* what) {
    const Scalar c = base[0];
    if (c.is_zero()) throw Error(Errc::BadConstantTerm, std::string(what) + " of a series with zero constant term");
    Scalar root;
    try {
      root = pow_rational(c, r);
    } catch (const Error& err) {
      throw Error(Errc::NoExactRoot, "constant term " + c.str() + " has no exact " + r.str() + " power");
    }
    Series unit = scale(base, c.inverse());
    return scale(pow_ratio(unit, r), root).demoted();
  }

  static Series call(const std::string& fn, const Series& arg) {
    if (fn == "exp") {
      if (!arg[0].is_zero()) throw Error(Errc::BadConstantTerm, "exp needs a zero constant term, got " + arg[0].str());
      return exp_series(arg);
    }
    if (fn == "log") {
      if (!arg[0].is_one()) throw Error(Errc::BadConstantTerm, "log needs constant term 1, got " + arg[0].str());
      return log_series(arg);
    }
    return scaled_root(arg, Rat(1, 2), "sqrt");
  }
};

}  // namespace

bool Expr::has_lambda() const {
  if (op == Op::Lambda) return true;
  return std::any_of(args.begin(), args.end(), [](const ExprPtr& a) { return a->has_lambda(); });
}

std::size_t Expr::depth() const {
  std::size_t d = 0;
  for (const auto& a : args) d = std::max(d, a->depth());
  return d + 1;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.op != b.op || !(a.value == b.value) || a.fn != b.fn || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

ExprPtr parse_expr(std::string_view src) { return Parser(src).parse(); }

std::string pretty(const Expr& e) {
  std::string out;
  print(e, 0, out);
  return out;
}

Series eval_expr(const Expr& e, std::size_t order, const LambdaMode& mode) {
  if (e.has_lambda() && mode.kind == LambdaMode::Kind::Absent)
    throw Error(Errc::LambdaModeRequired, "expression uses lambda; pass a lambda mode");
  std::size_t work = order;
  const std::size_t cap = 2 * order + 64;
  for (;;) {
    Series s = Evaluator(work, mode).eval(e);
    if (s.order() >= order) return s.truncated(order).demoted();
    std::size_t next = work + (order - s.order());
    if (next > cap)
      throw Error(Errc::InsufficientOrder, "cancellation in quotients exceeds the working order limit");
    work = next;
  }
}

DeltaSeries require_delta(const Series& s) { return DeltaSeries(s); }

}  // namespace dseries
