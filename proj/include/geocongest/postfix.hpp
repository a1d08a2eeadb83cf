#ifndef GEOCONGEST_POSTFIX_HPP
#define GEOCONGEST_POSTFIX_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geocongest/error.hpp"

namespace geocongest {

enum class OpCode : std::uint8_t {
  Literal,
  Variable,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Sin,
  Cos,
  Sinh,
  Cosh,
  Exp,
  Ln,
  Sqrt,
  Acosh,
};

struct Token {
  OpCode op = OpCode::Literal;
  double value = 0.0;  // literals only

  bool operator==(const Token&) const = default;
};

constexpr int arity(OpCode op) noexcept {
  switch (op) {
    case OpCode::Literal:
    case OpCode::Variable:
      return 0;
    case OpCode::Add:
    case OpCode::Sub:
    case OpCode::Mul:
    case OpCode::Div:
    case OpCode::Pow:
      return 2;
    default:
      return 1;
  }
}

std::string_view spelling(OpCode op) noexcept;

/// A single-variable function of `r` written in postfix notation.
///
/// Programs are validated at parse time by abstract evaluation of the stack
/// depth, so evaluation never underflows. Evaluation is templated on the
/// scalar so callers can run the same program in `long double` when
/// checking accuracy.
class RadialMap {
 public:
  RadialMap() = default;

  /// Parses whitespace-separated tokens. Throws UnknownToken, StackUnderflow
  /// or LeftoverOperands.
  static RadialMap parse(std::string_view text);

  template <typename Scalar>
  Scalar operator()(Scalar r) const;

  /// Canonical text: tokens joined by single spaces, literals at 17
  /// significant digits so the text parses back to the same program.
  std::string render() const;

  std::span<const Token> program() const noexcept { return program_; }
  std::size_t max_depth() const noexcept { return max_depth_; }

  bool operator==(const RadialMap& other) const { return program_ == other.program_; }

 private:
  std::vector<Token> program_;
  std::size_t max_depth_ = 0;
};

inline RadialMap parse_radial_map(std::string_view text) { return RadialMap::parse(text); }

/// Evaluates `map` at x >= 0. Throws DomainError naming the offending token.
inline double eval_radial_map(const RadialMap& map, double x) { return map(x); }

namespace detail {

[[noreturn]] void throw_domain(std::size_t index, OpCode op, std::string_view why);

template <typename Scalar, typename Stack>
Scalar run_program(std::span<const Token> program, Scalar r, Stack& stack) {
  using std::acosh;
  using std::cos;
  using std::cosh;
  using std::exp;
  using std::isfinite;
  using std::log;
  using std::pow;
  using std::sin;
  using std::sinh;
  using std::sqrt;

  std::size_t top = 0;
  for (std::size_t i = 0; i < program.size(); ++i) {
    const Token& tok = program[i];
    Scalar result{};
    switch (tok.op) {
      case OpCode::Literal:
        stack[top++] = static_cast<Scalar>(tok.value);
        continue;
      case OpCode::Variable:
        stack[top++] = r;
        continue;
      case OpCode::Add:
      case OpCode::Sub:
      case OpCode::Mul:
      case OpCode::Div:
      case OpCode::Pow: {
        const Scalar rhs = stack[--top];
        const Scalar lhs = stack[--top];
        switch (tok.op) {
          case OpCode::Add: result = lhs + rhs; break;
          case OpCode::Sub: result = lhs - rhs; break;
          case OpCode::Mul: result = lhs * rhs; break;
          case OpCode::Div:
            if (rhs == Scalar(0)) throw_domain(i, tok.op, "division by zero");
            result = lhs / rhs;
            break;
          default:
            result = (lhs == Scalar(0) && rhs == Scalar(0)) ? Scalar(1) : pow(lhs, rhs);
            break;
        }
        break;
      }
      default: {
        const Scalar arg = stack[--top];
        switch (tok.op) {
          case OpCode::Sin: result = sin(arg); break;
          case OpCode::Cos: result = cos(arg); break;
          case OpCode::Sinh: result = sinh(arg); break;
          case OpCode::Cosh: result = cosh(arg); break;
          case OpCode::Exp: result = exp(arg); break;
          case OpCode::Ln:
            if (!(arg > Scalar(0))) throw_domain(i, tok.op, "argument must be positive");
            result = log(arg);
            break;
          case OpCode::Sqrt:
            if (arg < Scalar(0)) throw_domain(i, tok.op, "argument must be non-negative");
            result = sqrt(arg);
            break;
          case OpCode::Acosh:
            if (!(arg >= Scalar(1))) throw_domain(i, tok.op, "argument must be >= 1");
            result = acosh(arg);
            break;
          default:
            break;
        }
        break;
      }
    }
    if (!isfinite(result)) throw_domain(i, tok.op, "result is not finite");
    stack[top++] = result;
  }
  return stack[0];
}

}  // namespace detail

template <typename Scalar>
Scalar RadialMap::operator()(Scalar r) const {
  if (!(r >= Scalar(0))) {
    throw Error(ErrorCode::DomainError, "radial map evaluated at a negative radius");
  }
  constexpr std::size_t kInline = 16;
  if (max_depth_ <= kInline) {
    std::array<Scalar, kInline> stack{};
    return detail::run_program(std::span<const Token>(program_), r, stack);
  }
  std::vector<Scalar> stack(max_depth_);
  return detail::run_program(std::span<const Token>(program_), r, stack);
}

}  // namespace geocongest

#endif  // GEOCONGEST_POSTFIX_HPP
