#include "geocongest/postfix.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <utility>

namespace geocongest {

namespace {

constexpr std::pair<std::string_view, OpCode> kWords[] = {
    {"+", OpCode::Add},       {"-", OpCode::Sub},       {"*", OpCode::Mul},
    {"/", OpCode::Div},       {"^", OpCode::Pow},       {"sin", OpCode::Sin},
    {"cos", OpCode::Cos},     {"sinh", OpCode::Sinh},   {"cosh", OpCode::Cosh},
    {"exp", OpCode::Exp},     {"ln", OpCode::Ln},       {"sqrt", OpCode::Sqrt},
    {"acosh", OpCode::Acosh}, {"r", OpCode::Variable},
};

bool parse_literal(std::string_view word, double& out) {
  const char* first = word.data();
  const char* last = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

}  // namespace

std::string_view spelling(OpCode op) noexcept {
  for (const auto& [word, code] : kWords) {
    if (code == op) return word;
  }
  return "<literal>";
}

namespace detail {

void throw_domain(std::size_t index, OpCode op, std::string_view why) {
  throw Error(ErrorCode::DomainError, "token " + std::to_string(index) + " ('" +
                                          std::string(spelling(op)) + "'): " + std::string(why));
}

}  // namespace detail

RadialMap RadialMap::parse(std::string_view text) {
  RadialMap map;
  std::size_t depth = 0;
  std::size_t index = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view word = text.substr(pos, end - pos);
    pos = end;

    Token tok;
    bool known = false;
    for (const auto& [spelled, code] : kWords) {
      if (word == spelled) {
        tok.op = code;
        known = true;
        break;
      }
    }
    if (!known) {
      if (!parse_literal(word, tok.value)) {
        throw Error(ErrorCode::UnknownToken,
                    "token " + std::to_string(index) + " '" + std::string(word) + "'");
      }
      tok.op = OpCode::Literal;
    }

    const int needs = arity(tok.op);
    if (depth < static_cast<std::size_t>(needs)) {
      throw Error(ErrorCode::StackUnderflow, "token " + std::to_string(index) + " '" +
                                                 std::string(word) + "' needs " +
                                                 std::to_string(needs) + " operand(s)");
    }
    depth = depth - needs + 1;
    map.max_depth_ = std::max(map.max_depth_, depth);
    map.program_.push_back(tok);
    ++index;
  }
  if (depth == 0) throw Error(ErrorCode::StackUnderflow, "empty program");
  if (depth != 1) {
    throw Error(ErrorCode::LeftoverOperands,
                "program leaves " + std::to_string(depth) + " values on the stack");
  }
  return map;
}

std::string RadialMap::render() const {
  std::string out;
  char buf[32];
  for (const Token& tok : program_) {
    if (!out.empty()) out += ' ';
    if (tok.op == OpCode::Literal) {
      std::snprintf(buf, sizeof buf, "%.17g", tok.value);
      out += buf;
    } else {
      out += spelling(tok.op);
    }
  }
  return out;
}

}  // namespace geocongest
