#include "redop/parse.hpp"

#include <algorithm>
#include <cctype>

namespace redop {

namespace {

class ExprParser {
public:
  ExprParser(std::string_view text, ContextPtr ctx, Precision precision,
             int line, int column)
      : text_(text), ctx_(std::move(ctx)), precision_(precision), line_(line),
        column_(column) {
    // Longest variable name first so juxtaposed words tokenize greedily.
    var_order_.resize(ctx_->variable_count());
    for (std::size_t i = 0; i < var_order_.size(); ++i)
      var_order_[i] = i;
    std::sort(var_order_.begin(), var_order_.end(), [this](std::size_t a, std::size_t b) {
      return ctx_->variables()[a].size() > ctx_->variables()[b].size();
    });
  }

  Series parse() {
    Series out = parse_expr();
    skip_ws();
    if (!eof())
      fail("unexpected trailing input");
    return out;
  }

private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
      advance();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  Series zero() const { return Series::zero(ctx_, precision_); }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  Series parse_expr() {
    skip_ws();
    Series out = zero();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      advance();
    }
    out = out + apply_sign(parse_term(), negative);
    while (true) {
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        advance();
        out = out + apply_sign(parse_term(), negative);
        continue;
      }
      break;
    }
    return out;
  }

  static Series apply_sign(const Series& s, bool negative) {
    return negative ? -s : s;
  }

  // term := factor (('*')? factor)*
  Series parse_term() {
    Series out = parse_factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        advance();
        out = out * parse_factor();
        continue;
      }
      if (starts_factor())
        out = out * parse_factor();
      else
        break;
    }
    return out;
  }

  bool starts_factor() {
    const char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
           match_variable_at(pos_).has_value();
  }

  // factor := primary ('^' nat)?
  Series parse_factor() {
    Series base = parse_primary();
    skip_ws();
    if (peek() == '^') {
      advance();
      skip_ws();
      if (peek() == '-')
        fail("negative exponents are not allowed");
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a natural number exponent");
      unsigned long long e = 0;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<unsigned long long>(peek() - '0');
        if (e > 1'000'000)
          fail("exponent too large");
        advance();
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  // primary := rational | variable | '(' expr ')'
  Series parse_primary() {
    skip_ws();
    if (eof())
      fail("unexpected end of expression");
    if (peek() == '(') {
      advance();
      Series inner = parse_expr();
      skip_ws();
      if (peek() != ')')
        fail("expected ')'");
      advance();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(peek())))
      return parse_rational();
    if (auto var = match_variable_at(pos_)) {
      consume_variable(*var);
      return Series::monomial(ctx_, ctx_->variable_monomial(*var), 1, precision_);
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      std::string name;
      std::size_t at = pos_;
      while (at < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[at])) || text_[at] == '_'))
        name += text_[at++];
      fail("unknown variable '" + name + "'");
    }
    fail("expected a rational, a variable or '('");
  }

  Series parse_rational() {
    Integer num = read_natural();
    skip_ws();
    if (peek() == '/') {
      // Only a division of integer literals is a rational; no other use of
      // '/' exists in the grammar.
      advance();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a denominator");
      Integer den = read_natural();
      if (den == 0)
        fail("zero denominator");
      return Series::constant(ctx_, Scalar(num, den), precision_);
    }
    return Series::constant(ctx_, Scalar(num), precision_);
  }

  Integer read_natural() {
    Integer out = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      out = out * 10 + (peek() - '0');
      advance();
    }
    return out;
  }

  std::optional<std::size_t> match_variable_at(std::size_t at) const {
    for (std::size_t idx : var_order_) {
      const std::string& name = ctx_->variables()[idx];
      if (text_.compare(at, name.size(), name) == 0)
        return idx;
    }
    return std::nullopt;
  }

  void consume_variable(std::size_t idx) {
    for (std::size_t i = 0; i < ctx_->variables()[idx].size(); ++i)
      advance();
  }

  std::string_view text_;
  ContextPtr ctx_;
  Precision precision_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
  std::vector<std::size_t> var_order_;
};

} // namespace

Series parse_series(std::string_view text, const ContextPtr& ctx,
                    Precision precision, int line, int column) {
  return ExprParser(text, ctx, precision, line, column).parse();
}

Monomial parse_monomial(std::string_view text, const ContextPtr& ctx) {
  Series s = parse_series(text, ctx);
  if (s.terms().size() != 1 || !s.terms().front().second.is_one())
    throw Error("expected a single monomial, got '" + std::string(text) + "'");
  return s.terms().front().first;
}

} // namespace redop
