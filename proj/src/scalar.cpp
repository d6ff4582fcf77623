#include "redop/scalar.hpp"

#include <cctype>

namespace redop {

Scalar Scalar::pow2(long exponent) {
  Integer p = 1;
  p <<= (exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Scalar(Integer(1), p) : Scalar(p);
}

std::optional<Scalar> Scalar::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto read_int = [&]() -> std::optional<Integer> {
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      return std::nullopt;
    Integer value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      ++pos;
    }
    return negative ? Integer(-value) : value;
  };

  skip_ws();
  auto first = read_int();
  if (!first)
    return std::nullopt;
  skip_ws();
  if (pos < text.size() && text[pos] == '^') {
    ++pos;
    skip_ws();
    auto exp = read_int();
    if (!exp || *first != 2)
      return std::nullopt;
    skip_ws();
    if (pos != text.size())
      return std::nullopt;
    if (*exp < -100000 || *exp > 100000)
      return std::nullopt;
    return pow2(static_cast<long>(*exp));
  }
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    skip_ws();
    auto den = read_int();
    if (!den || *den == 0)
      return std::nullopt;
    skip_ws();
    if (pos != text.size())
      return std::nullopt;
    return Scalar(*first, *den);
  }
  skip_ws();
  if (pos != text.size())
    return std::nullopt;
  return Scalar(*first);
}

std::string Scalar::str() const {
  std::string out = numerator().str();
  if (!is_integer()) {
    out += '/';
    out += denominator().str();
  }
  return out;
}

} // namespace redop
