#pragma once

#include <string_view>

#include "redop/series.hpp"

namespace redop {

/// Parses the expression grammar shared by the CLI and problem files:
/// rationals `p/q`, variables of the context, `^` for powers, `*` or
/// juxtaposition for products, `+`/`-` for sums; noncommutative words
/// concatenate left to right and whitespace is insignificant.
///
/// Positions in errors are 1-based; `line` and `column` locate the first
/// character of `text` inside the enclosing document.
Series parse_series(std::string_view text, const ContextPtr& ctx,
                    Precision precision = std::nullopt, int line = 1,
                    int column = 1);

/// Parses a single monomial (a word or a commutative power product).
Monomial parse_monomial(std::string_view text, const ContextPtr& ctx);

} // namespace redop
