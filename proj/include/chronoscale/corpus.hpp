#pragma once

#include <string>
#include <vector>

#include "chronoscale/delta_calculus.hpp"

namespace chronoscale {

/**
 * Built-in test functions. Polynomial entries carry their exact mixed delta
 * derivative in terms of sigma1(x), sigma2(y); the transcendental entries
 * "sin(x)cos(y)" and "exp(x/4)y" are numeric-only.
 *
 * Labels: const, x, y, xy, x2y, x2y2, x+y, sin(x)cos(y), exp(x/4)y.
 */
std::vector<BivariateFunction> builtin_corpus();

/// Corpus entry by label; throws ConfigError on unknown labels.
BivariateFunction corpus_function(const std::string& label);

/// Wraps a parsed expression; the label is the source text and no exact
/// mixed derivative is attached. Throws ParseError on bad syntax.
BivariateFunction from_expression(const std::string& text);

/// Corpus label if it exists, otherwise a parsed expression.
BivariateFunction resolve_function(const std::string& label_or_expr);

}  // namespace chronoscale
