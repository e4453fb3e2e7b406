#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "isaclab/dsl/ast.hpp"

namespace isaclab::dsl {

enum class ParseErrorKind { kLex, kSyntax, kUnknownFeature, kArity, kLimitExceeded };

struct ParseError {
  std::size_t position = 0;  // character offset into the source
  ParseErrorKind kind = ParseErrorKind::kSyntax;
  std::string message;
};

const char* parse_error_kind_name(ParseErrorKind kind);

struct ParseResult {
  std::optional<RewardExpr> expr;
  std::optional<ParseError> error;
  bool ok() const { return expr.has_value(); }
};

/// Parses an infix reward expression. Grammar, loosest to tightest
/// binding: add/sub < mul/div < pow (right-assoc) < unary minus.
/// Function-call syntax `name(args)`; `clip(x, lo, hi)` requires numeric
/// bounds. Never throws; all failures are reported as ParseError values.
ParseResult parse(std::string_view source);
ParseResult parse(std::string_view source, const std::vector<std::string>& feature_names);

}  // namespace isaclab::dsl
