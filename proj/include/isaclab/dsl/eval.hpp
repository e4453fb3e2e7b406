#pragma once

#include <optional>
#include <string>

#include "isaclab/dsl/ast.hpp"
#include "isaclab/dsl/feature_map.hpp"

namespace isaclab::dsl {

struct EvalError {
  std::string node_path;  // "root", "root.0.1", ... child indices from the root
  std::string message;
};

struct EvalResult {
  double value = 0.0;
  std::optional<EvalError> error;
  bool ok() const { return !error.has_value(); }
};

/// Strict evaluation: division by |den| < 1e-12, log of a non-positive
/// argument, or any non-finite intermediate is an EvalError, never a
/// NaN/inf result. Successful results are clipped to [-100, 100].
EvalResult evaluate(const RewardExpr& expr, const FeatureMap& features);

/// Render of a reward expression that reparses to a structurally
/// identical tree; defines the on-disk reward source format.
std::string print_canonical(const RewardExpr& expr);

}  // namespace isaclab::dsl
