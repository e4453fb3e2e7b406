#pragma once

#include "isaclab/dsl/ast.hpp"

namespace isaclab::dsl {

/// Naive scalarization baseline: rate/10 - log10(crb)/10. No
/// cross-magnitude calibration; the reference point trained agents are
/// compared against.
RewardExpr builtin_manual_reward();
const char* builtin_manual_reward_source();

struct NormalizedRewardParams {
  double rate_ref = 10.0;
  double c_ref = -4.0;   // reference log10(crb)
  double c_scale = 2.0;  // decades mapped to one reward unit
  double beta = 1.0;     // sensing weight
  double gamma = 1.0;    // power-overuse penalty weight
};

/// Magnitude-normalized trade-off reward:
///   clip((rate - rate_ref)/rate_ref - beta*(log10(crb) - c_ref)/c_scale
///        - gamma*max(0, power_ratio - 1), -10, 10)
/// Zero at rate = rate_ref, log10(crb) = c_ref, power_ratio <= 1. Used
/// as the offline stand-in for a service-designed reward.
RewardExpr builtin_normalized_reward();
RewardExpr builtin_normalized_reward(const NormalizedRewardParams& params);
std::string builtin_normalized_reward_source(const NormalizedRewardParams& params);

}  // namespace isaclab::dsl
