#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace isaclab::dsl {

/// The fixed set of scalar environment features a reward expression may
/// reference. Values are validated (finite, ranges) by `validate()`.
struct FeatureMap {
  double rate = 0.0;           // bits/s/Hz
  double crb = 1.0;            // rad^2, clamped to (0, crb_cap]
  double log10_crb = 0.0;
  double min_user_rate = 0.0;  // bits/s/Hz
  double power_used = 0.0;     // W
  double power_budget = 1.0;   // W
  double power_ratio = 0.0;    // power_used / power_budget, in [0, 1]
  double step_frac = 0.0;      // in [0, 1]

  static const std::vector<std::string>& names();
  static bool is_feature(std::string_view name);

  bool contains(std::string_view name) const { return is_feature(name); }
  double get(std::string_view name) const;  // throws std::out_of_range
  std::map<std::string, double> as_map() const;

  /// Throws std::invalid_argument on a violated invariant.
  void validate() const;
};

}  // namespace isaclab::dsl
