/*
 * Copyright 2026 The trens authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TRENS_DISTRIBUTION_HPP
#define TRENS_DISTRIBUTION_HPP

#include <string>
#include <string_view>

namespace trens {

/// Reference distributions used as the target of transformation models.
/// All three have log-concave densities, which the pooling inequalities
/// rely on. The minimum extreme value CDF is F(z) = 1 - exp(-exp(z)).
enum class Target {
  Logistic,
  Normal,
  MinExtreme,
};

/// Parses "logistic" | "normal" | "mev" (as used in CLI flags and file
/// headers). Throws Error(InvalidInput) for anything else.
Target parse_target(std::string_view name);
std::string target_name(Target t);

/// F_Z(z). Requires finite z. Strictly increasing; values saturate to
/// 0/1 only where doubles cannot represent the tail.
double cdf_value(Target t, double z);

/// F_Z^{-1}(p) for p strictly inside (0, 1). p <= 0 or p >= 1 is a domain
/// error; callers that need boundary handling clamp before calling.
double quantile(Target t, double p);

/// log f_Z(z); finite for all finite z.
double log_density(Target t, double z);

/// f_Z(z) = exp(log_density).
double density(Target t, double z);

/// d/dz log f_Z(z); closed form for all three targets.
double log_density_derivative(Target t, double z);

/// Numerically stable expit/logit helpers for the logistic target, used
/// throughout the pooling and model code.
double expit(double z);
double logit(double p);

}  // namespace trens

#endif  // TRENS_DISTRIBUTION_HPP
