#pragma once

#include "burstkit/model.hpp"
#include "burstkit/scan.hpp"

namespace burstkit {

/// Base rates tested for the geometric model with alpha fixed:
/// eta^c for eta = mu / (mu + 1), stopping once the value exceeds mu / (mu + 1/n).
ScanSchedule geo_beta_schedule(const DelaySequence& delays, double epsilon);

/// Change rates tested when alpha is free: eta^c for eta = 1 / (1 + nk),
/// stopping at sigma^(eps/k) with sigma = mu / (mu + 1/n). Empty when k == 0.
ScanSchedule geo_alpha_schedule(const DelaySequence& delays, int k, double epsilon);

/// (1 + eps)-approximation of the geometric model with alpha given and beta
/// optimised. A sequence of zero delays returns the flat solution with beta = 0.
Solution geo_alpha(const DelaySequence& delays, double alpha, double gamma, int k,
                   double epsilon);

/// (1 + eps)-approximation with both alpha and beta optimised. alpha = 0 is
/// probed first, then the alpha schedule, each through geo_alpha.
Solution approx_geo(const DelaySequence& delays, double gamma, int k, double epsilon);

}  // namespace burstkit
