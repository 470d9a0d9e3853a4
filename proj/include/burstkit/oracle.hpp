#pragma once

#include <cstddef>
#include <optional>

#include "burstkit/model.hpp"

namespace burstkit {

inline constexpr std::size_t kMaxBruteForceCandidates = 10'000'000;

/// Exhaustive search over all (k+1)^n level sequences scored with
/// score_total. Among (near-)equal optima it returns the sequence that is
/// smallest when compared from the last level backwards, the same rule the
/// dynamic program follows.
Solution brute_force_viterbi(const DelaySequence& delays, const BurstParams& params,
                             std::size_t max_candidates = kMaxBruteForceCandidates);

struct GridOptions {
    std::size_t beta_points = 1001;
    std::size_t alpha_points = 301;    // ignored when alpha is fixed
    std::size_t refine_points = 21;    // per axis, after the first round
    double tolerance = 1e-6;           // stop once two rounds agree this closely
    std::size_t max_rounds = 40;
};

struct GridResult {
    double score = kInfinity;
    double alpha = 0.0;
    double beta = 0.0;
    std::size_t rounds = 0;
    std::size_t evaluations = 0;
};

/// Best fixed-parameter Viterbi score over an (alpha, beta) grid.
///
/// Beta spans the interval known to contain the optimum for each alpha:
/// [mu/(1+mu), mu/(mu+1/n)] (geometric) or [1/(alpha^k mu), 1/mu]
/// (exponential). A free alpha spans [0, 1) (geometric) or [1, max/min]
/// (exponential). After the first full grid the search zooms onto the best
/// cell until successive rounds agree within options.tolerance. The result
/// is always an upper bound on the true optimum.
GridResult grid_opt(const DelaySequence& delays, Family family, double gamma, int k,
                    std::optional<double> alpha, const GridOptions& options = {});

}  // namespace burstkit
