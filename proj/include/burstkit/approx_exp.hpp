#pragma once

#include <cstddef>
#include <vector>

#include "burstkit/model.hpp"
#include "burstkit/scan.hpp"

namespace burstkit {

/// Base rate that best fits a fixed level sequence: n / sum_i s_i alpha^{l_i}.
double refit_beta(const DelaySequence& delays, const LevelSequence& levels, double alpha);

/// beta_i = (1/mu) (1 + eps)^-i while beta_i >= 1 / (alpha^k mu).
DescendingSchedule exp_beta_schedule(const DelaySequence& delays, double alpha, int k,
                                     double epsilon);

/// alpha_r = (max/min) (1 + eps)^(-r / 2k) while alpha_r >= 1.
DescendingSchedule exp_alpha_schedule(const DelaySequence& delays, int k, double epsilon);

/// Visiting order of t candidates: 0, 2^m, 2*2^m, ... then the odd multiples
/// of 2^(m-1), and so on down to stride 1, where 2^m <= t < 2^(m+1).
std::vector<std::size_t> traversal_order(std::size_t t);

/// Book-keeping of a pruned scan, exposed for inspection.
struct PruneState {
    std::vector<double> candidates;  // decreasing beta values
    std::vector<bool> visited;
    std::vector<bool> skipped;
    std::vector<std::size_t> tested;  // indices in test order
    std::vector<double> refits;       // refit beta of each test, same order
};

/// Exponential model with alpha given and beta optimised over the beta
/// schedule. The returned score S satisfies S - n log g <= (1 + eps)(OPT - n log g).
/// With `prune` set the scan skips candidates via refit_beta and returns the
/// same best score with fewer tests.
Solution exp_alpha(const DelaySequence& delays, double alpha, double gamma, int k, double epsilon,
                   bool prune = false);

/// Pruned beta scan. After testing beta_i with optimal sequence L, every
/// untested candidate strictly between beta_i and beta' = refit_beta(L) is
/// skipped, except the one closest to beta'. The score on that interval is
/// monotone towards beta', so the kept candidate dominates the skipped ones and
/// the best score equals the unpruned scan's.
Solution prune_scan(const DelaySequence& delays, double alpha, double gamma, int k,
                    double epsilon, PruneState* trace = nullptr);

/// Exponential model with alpha and beta both optimised: alpha walks down the
/// alpha schedule and each candidate runs exp_alpha with eps / 2.
Solution approx_exp(const DelaySequence& delays, double gamma, int k, double epsilon,
                    bool prune_inner = false);

}  // namespace burstkit
