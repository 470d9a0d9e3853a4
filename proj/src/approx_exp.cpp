#include "burstkit/approx_exp.hpp"

#include <algorithm>
#include <bit>

#include "burstkit/viterbi.hpp"

namespace burstkit {

namespace {

void check_positive(const DelaySequence& delays) {
    if (!delays.all_positive())
        throw DomainError(
            "exponential model with free beta needs strictly positive delays; "
            "shift the delays by a small amount or fix beta");
}

// Plain or pruned beta scan for alpha >= 1. alpha == 1 is reachable from
// approx_exp and collapses to a single candidate 1/mu.
Solution scan_beta(const DelaySequence& delays, double alpha, double gamma, int k,
                   double epsilon, bool prune) {
    if (prune) return prune_scan(delays, alpha, gamma, k, epsilon);

    const DescendingSchedule schedule = exp_beta_schedule(delays, alpha, k, epsilon);
    BestOf best;
    std::size_t calls = 0;
    for (std::size_t r = 0; schedule.contains(r); ++r) {
        const double beta = schedule.value(r);
        best.offer(viterbi(delays, BurstParams::exponential(alpha, beta, gamma, k)), beta);
        ++calls;
    }
    Solution sol = best.take();
    sol.viterbi_calls = calls;
    sol.diagnostics.beta_candidates = calls;
    return sol;
}

}  // namespace

double refit_beta(const DelaySequence& delays, const LevelSequence& levels, double alpha) {
    validate_levels(levels, delays.size(), levels.k);
    double f = 0.0;
    for (std::size_t i = 0; i < delays.size(); ++i) f += delays[i] * std::pow(alpha, levels[i]);
    if (!(f > 0.0)) throw DomainError("refit needs a positive weighted delay sum");
    return static_cast<double>(delays.size()) / f;
}

DescendingSchedule exp_beta_schedule(const DelaySequence& delays, double alpha, int k,
                                     double epsilon) {
    check_epsilon(epsilon);
    const double mu = delays.stats().mean;
    return DescendingSchedule{1.0 / mu, 1.0 / (std::pow(alpha, k) * mu), 1.0 + epsilon};
}

DescendingSchedule exp_alpha_schedule(const DelaySequence& delays, int k, double epsilon) {
    check_epsilon(epsilon);
    const double spread = delays.stats().max / delays.stats().min;
    if (k <= 0) return DescendingSchedule{spread, spread, 2.0};  // a single probe
    return DescendingSchedule{spread, 1.0, std::pow(1.0 + epsilon, 1.0 / (2.0 * k))};
}

std::vector<std::size_t> traversal_order(std::size_t t) {
    std::vector<std::size_t> order;
    if (t == 0) return order;
    order.reserve(t);
    std::vector<bool> seen(t, false);
    for (std::size_t stride = std::bit_floor(t); stride >= 1; stride /= 2) {
        for (std::size_t i = 0; i < t; i += stride) {
            if (!seen[i]) {
                seen[i] = true;
                order.push_back(i);
            }
        }
    }
    return order;
}

Solution exp_alpha(const DelaySequence& delays, double alpha, double gamma, int k, double epsilon,
                   bool prune) {
    if (!(alpha > 1.0) || !std::isfinite(alpha)) throw DomainError("exponential model needs alpha > 1");
    check_positive(delays);
    check_epsilon(epsilon);
    return scan_beta(delays, alpha, gamma, k, epsilon, prune);
}

Solution prune_scan(const DelaySequence& delays, double alpha, double gamma, int k,
                    double epsilon, PruneState* trace) {
    if (!(alpha >= 1.0) || !std::isfinite(alpha)) throw DomainError("exponential model needs alpha > 1");
    check_positive(delays);
    check_epsilon(epsilon);

    PruneState local;
    PruneState& st = trace ? *trace : local;
    st = PruneState{};
    st.candidates = exp_beta_schedule(delays, alpha, k, epsilon).candidates();
    const std::size_t t = st.candidates.size();
    st.visited.assign(t, false);
    st.skipped.assign(t, false);

    // Candidates are decreasing, so "beta_j < x" holds on a suffix.
    const auto& cand = st.candidates;
    auto first_below = [&](double x) {
        return static_cast<std::size_t>(
            std::partition_point(cand.begin(), cand.end(), [x](double b) { return b >= x; }) -
            cand.begin());
    };
    auto first_at_or_below = [&](double x) {
        return static_cast<std::size_t>(
            std::partition_point(cand.begin(), cand.end(), [x](double b) { return b > x; }) -
            cand.begin());
    };
    std::size_t skipped = 0;
    auto skip_range = [&](std::size_t lo, std::size_t hi) {  // [lo, hi)
        for (std::size_t j = lo; j < hi; ++j)
            if (!st.visited[j] && !st.skipped[j]) {
                st.skipped[j] = true;
                ++skipped;
            }
    };

    BestOf best;
    for (std::size_t i : traversal_order(t)) {
        if (st.visited[i] || st.skipped[i]) continue;
        st.visited[i] = true;
        const double beta = cand[i];
        Solution sol = viterbi(delays, BurstParams::exponential(alpha, beta, gamma, k));
        const double refit = refit_beta(delays, sol.levels, alpha);
        st.tested.push_back(i);
        st.refits.push_back(refit);
        best.offer(std::move(sol), beta);

        if (refit > beta) {
            // Strictly between: indices [first_below(refit), i). Keep the one
            // nearest the refit, the first of that range.
            const std::size_t lo = first_below(refit);
            if (lo < i) skip_range(lo + 1, i);
        } else if (refit < beta) {
            // Strictly between: indices (i, first_at_or_below(refit)). Keep the last.
            const std::size_t hi = first_at_or_below(refit);
            if (hi > i + 1) skip_range(i + 1, hi - 1);
        }
    }

    Solution sol = best.take();
    sol.viterbi_calls = st.tested.size();
    sol.diagnostics.beta_candidates = t;
    sol.diagnostics.skipped = skipped;
    return sol;
}

Solution approx_exp(const DelaySequence& delays, double gamma, int k, double epsilon,
                    bool prune_inner) {
    check_positive(delays);
    check_epsilon(epsilon);
    const DescendingSchedule schedule = exp_alpha_schedule(delays, k, epsilon);

    BestOf best;
    std::size_t calls = 0;
    std::size_t beta_candidates = 0;
    std::size_t alpha_candidates = 0;
    for (std::size_t r = 0; schedule.contains(r); ++r) {
        const double alpha = schedule.value(r);
        Solution sol = scan_beta(delays, alpha, gamma, k, epsilon / 2.0, prune_inner);
        calls += sol.viterbi_calls;
        beta_candidates += sol.diagnostics.beta_candidates;
        ++alpha_candidates;
        best.offer(std::move(sol), alpha);
    }

    Solution sol = best.take();
    sol.viterbi_calls = calls;
    sol.diagnostics.beta_candidates = beta_candidates;
    sol.diagnostics.alpha_candidates = alpha_candidates;
    return sol;
}

}  // namespace burstkit
