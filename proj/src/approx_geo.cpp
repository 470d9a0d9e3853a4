#include "burstkit/approx_geo.hpp"

#include "burstkit/viterbi.hpp"

namespace burstkit {

namespace {

void check_integral(const DelaySequence& delays) {
    if (!delays.all_integral()) throw DomainError("geometric model needs whole-number delays");
}

double upper_beta(const DelaySequence& delays) {
    const double mu = delays.stats().mean;
    return mu / (mu + 1.0 / static_cast<double>(delays.size()));
}

}  // namespace

ScanSchedule geo_beta_schedule(const DelaySequence& delays, double epsilon) {
    check_epsilon(epsilon);
    const double mu = delays.stats().mean;
    return ScanSchedule{mu / (mu + 1.0), upper_beta(delays), 1.0 + epsilon};
}

ScanSchedule geo_alpha_schedule(const DelaySequence& delays, int k, double epsilon) {
    check_epsilon(epsilon);
    if (k <= 0) return ScanSchedule{0.5, 0.0, 1.0 + epsilon};
    const double nk = static_cast<double>(delays.size()) * k;
    const double stop = std::pow(upper_beta(delays), epsilon / k);
    return ScanSchedule{1.0 / (1.0 + nk), stop, 1.0 + epsilon};
}

Solution geo_alpha(const DelaySequence& delays, double alpha, double gamma, int k,
                   double epsilon) {
    check_integral(delays);
    check_epsilon(epsilon);
    // Validates alpha, gamma and k before any work.
    const BurstParams probe = BurstParams::geometric(alpha, 0.0, gamma, k);

    if (delays.stats().mean == 0.0) {
        Solution sol;
        sol.levels = LevelSequence{std::vector<int>(delays.size(), 0), k};
        sol.alpha = alpha;
        sol.beta = 0.0;
        sol.score = score_total(sol.levels, delays, probe);
        return sol;
    }

    const ScanSchedule schedule = geo_beta_schedule(delays, epsilon);
    BestOf best;
    std::size_t calls = 0;
    for (std::size_t r = 0; schedule.contains(r); ++r) {
        const double beta = schedule.value(r);
        best.offer(viterbi(delays, BurstParams::geometric(alpha, beta, gamma, k)), beta);
        ++calls;
    }
    Solution sol = best.take();
    sol.viterbi_calls = calls;
    sol.diagnostics.beta_candidates = calls;
    return sol;
}

Solution approx_geo(const DelaySequence& delays, double gamma, int k, double epsilon) {
    check_integral(delays);
    check_epsilon(epsilon);

    BestOf best;
    std::size_t calls = 0;
    std::size_t beta_candidates = 0;
    std::size_t alpha_candidates = 1;

    auto probe = [&](double alpha) {
        Solution sol = geo_alpha(delays, alpha, gamma, k, epsilon);
        calls += sol.viterbi_calls;
        beta_candidates += sol.diagnostics.beta_candidates;
        best.offer(std::move(sol), alpha);
    };

    // Sequences with s_i l_i = 0 everywhere are best served by alpha = 0.
    probe(0.0);
    if (delays.stats().mean > 0.0) {
        const ScanSchedule schedule = geo_alpha_schedule(delays, k, epsilon);
        for (std::size_t r = 0; schedule.contains(r); ++r) {
            probe(schedule.value(r));
            ++alpha_candidates;
        }
    }

    Solution sol = best.take();
    sol.viterbi_calls = calls;
    sol.diagnostics.beta_candidates = beta_candidates;
    sol.diagnostics.alpha_candidates = alpha_candidates;
    return sol;
}

}  // namespace burstkit
