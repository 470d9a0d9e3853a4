#include "burstkit/oracle.hpp"

#include <algorithm>
#include <functional>

#include "burstkit/viterbi.hpp"

namespace burstkit {

Solution brute_force_viterbi(const DelaySequence& delays, const BurstParams& params,
                             std::size_t max_candidates) {
    const std::size_t n = delays.size();
    const auto base = static_cast<std::size_t>(params.k()) + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > max_candidates / base) throw CapacityError("too many level sequences to enumerate");
        total *= base;
    }

    // Digit i of the counter is l_{i+1}; the last level is the most
    // significant digit, so counting order is the tie-break order.
    LevelSequence levels{std::vector<int>(n, 0), params.k()};
    auto advance = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            if (++levels.levels[i] < static_cast<int>(base)) return;
            levels.levels[i] = 0;
        }
    };

    double best = kInfinity;
    for (std::size_t c = 0; c < total; ++c, advance()) best = std::min(best, score_total(levels, delays, params));
    if (std::isinf(best)) throw InfeasibleError("every level sequence has infinite score");

    std::fill(levels.levels.begin(), levels.levels.end(), 0);
    for (std::size_t c = 0; c < total; ++c, advance()) {
        const double sc = score_total(levels, delays, params);
        if (!detail::definitely_less(best, sc)) {
            Solution sol;
            sol.levels = levels;
            sol.alpha = params.alpha();
            sol.beta = params.beta();
            sol.score = sc;
            return sol;
        }
    }
    throw InfeasibleError("brute force lost its optimum");  // unreachable
}

namespace {

struct Axis {
    double lo = 0.0;
    double hi = 0.0;
    bool logarithmic = false;

    double at(std::size_t idx, std::size_t points) const {
        if (points <= 1 || lo == hi) return lo;
        const double t = static_cast<double>(idx) / static_cast<double>(points - 1);
        if (logarithmic) return std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
        return lo + t * (hi - lo);
    }

    Axis around(std::size_t idx, std::size_t points) const {
        return Axis{at(idx == 0 ? 0 : idx - 1, points), at(std::min(idx + 1, points - 1), points),
                    logarithmic};
    }
};

std::size_t odd(std::size_t p) { return p % 2 == 0 ? p + 1 : p; }

}  // namespace

GridResult grid_opt(const DelaySequence& delays, Family family, double gamma, int k,
                    std::optional<double> alpha, const GridOptions& options) {
    const std::size_t n = delays.size();
    const double mu = delays.stats().mean;
    GridResult result;

    if (family == Family::Exponential && !delays.all_positive())
        throw DomainError("exponential grid search needs strictly positive delays");
    if (family == Family::Geometric && mu == 0.0) {
        const double a = alpha.value_or(0.0);
        result.score = score_total(LevelSequence{std::vector<int>(n, 0), k}, delays,
                                   BurstParams::geometric(a, 0.0, gamma, k));
        result.alpha = a;
        return result;
    }

    // Beta range as a function of alpha; the grid walks a normalised
    // coordinate t in [0, 1] on a log scale inside it.
    auto beta_range = [&](double a) -> std::pair<double, double> {
        if (family == Family::Geometric)
            return {mu / (1.0 + mu), mu / (mu + 1.0 / static_cast<double>(n))};
        return {1.0 / (std::pow(a, k) * mu), 1.0 / mu};
    };

    Axis alpha_axis;
    if (alpha) {
        alpha_axis = Axis{*alpha, *alpha, false};
    } else if (family == Family::Geometric) {
        alpha_axis = Axis{0.0, 1.0 - 1e-9, false};
    } else {
        alpha_axis = Axis{1.0, delays.stats().max / delays.stats().min, true};
    }
    Axis t_axis{0.0, 1.0, false};

    auto evaluate = [&](double a, double t) {
        auto [lo, hi] = beta_range(a);
        const double beta = lo == hi ? lo : std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
        ++result.evaluations;
        try {
            const double sc = viterbi(delays, BurstParams(family, a, beta, gamma, k)).score;
            return std::make_pair(sc, beta);
        } catch (const InfeasibleError&) {
            return std::make_pair(kInfinity, beta);
        }
    };

    std::size_t a_points = alpha ? 1 : odd(options.alpha_points);
    std::size_t t_points = odd(options.beta_points);
    double previous = kInfinity;
    for (std::size_t round = 0; round < options.max_rounds; ++round) {
        std::size_t best_a = 0, best_t = 0;
        double round_best = kInfinity;
        for (std::size_t ia = 0; ia < a_points; ++ia) {
            const double a = alpha_axis.at(ia, a_points);
            for (std::size_t it = 0; it < t_points; ++it) {
                auto [sc, beta] = evaluate(a, t_axis.at(it, t_points));
                if (sc < round_best) {
                    round_best = sc;
                    best_a = ia;
                    best_t = it;
                }
                if (sc < result.score) {
                    result.score = sc;
                    result.alpha = a;
                    result.beta = beta;
                }
            }
        }
        result.rounds = round + 1;
        if (std::abs(previous - result.score) <= options.tolerance * std::max(1.0, std::abs(result.score)))
            break;
        previous = result.score;
        if (!alpha) alpha_axis = alpha_axis.around(best_a, a_points);
        t_axis = t_axis.around(best_t, t_points);
        if (!alpha) a_points = odd(options.refine_points);
        t_points = odd(options.refine_points);
    }
    return result;
}

}  // namespace burstkit
