#include "burstkit/exact.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "burstkit/approx_exp.hpp"

namespace burstkit {

namespace {

int rise_budget(std::size_t n, int k) { return static_cast<int>(static_cast<std::size_t>(k) * (n + 1) / 2); }
int sum_budget(std::size_t n, int k) { return static_cast<int>(static_cast<std::size_t>(k) * n); }

}  // namespace

std::size_t bndburst_cells(std::size_t n, int k) {
    const auto levels = static_cast<std::size_t>(k) + 1;
    return (n + 1) * levels * (static_cast<std::size_t>(rise_budget(n, k)) + 1) *
           (static_cast<std::size_t>(sum_budget(n, k)) + 1);
}

BndBurstTable::BndBurstTable(std::size_t n, int k)
    : n_(n), k_(k), max_rise_(rise_budget(n, k)), max_sum_(sum_budget(n, k)),
      score_(bndburst_cells(n, k), kInfinity), back_(bndburst_cells(n, k), -1) {
    score(0, 0, 0, 0) = 0.0;
}

LevelSequence BndBurstTable::reconstruct(int j, int a, int b) const {
    if (std::isinf(score(n_, j, a, b))) throw InfeasibleError("cell has no level sequence");
    LevelSequence out{std::vector<int>(n_), k_};
    for (std::size_t i = n_; i >= 1; --i) {
        out.levels[i - 1] = j;
        const int prev = back(i, j, a, b);
        a -= std::max(0, j - prev);
        b -= j;
        j = prev;
    }
    return out;
}

BndBurstTable solve_bndburst(const DelaySequence& delays, double alpha, int k,
                             std::size_t max_cells) {
    if (!(alpha > 1.0) || !std::isfinite(alpha)) throw DomainError("exact solver needs alpha > 1");
    if (k < 0) throw DomainError("level cap k must be nonnegative");
    if (k > std::numeric_limits<std::int16_t>::max())
        throw CapacityError("level cap too large for the exact solver");
    if (!delays.all_positive())
        throw DomainError("exact solver needs strictly positive delays");
    const std::size_t n = delays.size();
    const std::size_t cells = bndburst_cells(n, k);
    if (cells > max_cells)
        throw CapacityError("exact table needs " + std::to_string(cells) + " cells (limit " +
                            std::to_string(max_cells) + ")");

    BndBurstTable table(n, k);
    std::vector<double> factor(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) factor[static_cast<std::size_t>(j)] = std::pow(alpha, j);

    const int max_rise = table.max_rise();
    for (std::size_t i = 1; i <= n; ++i) {
        const double s = delays[i - 1];
        // A prefix of length i cannot rise or sum beyond i * k.
        const int reach = std::min(table.max_sum(), static_cast<int>(i) * k);
        for (int j = 0; j <= k; ++j) {
            const double term = factor[static_cast<std::size_t>(j)] * s;
            for (int a = 0; a <= std::min(max_rise, reach); ++a) {
                for (int b = j; b <= reach; ++b) {
                    double best = kInfinity;
                    int arg = -1;
                    for (int jp = 0; jp <= k; ++jp) {
                        const int prev_a = a - std::max(0, j - jp);
                        if (prev_a < 0) continue;
                        const double v = table.score(i - 1, jp, prev_a, b - j);
                        if (detail::definitely_less(v, best)) {
                            best = v;
                            arg = jp;
                        }
                    }
                    if (arg < 0) continue;
                    table.score(i, j, a, b) = best + term;
                    table.back(i, j, a, b) = static_cast<std::int16_t>(arg);
                }
            }
        }
    }
    return table;
}

Solution solve_exp_alpha_exact(const DelaySequence& delays, double alpha, double gamma, int k,
                               std::size_t max_cells) {
    if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
    const BndBurstTable table = solve_bndburst(delays, alpha, k, max_cells);
    const std::size_t n = delays.size();
    const double nd = static_cast<double>(n);
    const double log_alpha = std::log(alpha);
    const double unit = detail::penalty_unit(gamma, n);

    auto cell_score = [&](double f, int a, int b) {
        const double beta = nd / f;
        return beta * f - nd * std::log(beta) - b * log_alpha + a * unit;
    };

    double best = kInfinity;
    int bj = -1, ba = -1, bb = -1;
    for (int j = 0; j <= k; ++j)
        for (int a = 0; a <= table.max_rise(); ++a)
            for (int b = 0; b <= table.max_sum(); ++b) {
                const double f = table.score(n, j, a, b);
                if (std::isinf(f)) continue;
                const double sc = cell_score(f, a, b);
                if (detail::definitely_less(sc, best)) {
                    best = sc;
                    bj = j;
                    ba = a;
                    bb = b;
                }
            }
    if (bj < 0) throw InfeasibleError("exact table has no finite final cell");

    std::size_t tied = 0;
    for (int j = 0; j <= k; ++j)
        for (int a = 0; a <= table.max_rise(); ++a)
            for (int b = 0; b <= table.max_sum(); ++b) {
                const double f = table.score(n, j, a, b);
                if (!std::isinf(f) && !detail::definitely_less(best, cell_score(f, a, b))) ++tied;
            }

    Solution sol;
    sol.levels = table.reconstruct(bj, ba, bb);
    sol.alpha = alpha;
    sol.beta = refit_beta(delays, sol.levels, alpha);
    double f = 0.0;
    for (std::size_t i = 0; i < n; ++i) f += delays[i] * std::pow(alpha, sol.levels[i]);
    sol.score = cell_score(f, ba, bb);
    sol.diagnostics.tied_cells = tied;
    return sol;
}

}  // namespace burstkit
