#include "burstkit/viterbi.hpp"

namespace burstkit {

namespace {

void fill_argmins(std::span<const double> prev, double unit, std::span<std::int32_t> down,
                  std::span<std::int32_t> up) {
    const auto k = static_cast<std::int32_t>(prev.size()) - 1;

    down[k] = k;
    for (std::int32_t j = k - 1; j >= 0; --j) {
        const std::int32_t above = down[j + 1];
        down[j] = detail::definitely_less(prev[above], prev[j]) ? above : j;
    }

    // The rise penalty is linear, so the best x <= j is either j itself or
    // the best x <= j - 1 carried one more level up.
    up[0] = 0;
    for (std::int32_t j = 1; j <= k; ++j) {
        const std::int32_t below = up[j - 1];
        const double carried = prev[below] + static_cast<double>(j - below) * unit;
        up[j] = detail::definitely_less(prev[j], carried) ? j : below;
    }
}

void check_delays(const DelaySequence& delays, const BurstParams& params) {
    if (params.family() == Family::Geometric && !delays.all_integral())
        throw DomainError("geometric model needs whole-number delays");
}

}  // namespace

DpTable::DpTable(std::size_t n, int k)
    : n_(n), k_(k),
      score_((n + 1) * (static_cast<std::size_t>(k) + 1), kInfinity),
      back_((n + 1) * (static_cast<std::size_t>(k) + 1), -1) {
    score(0, 0) = 0.0;
}

RowArgmins row_argmins(std::span<const double> prev, double unit) {
    if (prev.empty()) throw DomainError("row must have at least one level");
    RowArgmins out{std::vector<std::int32_t>(prev.size()), std::vector<std::int32_t>(prev.size())};
    fill_argmins(prev, unit, out.down, out.up);
    return out;
}

DpTable fill_table(const DelaySequence& delays, const BurstParams& params) {
    check_delays(delays, params);
    const std::size_t n = delays.size();
    const int k = params.k();
    const double unit = detail::penalty_unit(params.gamma(), n);
    const detail::LevelTerms terms(params);

    DpTable table(n, k);
    std::vector<std::int32_t> down(static_cast<std::size_t>(k) + 1);
    std::vector<std::int32_t> up(static_cast<std::size_t>(k) + 1);

    for (std::size_t i = 1; i <= n; ++i) {
        const auto prev = table.row(i - 1);
        fill_argmins(prev, unit, down, up);
        const double s = delays[i - 1];
        for (int j = 0; j <= k; ++j) {
            const std::int32_t a = down[static_cast<std::size_t>(j)];
            const std::int32_t b = up[static_cast<std::size_t>(j)];
            const double stay_or_fall = prev[static_cast<std::size_t>(a)];
            const double rise = prev[static_cast<std::size_t>(b)] + static_cast<double>(j - b) * unit;
            // b <= j <= a, so preferring b on ties keeps the smaller predecessor.
            const bool take_down = detail::definitely_less(stay_or_fall, rise);
            table.score(i, j) = (take_down ? stay_or_fall : rise) + terms(s, j);
            table.back(i, j) = take_down ? a : b;
            ++table.cell_updates;
        }
    }
    return table;
}

LevelSequence backtrace(const DpTable& table) {
    const std::size_t n = table.n();
    const int k = table.k();
    int best = 0;
    for (int j = 1; j <= k; ++j)
        if (detail::definitely_less(table.score(n, j), table.score(n, best))) best = j;
    if (std::isinf(table.score(n, best)))
        throw InfeasibleError("every level sequence has infinite score");

    LevelSequence out{std::vector<int>(n), k};
    int level = best;
    for (std::size_t i = n; i >= 1; --i) {
        out.levels[i - 1] = level;
        level = table.back(i, level);
    }
    return out;
}

Solution viterbi(const DelaySequence& delays, const BurstParams& params) {
    const DpTable table = fill_table(delays, params);
    Solution sol;
    sol.levels = backtrace(table);
    sol.alpha = params.alpha();
    sol.beta = params.beta();
    sol.score = table.score(table.n(), sol.levels.levels.back());
    sol.viterbi_calls = 1;
    return sol;
}

}  // namespace burstkit
