#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "burstkit/model.hpp"

namespace burstkit {

/// Upper bound on table cells accepted by solve_bndburst by default.
inline constexpr std::size_t kMaxExactCells = std::size_t{1} << 24;

/// Budgeted burst table: cell (i, j, a, b) holds the smallest
/// sum_{x <= i} alpha^{l_x} s_x over prefixes with l_i = j, a total rise of a
/// and a level sum of b (+inf if no prefix qualifies).
///
/// a ranges over [0, k(n+1)/2] and b over [0, kn]; every optimal level
/// sequence of the unconstrained problem falls inside these budgets.
class BndBurstTable {
public:
    BndBurstTable(std::size_t n, int k);

    std::size_t n() const { return n_; }
    int k() const { return k_; }
    int max_rise() const { return max_rise_; }
    int max_sum() const { return max_sum_; }
    std::size_t cells() const { return score_.size(); }

    double score(std::size_t i, int j, int a, int b) const { return score_[index(i, j, a, b)]; }
    double& score(std::size_t i, int j, int a, int b) { return score_[index(i, j, a, b)]; }
    std::int16_t back(std::size_t i, int j, int a, int b) const { return back_[index(i, j, a, b)]; }
    std::int16_t& back(std::size_t i, int j, int a, int b) { return back_[index(i, j, a, b)]; }

    /// Level sequence realising the finite cell (n, j, a, b).
    LevelSequence reconstruct(int j, int a, int b) const;

private:
    std::size_t index(std::size_t i, int j, int a, int b) const {
        return ((i * (static_cast<std::size_t>(k_) + 1) + static_cast<std::size_t>(j)) *
                    (static_cast<std::size_t>(max_rise_) + 1) +
                static_cast<std::size_t>(a)) *
                   (static_cast<std::size_t>(max_sum_) + 1) +
               static_cast<std::size_t>(b);
    }

    std::size_t n_;
    int k_;
    int max_rise_;
    int max_sum_;
    std::vector<double> score_;
    std::vector<std::int16_t> back_;
};

/// Number of cells solve_bndburst would allocate for (n, k).
std::size_t bndburst_cells(std::size_t n, int k);

/// Fills the whole budgeted table in O(n^3 k^4) time.
BndBurstTable solve_bndburst(const DelaySequence& delays, double alpha, int k,
                             std::size_t max_cells = kMaxExactCells);

/// Exact optimum of the exponential model with alpha fixed and beta free.
///
/// Every finite final cell fixes the rise count d = a and level sum m = b; the
/// best beta for its sequence is n / f with f the cell value, giving the score
/// beta f - n log beta - m log alpha + d gamma log n. The first minimum in
/// (j, a, b) order wins; the number of tying cells lands in diagnostics.
Solution solve_exp_alpha_exact(const DelaySequence& delays, double alpha, double gamma, int k,
                               std::size_t max_cells = kMaxExactCells);

}  // namespace burstkit
