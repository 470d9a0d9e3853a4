#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "burstkit/model.hpp"

namespace burstkit {

/// Optimal prefix scores o[i][j] (best score of s_1..s_i ending at level j)
/// and the predecessor level chosen for every cell. Row 0 encodes the
/// implicit starting level: o[0][0] = 0, o[0][j > 0] = +inf.
class DpTable {
public:
    DpTable(std::size_t n, int k);

    std::size_t n() const { return n_; }
    int k() const { return k_; }

    double& score(std::size_t i, int j) { return score_[index(i, j)]; }
    double score(std::size_t i, int j) const { return score_[index(i, j)]; }
    std::int32_t& back(std::size_t i, int j) { return back_[index(i, j)]; }
    std::int32_t back(std::size_t i, int j) const { return back_[index(i, j)]; }

    std::span<const double> row(std::size_t i) const {
        return {score_.data() + index(i, 0), static_cast<std::size_t>(k_) + 1};
    }

    /// Number of (i, j) cells written by the forward pass.
    std::size_t cell_updates = 0;

private:
    std::size_t index(std::size_t i, int j) const {
        return i * (static_cast<std::size_t>(k_) + 1) + static_cast<std::size_t>(j);
    }

    std::size_t n_;
    int k_;
    std::vector<double> score_;
    std::vector<std::int32_t> back_;
};

/// Best predecessor levels for one row transition.
///
/// down[j] is the smallest argmin of prev[x] over x >= j (moving down is free);
/// up[j] is the smallest argmin of prev[x] + (j - x) * unit over x <= j.
struct RowArgmins {
    std::vector<std::int32_t> down;
    std::vector<std::int32_t> up;
};

RowArgmins row_argmins(std::span<const double> prev, double unit);

/// Forward pass in O(nk) time.
DpTable fill_table(const DelaySequence& delays, const BurstParams& params);

/// Follows back pointers from the best final level; ties prefer the smaller level.
LevelSequence backtrace(const DpTable& table);

/// Optimal level sequence for fixed (alpha, beta). Ties are broken towards
/// smaller predecessor levels, so among equally good sequences the one that is
/// smallest when compared from the last level backwards is returned.
Solution viterbi(const DelaySequence& delays, const BurstParams& params);

}  // namespace burstkit
