#pragma once

#include <cstddef>
#include <vector>

#include "burstkit/model.hpp"

namespace burstkit {

/// Upward scan over base^c with c = 1, 1/(1+eps), 1/(1+eps)^2, ...
///
/// For base in (0, 1) the candidates strictly increase towards 1; the scan
/// keeps every candidate that does not exceed `stop`.
struct ScanSchedule {
    double base = 0.0;
    double stop = 0.0;
    double ratio = 1.0;  // 1 + eps

    double value(std::size_t r) const;
    bool contains(std::size_t r) const { return value(r) <= stop; }
    std::size_t size() const;
    std::vector<double> candidates() const;
};

/// Downward scan start, start/ratio, start/ratio^2, ... kept while >= floor.
struct DescendingSchedule {
    double start = 0.0;
    double floor = 0.0;
    double ratio = 1.0;

    double value(std::size_t r) const;
    bool contains(std::size_t r) const { return value(r) >= floor; }
    std::size_t size() const;
    std::vector<double> candidates() const;
};

/// Running best-of over scanned candidates. Equal scores (up to round-off)
/// go to the smaller parameter value, independent of visiting order.
class BestOf {
public:
    void offer(Solution candidate, double parameter);
    bool empty() const { return !has_; }
    const Solution& best() const { return best_; }
    Solution take() { return std::move(best_); }

private:
    Solution best_;
    double parameter_ = 0.0;
    bool has_ = false;
};

void check_epsilon(double epsilon);

}  // namespace burstkit
