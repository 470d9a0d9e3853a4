#include "burstkit/scan.hpp"

#include <cmath>

namespace burstkit {

namespace {

// Any schedule longer than this is a symptom of a degenerate range.
constexpr std::size_t kMaxCandidates = std::size_t{1} << 28;

template <class Schedule>
std::size_t count(const Schedule& s) {
    std::size_t r = 0;
    while (s.contains(r)) {
        if (++r > kMaxCandidates) throw CapacityError("scan schedule does not terminate");
    }
    return r;
}

template <class Schedule>
std::vector<double> materialize(const Schedule& s) {
    std::vector<double> out;
    for (std::size_t r = 0; s.contains(r); ++r) {
        if (r > kMaxCandidates) throw CapacityError("scan schedule does not terminate");
        out.push_back(s.value(r));
    }
    return out;
}

}  // namespace

double ScanSchedule::value(std::size_t r) const {
    return std::pow(base, std::pow(ratio, -static_cast<double>(r)));
}

std::size_t ScanSchedule::size() const { return count(*this); }
std::vector<double> ScanSchedule::candidates() const { return materialize(*this); }

double DescendingSchedule::value(std::size_t r) const {
    return start * std::pow(ratio, -static_cast<double>(r));
}

std::size_t DescendingSchedule::size() const { return count(*this); }
std::vector<double> DescendingSchedule::candidates() const { return materialize(*this); }

void BestOf::offer(Solution candidate, double parameter) {
    const bool better = !has_ || detail::definitely_less(candidate.score, best_.score) ||
                        (!detail::definitely_less(best_.score, candidate.score) &&
                         parameter < parameter_);
    if (better) {
        best_ = std::move(candidate);
        parameter_ = parameter;
        has_ = true;
    }
}

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be positive");
}

}  // namespace burstkit
