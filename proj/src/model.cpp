#include "burstkit/model.hpp"

#include <algorithm>
#include <string>

namespace burstkit {

namespace {

constexpr double kTieTolerance = 1e-12;

bool is_whole(double v) { return std::floor(v) == v; }

}  // namespace

std::string_view to_string(Family family) {
    return family == Family::Exponential ? "exp" : "geo";
}

Family parse_family(std::string_view name) {
    if (name == "exp") return Family::Exponential;
    if (name == "geo") return Family::Geometric;
    throw InputError("unknown model family '" + std::string(name) + "' (expected exp or geo)");
}

SequenceStats sequence_stats(std::span<const double> values) {
    if (values.empty()) throw DomainError("delay sequence must not be empty");
    SequenceStats st;
    double sum = 0.0;
    double log_sum = 0.0;
    bool positive = true;
    st.max = values.front();
    st.min = values.front();
    for (double v : values) {
        sum += v;
        st.max = std::max(st.max, v);
        st.min = std::min(st.min, v);
        if (v > 0.0)
            log_sum += std::log(v);
        else
            positive = false;
    }
    const auto n = static_cast<double>(values.size());
    st.mean = sum / n;
    if (positive) {
        st.geo_mean = std::exp(log_sum / n);
        st.psi = log_sum;
    }
    return st;
}

DelaySequence::DelaySequence(std::vector<double> values, DelayKind kind)
    : values_(std::move(values)), kind_(kind) {
    if (values_.empty()) throw DomainError("delay sequence must not be empty");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double v = values_[i];
        if (!std::isfinite(v) || v < 0.0)
            throw DomainError("delay " + std::to_string(i) + " is negative or not finite");
        if (kind_ == DelayKind::Integer && !is_whole(v))
            throw DomainError("delay " + std::to_string(i) + " is not a whole number");
    }
    stats_ = sequence_stats(values_);
}

DelaySequence DelaySequence::from_timestamps(std::span<const double> times, DelayKind kind) {
    if (times.size() < 2) throw InputError("at least two timestamps are needed");
    std::vector<double> delays;
    delays.reserve(times.size() - 1);
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (times[i] < times[i - 1])
            throw InputError("timestamps decrease at position " + std::to_string(i));
        delays.push_back(times[i] - times[i - 1]);
    }
    return DelaySequence(std::move(delays), kind);
}

bool DelaySequence::all_integral() const {
    return std::all_of(values_.begin(), values_.end(), is_whole);
}

BurstParams::BurstParams(Family family, double alpha, double beta, double gamma, int k)
    : family_(family), alpha_(alpha), beta_(beta), gamma_(gamma), k_(k) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be positive");
    if (k < 0) throw DomainError("level cap k must be nonnegative");
    if (family == Family::Exponential) {
        if (!(alpha >= 1.0) || !std::isfinite(alpha))
            throw DomainError("exponential model needs alpha >= 1");
        if (!(beta > 0.0) || !std::isfinite(beta))
            throw DomainError("exponential model needs beta > 0");
    } else {
        // With both in [0, 1) every level rate beta * alpha^l is below one.
        if (!(alpha >= 0.0 && alpha < 1.0))
            throw DomainError("geometric model needs 0 <= alpha < 1");
        if (!(beta >= 0.0 && beta < 1.0))
            throw DomainError("geometric model needs 0 <= beta < 1");
    }
}

double BurstParams::rate(int level) const { return level_rate(beta_, alpha_, level); }

double level_rate(double beta, double alpha, int level) {
    return level == 0 ? beta : beta * std::pow(alpha, level);
}

double neg_loglik_exp(double s, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("exponential rate must be positive");
    if (!(s >= 0.0)) throw DomainError("delay must be nonnegative");
    return detail::exp_term(s, lambda, std::log(lambda));
}

double neg_loglik_geo(double s, double lambda) {
    if (!(lambda >= 0.0 && lambda < 1.0)) throw DomainError("geometric rate must lie in [0, 1)");
    if (!(s >= 0.0) || !is_whole(s)) throw DomainError("geometric delay must be a whole number");
    return detail::geo_term(s, std::log1p(-lambda), std::log(lambda));
}

double penalty(int from, int to, double gamma, std::size_t n) {
    if (to <= from) return 0.0;
    return static_cast<double>(to - from) * detail::penalty_unit(gamma, n);
}

void validate_levels(const LevelSequence& levels, std::size_t n, int k) {
    if (levels.size() != n)
        throw DomainError("level sequence length " + std::to_string(levels.size()) +
                          " does not match delay count " + std::to_string(n));
    for (int l : levels.levels)
        if (l < 0 || l > k) throw DomainError("level " + std::to_string(l) + " outside [0, k]");
}

double score_total(const LevelSequence& levels, const DelaySequence& delays,
                   const BurstParams& params) {
    validate_levels(levels, delays.size(), params.k());
    const detail::LevelTerms terms(params);
    const std::size_t n = delays.size();
    double acc = 0.0;
    int prev = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int l = levels[i];
        acc = (acc + penalty(prev, l, params.gamma(), n)) + terms(delays[i], l);
        prev = l;
    }
    return acc;
}

namespace detail {

LevelTerms::LevelTerms(const BurstParams& params) : family_(params.family()) {
    const auto levels = static_cast<std::size_t>(params.k()) + 1;
    rate_.resize(levels);
    log_rate_.resize(levels);
    log1m_rate_.resize(levels);
    for (std::size_t j = 0; j < levels; ++j) {
        rate_[j] = params.rate(static_cast<int>(j));
        log_rate_[j] = std::log(rate_[j]);
        log1m_rate_[j] = family_ == Family::Geometric ? std::log1p(-rate_[j]) : 0.0;
    }
}

bool definitely_less(double a, double b) {
    if (a == b) return false;
    if (std::isinf(a) || std::isinf(b)) return a < b;
    return a < b - kTieTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace detail

}  // namespace burstkit
