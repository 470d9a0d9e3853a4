#include "burstkit/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "burstkit/approx_exp.hpp"
#include "burstkit/approx_geo.hpp"
#include "burstkit/exact.hpp"
#include "burstkit/viterbi.hpp"

namespace burstkit::cli {

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::Fixed: return "fixed";
        case Mode::OptBeta: return "opt-beta";
        case Mode::OptBoth: return "opt-both";
        case Mode::Exact: return "exact";
        case Mode::Mean: return "mean";
    }
    return "?";
}

Mode parse_mode(std::string_view name) {
    for (Mode m : {Mode::Fixed, Mode::OptBeta, Mode::OptBoth, Mode::Exact, Mode::Mean})
        if (name == to_string(m)) return m;
    throw InputError("unknown mode '" + std::string(name) + "'");
}

Granularity parse_granularity(std::string_view name) {
    if (name == "seconds") return Granularity::Seconds;
    if (name == "minutes") return Granularity::Minutes;
    if (name == "days") return Granularity::Days;
    throw InputError("unknown granularity '" + std::string(name) + "'");
}

double seconds_per_unit(Granularity g) {
    switch (g) {
        case Granularity::Seconds: return 1.0;
        case Granularity::Minutes: return 60.0;
        case Granularity::Days: return 86400.0;
    }
    return 1.0;
}

void RunConfig::validate() const {
    const bool needs_alpha = mode != Mode::OptBoth;
    if (needs_alpha && !alpha)
        throw InputError("mode " + std::string(to_string(mode)) + " needs --alpha");
    if (mode == Mode::Fixed && !beta) throw InputError("mode fixed needs --beta");
    if (mode == Mode::Exact && model != Family::Exponential)
        throw InputError("mode exact is only available for --model exp");
    if (shift_delays && !(*shift_delays >= 0.0)) throw InputError("--shift-delays must be nonnegative");
}

std::vector<SegmentRun> run_length(const LevelSequence& levels) {
    std::vector<SegmentRun> runs;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (runs.empty() || runs.back().level != levels[i])
            runs.push_back({i, i + 1, levels[i]});
        else
            runs.back().end = i + 1;
    }
    return runs;
}

LevelSequence expand(const std::vector<SegmentRun>& runs, int k) {
    LevelSequence out{{}, k};
    for (const auto& r : runs) {
        if (r.start != out.size() || r.end < r.start) throw InputError("segments do not tile the sequence");
        out.levels.insert(out.levels.end(), r.end - r.start, r.level);
    }
    return out;
}

std::vector<double> parse_values(std::istream& in) {
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        const char* begin = line.data() + first;
        const char* end = line.data() + last + 1;
        if (*begin == '+') ++begin;
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || ptr != end || !std::isfinite(v))
            throw InputError("line " + std::to_string(lineno) + ": not a number: '" + line + "'");
        values.push_back(v);
    }
    return values;
}

namespace {

bool optimises_beta(Mode mode) {
    return mode == Mode::OptBeta || mode == Mode::OptBoth || mode == Mode::Exact;
}

}  // namespace

DelaySequence to_delays(const std::vector<double>& values, const RunConfig& config) {
    std::vector<double> delays;
    if (config.timestamps) {
        if (values.size() < 2) throw InputError("need at least two timestamps");
        const double unit = seconds_per_unit(config.granularity);
        std::vector<double> ticks;
        ticks.reserve(values.size());
        for (double t : values) ticks.push_back(std::floor(t / unit));
        for (std::size_t i = 1; i < ticks.size(); ++i) {
            if (values[i] < values[i - 1])
                throw InputError("timestamps decrease at line " + std::to_string(i + 1));
            delays.push_back(ticks[i] - ticks[i - 1]);
        }
    } else {
        delays = values;
    }
    if (delays.empty()) throw InputError("input holds no delays");
    for (double d : delays)
        if (d < 0.0) throw InputError("delays must be nonnegative");
    if (config.shift_delays)
        for (double& d : delays) d += *config.shift_delays;

    if (config.model == Family::Exponential && optimises_beta(config.mode)) {
        for (double d : delays)
            if (d == 0.0)
                throw DomainError(
                    "a zero delay makes the exponential model with optimised beta ill-defined; "
                    "shift the delays by a small amount (--shift-delays)");
    }
    if (config.model == Family::Geometric) {
        for (double d : delays)
            if (std::floor(d) != d) throw InputError("geometric model needs whole-number delays");
        return DelaySequence(std::move(delays), DelayKind::Integer);
    }
    return DelaySequence(std::move(delays), DelayKind::Real);
}

DelaySequence ingest(const std::filesystem::path& path, const RunConfig& config) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file " + path.string());
    return to_delays(parse_values(in), config);
}

RunResult solve(const DelaySequence& delays, const RunConfig& config) {
    config.validate();
    const auto started = std::chrono::steady_clock::now();
    const bool exp = config.model == Family::Exponential;
    const double mu = delays.stats().mean;

    Solution sol;
    switch (config.mode) {
        case Mode::Fixed:
            sol = viterbi(delays, BurstParams(config.model, *config.alpha, *config.beta, config.gamma, config.k));
            break;
        case Mode::Mean: {
            if (exp && !(mu > 0.0)) throw DomainError("mean delay is zero; beta = 1/mu is undefined");
            const double beta = exp ? 1.0 / mu : mu / (mu + 1.0);
            sol = viterbi(delays, BurstParams(config.model, *config.alpha, beta, config.gamma, config.k));
            break;
        }
        case Mode::OptBeta:
            sol = exp ? exp_alpha(delays, *config.alpha, config.gamma, config.k, config.epsilon, config.prune)
                      : geo_alpha(delays, *config.alpha, config.gamma, config.k, config.epsilon);
            break;
        case Mode::OptBoth:
            sol = exp ? approx_exp(delays, config.gamma, config.k, config.epsilon, config.prune)
                      : approx_geo(delays, config.gamma, config.k, config.epsilon);
            break;
        case Mode::Exact:
            if (delays.size() > config.max_exact_n)
                throw CapacityError("exact mode is limited to n <= " + std::to_string(config.max_exact_n) +
                                    " (got " + std::to_string(delays.size()) + ")");
            sol = solve_exp_alpha_exact(delays, *config.alpha, config.gamma, config.k);
            break;
    }
    const auto elapsed = std::chrono::steady_clock::now() - started;
    BurstParams params(config.model, sol.alpha, sol.beta, config.gamma, config.k);
    return RunResult{std::move(sol), params,
                     std::chrono::duration<double, std::milli>(elapsed).count()};
}

double round12(double v) {
    if (!std::isfinite(v)) return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

void write_levels_tsv(std::ostream& out, const LevelSequence& levels) {
    out << "index\tlevel\n";
    for (std::size_t i = 0; i < levels.size(); ++i) out << i << '\t' << levels[i] << '\n';
}

void write_segments_tsv(std::ostream& out, const std::vector<SegmentRun>& runs) {
    out << "start\tend\tlevel\n";
    for (const auto& r : runs) out << r.start << '\t' << r.end << '\t' << r.level << '\n';
}

std::string summary_json(const RunResult& result, const RunConfig& config, std::size_t n) {
    const Solution& sol = result.solution;
    nlohmann::json j;
    j["model"] = std::string(to_string(config.model));
    j["mode"] = std::string(to_string(config.mode));
    j["n"] = n;
    j["k"] = config.k;
    j["gamma"] = round12(config.gamma);
    j["epsilon"] = round12(config.epsilon);
    j["alpha"] = round12(sol.alpha);
    j["beta"] = round12(sol.beta);
    if (std::isfinite(sol.score))
        j["score"] = round12(sol.score);
    else
        j["score"] = nullptr;
    j["viterbi_calls"] = sol.viterbi_calls;
    j["beta_candidates"] = sol.diagnostics.beta_candidates;
    j["alpha_candidates"] = sol.diagnostics.alpha_candidates;
    j["skipped"] = sol.diagnostics.skipped;
    j["runtime_ms"] = round12(result.runtime_ms);
    return j.dump(2);
}

RunResult run(const RunConfig& config) {
    config.validate();
    const DelaySequence delays = ingest(config.input, config);
    RunResult result = solve(delays, config);

    std::filesystem::create_directories(config.out_dir);
    auto open = [&](const char* name) {
        std::ofstream out(config.out_dir / name);
        if (!out) throw InputError("cannot write " + (config.out_dir / name).string());
        return out;
    };
    {
        auto out = open("levels.tsv");
        write_levels_tsv(out, result.solution.levels);
    }
    {
        auto out = open("segments.tsv");
        write_segments_tsv(out, run_length(result.solution.levels));
    }
    {
        auto out = open("summary.json");
        out << summary_json(result, config, delays.size()) << '\n';
    }
    return result;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const InputError*>(&e)) return 3;
    if (dynamic_cast<const DomainError*>(&e)) return 4;
    if (dynamic_cast<const InfeasibleError*>(&e)) return 5;
    if (dynamic_cast<const CapacityError*>(&e)) return 6;
    return 1;
}

}  // namespace burstkit::cli
