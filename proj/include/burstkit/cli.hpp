#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burstkit/model.hpp"

namespace burstkit::cli {

enum class Mode {
    Fixed,    // alpha and beta given
    OptBeta,  // alpha given, beta optimised
    OptBoth,  // alpha and beta optimised
    Exact,    // exponential, alpha given, exact dynamic program
    Mean,     // baseline: alpha given, beta derived from the mean delay
};

enum class Granularity { Seconds, Minutes, Days };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view name);
Granularity parse_granularity(std::string_view name);
double seconds_per_unit(Granularity g);

struct RunConfig {
    Family model = Family::Exponential;
    Mode mode = Mode::OptBeta;
    std::optional<double> alpha;
    std::optional<double> beta;
    double gamma = 1.0;
    int k = 4;
    double epsilon = 0.05;
    bool prune = false;
    std::optional<double> shift_delays;
    bool timestamps = false;
    Granularity granularity = Granularity::Seconds;
    std::size_t max_exact_n = 64;
    std::uint64_t seed = 0;
    std::filesystem::path input;
    std::filesystem::path out_dir = ".";

    /// Throws InputError when a parameter required by the mode is missing.
    void validate() const;
};

/// A maximal run of equal levels over [start, end).
struct SegmentRun {
    std::size_t start = 0;
    std::size_t end = 0;
    int level = 0;
    bool operator==(const SegmentRun&) const = default;
};

std::vector<SegmentRun> run_length(const LevelSequence& levels);
LevelSequence expand(const std::vector<SegmentRun>& runs, int k);

/// Parses newline-separated decimal values; blank lines and lines starting
/// with '#' are ignored.
std::vector<double> parse_values(std::istream& in);

/// Delays from raw values (or from timestamps in seconds, floored to the
/// configured granularity), shifted if requested and checked against the model.
DelaySequence to_delays(const std::vector<double>& values, const RunConfig& config);
DelaySequence ingest(const std::filesystem::path& path, const RunConfig& config);

struct RunResult {
    Solution solution;
    BurstParams params;  // the parameters the returned levels are scored with
    double runtime_ms = 0.0;
};

RunResult solve(const DelaySequence& delays, const RunConfig& config);

/// Rounds to 12 significant digits, the precision of every emitted number.
double round12(double v);

void write_levels_tsv(std::ostream& out, const LevelSequence& levels);
void write_segments_tsv(std::ostream& out, const std::vector<SegmentRun>& runs);
std::string summary_json(const RunResult& result, const RunConfig& config, std::size_t n);

/// ingest + solve + write levels.tsv, segments.tsv and summary.json into out_dir.
RunResult run(const RunConfig& config);

/// Process exit code for an exception escaping run(): 3 input, 4 domain,
/// 5 infeasible, 6 capacity, 1 anything else.
int exit_code_for(const std::exception& e);

}  // namespace burstkit::cli
