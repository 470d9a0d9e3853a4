#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace burstkit {

enum class ExperimentKind {
    BurstLength,     // fixed n, varying burst length
    SequenceLength,  // varying n, burst length n / 3
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::BurstLength;
    std::size_t n = 500;                 // BurstLength only
    std::vector<std::size_t> xs;         // burst lengths or sequence lengths
    std::size_t trials = 100;
    int k = 1;
    double alpha = 2.0;
    double gamma = 1.0;
    double epsilon = 0.05;
    double base_rate = 1.0;
    double burst_rate = 2.0;
    std::uint64_t seed = 2015;

    /// Burst lengths 50, 60, ..., 250 on n = 500 with 100 trials.
    static ExperimentConfig burst_length_defaults();
    /// Sequence lengths 50, 100, ..., 500, burst n/3, 300 trials.
    static ExperimentConfig sequence_length_defaults();
};

struct TrialRecord {
    std::uint64_t seed = 0;
    std::size_t x = 0;
    std::string method;
    std::size_t n = 0;
    std::size_t hamming = 0;
};

struct SummaryRow {
    std::size_t x = 0;
    double expalpha = 0.0;  // mean Hamming (normalised by n for SequenceLength)
    double expmean = 0.0;
};

inline constexpr const char* kMethodExpAlpha = "ExpAlpha";
inline constexpr const char* kMethodExpMean = "ExpMean";

/// Runs every (x, trial) pair: one planted burst centred in the sequence,
/// detected once with the optimised base rate and once with beta = 1/mu.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& config);

std::vector<SummaryRow> summarize(const ExperimentConfig& config,
                                  const std::vector<TrialRecord>& records);

void write_trials_tsv(std::ostream& out, const ExperimentConfig& config,
                      const std::vector<TrialRecord>& records);
void write_summary_tsv(std::ostream& out, const ExperimentConfig& config,
                       const std::vector<SummaryRow>& rows);

}  // namespace burstkit
