#include "burstkit/experiment.hpp"

#include <map>
#include <ostream>

#include "burstkit/approx_exp.hpp"
#include "burstkit/synth.hpp"
#include "burstkit/viterbi.hpp"

namespace burstkit {

ExperimentConfig ExperimentConfig::burst_length_defaults() {
    ExperimentConfig c;
    c.kind = ExperimentKind::BurstLength;
    for (std::size_t len = 50; len <= 250; len += 10) c.xs.push_back(len);
    c.trials = 100;
    return c;
}

ExperimentConfig ExperimentConfig::sequence_length_defaults() {
    ExperimentConfig c;
    c.kind = ExperimentKind::SequenceLength;
    for (std::size_t n = 50; n <= 500; n += 50) c.xs.push_back(n);
    c.trials = 300;
    return c;
}

std::vector<TrialRecord> run_experiment(const ExperimentConfig& config) {
    std::vector<TrialRecord> records;
    records.reserve(config.xs.size() * config.trials * 2);
    std::uint64_t trial_index = 0;
    for (std::size_t x : config.xs) {
        const std::size_t n = config.kind == ExperimentKind::BurstLength ? config.n : x;
        const std::size_t len = config.kind == ExperimentKind::BurstLength ? x : x / 3;
        if (len > n) throw DomainError("burst longer than the sequence");
        const std::size_t start = (n - len) / 2;
        for (std::size_t t = 0; t < config.trials; ++t, ++trial_index) {
            PlantSpec spec;
            spec.n = n;
            spec.burst_start = start;
            spec.burst_end = start + len;
            spec.base_rate = config.base_rate;
            spec.burst_rate = config.burst_rate;
            spec.seed = derive_seed(config.seed, trial_index);
            const PlantedSequence planted = generate(spec);

            const Solution fitted =
                exp_alpha(planted.delays, config.alpha, config.gamma, config.k, config.epsilon);
            const Solution baseline = viterbi(
                planted.delays, BurstParams::exponential(config.alpha, 1.0 / planted.delays.stats().mean,
                                                         config.gamma, config.k));
            records.push_back({spec.seed, x, kMethodExpAlpha, n, hamming(fitted.levels, planted.truth)});
            records.push_back({spec.seed, x, kMethodExpMean, n, hamming(baseline.levels, planted.truth)});
        }
    }
    return records;
}

std::vector<SummaryRow> summarize(const ExperimentConfig& config,
                                  const std::vector<TrialRecord>& records) {
    struct Acc {
        double alpha_sum = 0.0, mean_sum = 0.0;
        std::size_t alpha_count = 0, mean_count = 0;
    };
    std::map<std::size_t, Acc> by_x;
    const bool normalise = config.kind == ExperimentKind::SequenceLength;
    for (const auto& r : records) {
        const double v = normalise ? static_cast<double>(r.hamming) / static_cast<double>(r.n)
                                   : static_cast<double>(r.hamming);
        Acc& acc = by_x[r.x];
        if (r.method == kMethodExpAlpha) {
            acc.alpha_sum += v;
            ++acc.alpha_count;
        } else {
            acc.mean_sum += v;
            ++acc.mean_count;
        }
    }
    std::vector<SummaryRow> rows;
    for (const auto& [x, acc] : by_x)
        rows.push_back({x, acc.alpha_count ? acc.alpha_sum / acc.alpha_count : 0.0,
                        acc.mean_count ? acc.mean_sum / acc.mean_count : 0.0});
    return rows;
}

void write_trials_tsv(std::ostream& out, const ExperimentConfig& config,
                      const std::vector<TrialRecord>& records) {
    out << "seed\t" << (config.kind == ExperimentKind::BurstLength ? "burst_len" : "n")
        << "\tmethod\thamming\n";
    for (const auto& r : records) out << r.seed << '\t' << r.x << '\t' << r.method << '\t' << r.hamming << '\n';
}

void write_summary_tsv(std::ostream& out, const ExperimentConfig& config,
                       const std::vector<SummaryRow>& rows) {
    const bool by_burst = config.kind == ExperimentKind::BurstLength;
    out << (by_burst ? "burst_len\texpalpha_hamming\texpmean_hamming\n"
                     : "n\texpalpha_normalized_hamming\texpmean_normalized_hamming\n");
    const auto old = out.precision(12);
    for (const auto& r : rows) out << r.x << '\t' << r.expalpha << '\t' << r.expmean << '\n';
    out.precision(old);
}

}  // namespace burstkit
