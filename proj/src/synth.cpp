#include "burstkit/synth.hpp"

#include <array>
#include <cstdlib>
#include <random>

namespace burstkit {

PlantedSequence generate(const PlantSpec& spec) {
    if (spec.n == 0) throw DomainError("planted sequence needs n >= 1");
    if (!(spec.burst_start <= spec.burst_end && spec.burst_end <= spec.n))
        throw DomainError("burst interval must satisfy 0 <= start <= end <= n");
    if (!(spec.base_rate > 0.0) || !(spec.burst_rate > 0.0))
        throw DomainError("rates must be positive");

    std::mt19937_64 engine(spec.seed);
    std::vector<double> delays(spec.n);
    std::vector<int> truth(spec.n, 0);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const bool inside = i >= spec.burst_start && i < spec.burst_end;
        const double u = (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
        delays[i] = -std::log(u) / (inside ? spec.burst_rate : spec.base_rate);
        truth[i] = inside ? 1 : 0;
    }
    return PlantedSequence{DelaySequence(std::move(delays)), LevelSequence{std::move(truth), 1}};
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return (static_cast<std::uint64_t>(words[1]) << 32) | words[0];
}

std::size_t hamming(const LevelSequence& levels, const LevelSequence& truth) {
    if (levels.size() != truth.size())
        throw DomainError("hamming distance needs sequences of equal length");
    std::size_t d = 0;
    for (std::size_t i = 0; i < levels.size(); ++i)
        d += static_cast<std::size_t>(std::abs(levels[i] - truth[i]));
    return d;
}

}  // namespace burstkit
