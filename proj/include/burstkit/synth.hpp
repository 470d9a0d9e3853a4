#pragma once

#include <cstddef>
#include <cstdint>

#include "burstkit/model.hpp"

namespace burstkit {

/// A sequence of n exponential delays with one planted burst on
/// [burst_start, burst_end). Bursts use the larger rate (shorter delays).
struct PlantSpec {
    std::size_t n = 0;
    std::size_t burst_start = 0;
    std::size_t burst_end = 0;
    double base_rate = 1.0;
    double burst_rate = 2.0;
    std::uint64_t seed = 0;
};

struct PlantedSequence {
    DelaySequence delays;
    LevelSequence truth;  // 1 inside the burst, 0 elsewhere
};

/// Delay i is -log(u_i) / rate with u_i built from the i-th output of
/// std::mt19937_64 seeded with spec.seed: u = ((x >> 11) + 0.5) / 2^53.
/// Both pieces are fixed by the C++ standard, so output is identical across
/// platforms.
PlantedSequence generate(const PlantSpec& spec);

/// Independent seed for trial `index` of an experiment seeded with `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// L1 distance sum_i |l_i - t_i| between two level sequences.
std::size_t hamming(const LevelSequence& levels, const LevelSequence& truth);

}  // namespace burstkit
