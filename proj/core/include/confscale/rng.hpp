#pragma once

#include <cstdint>
#include <random>

namespace confscale {

/// Portable seeded draws. std::mt19937_64 has a fully specified output sequence; the
/// bounded draw below replaces std::uniform_int_distribution, whose algorithm is left
/// to the standard library and differs between vendors.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, hi] by rejection sampling: raw outputs below
    /// (2^64 - span) mod span are discarded, the rest are reduced modulo span.
    std::uint64_t uniform_inclusive(std::uint64_t hi);

private:
    std::mt19937_64 engine_;
};

}  // namespace confscale
