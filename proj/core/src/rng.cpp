#include "confscale/rng.hpp"

#include <limits>

namespace confscale {

std::uint64_t SeededRng::uniform_inclusive(std::uint64_t hi)
{
    if (hi == 0) return 0;
    if (hi == std::numeric_limits<std::uint64_t>::max()) return engine_();
    const std::uint64_t span = hi + 1;
    const std::uint64_t threshold = (0 - span) % span;
    std::uint64_t r = engine_();
    while (r < threshold) r = engine_();
    return r % span;
}

}  // namespace confscale
