#ifndef TORSORLAB_RNG_HPP
#define TORSORLAB_RNG_HPP

#include <cstdint>
#include <string_view>

#include "torsorlab/subset.hpp"

namespace torsorlab {

/// SplitMix64 stream keyed by (master seed, stream label). Hand-rolled so
/// sampled scans are byte-reproducible across platforms and standard
/// libraries; never reseed mid-check.
class CheckRng {
  public:
    CheckRng(uint64_t master_seed, std::string_view stream_label);

    uint64_t next();

    /// Uniform draw in [0, bound) by masked rejection; bound >= 1.
    uint64_t below(uint64_t bound);

    /// Subset with each element included with probability 1/2.
    Subset subset(const GroupRef& g);

  private:
    uint64_t state_;
};

}  // namespace torsorlab

#endif
