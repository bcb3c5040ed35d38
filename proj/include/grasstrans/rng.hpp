#pragma once

#include <array>
#include <cstdint>

namespace grasstrans {

// Counter-based Philox4x32-10 stream; deterministic across platforms, cheap
// to seed per (seed, stream) pair, no state file dependence.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> counter,
                                              std::array<std::uint32_t, 2> key);

    std::uint32_t next_u32();
    double next_unit();      // open interval (0,1)
    double next_gaussian();  // standard normal, Box-Muller

  private:
    void refill();

    std::array<std::uint32_t, 4> counter_{};
    std::array<std::uint32_t, 2> key_{};
    std::array<std::uint32_t, 4> buf_{};
    int idx_ = 4;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace grasstrans
