#include "grasstrans/rng.hpp"

#include <cmath>
#include <numbers>

namespace grasstrans {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

}  // namespace

std::array<std::uint32_t, 4> Rng::block(std::array<std::uint32_t, 4> x,
                                        std::array<std::uint32_t, 2> k) {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k[0] += kWeyl0;
            k[1] += kWeyl1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, x[0], hi0, lo0);
        mulhilo(kMul1, x[2], hi1, lo1);
        x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
    }
    return x;
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    key_ = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    counter_ = {0, 0, static_cast<std::uint32_t>(stream),
                static_cast<std::uint32_t>(stream >> 32)};
}

void Rng::refill() {
    buf_ = block(counter_, key_);
    idx_ = 0;
    if (++counter_[0] == 0) ++counter_[1];
}

std::uint32_t Rng::next_u32() {
    if (idx_ >= 4) refill();
    return buf_[idx_++];
}

double Rng::next_unit() {
    return (static_cast<double>(next_u32()) + 0.5) * 0x1.0p-32;
}

double Rng::next_gaussian() {
    if (have_cached_) {
        have_cached_ = false;
        return cached_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    cached_ = rad * std::sin(ang);
    have_cached_ = true;
    return rad * std::cos(ang);
}

}  // namespace grasstrans
