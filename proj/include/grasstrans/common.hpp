#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grasstrans {

using Rat = mpq_class;
using IVec = std::vector<int>;

// Gaussian rational p + q*i, used for exact evaluation at quarter periods.
struct GaussRat {
    Rat re{0};
    Rat im{0};

    GaussRat() = default;
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend GaussRat operator*(const GaussRat& x, const GaussRat& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend bool operator==(const GaussRat& x, const GaussRat& y) {
        return x.re == y.re && x.im == y.im;
    }
};

// i^k
inline GaussRat unit_power(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

struct GtError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a reflection difference does not telescope over the exponent
// lattice, i.e. the weight parity is incompatible with a nonzero multiplicity.
struct ParityError : GtError {
    using GtError::GtError;
};

enum class Field { Real, Complex, Quaternion };

inline int field_dim(Field f) {
    switch (f) {
        case Field::Real: return 1;
        case Field::Complex: return 2;
        case Field::Quaternion: return 4;
    }
    throw GtError("bad field tag");
}

inline std::string field_name(Field f) {
    switch (f) {
        case Field::Real: return "R";
        case Field::Complex: return "C";
        case Field::Quaternion: return "H";
    }
    throw GtError("bad field tag");
}

Field parse_field(const std::string& s);

inline double to_double(const Rat& q) { return q.get_d(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::string rat_string(const Rat& q);

struct IVecHash {
    std::size_t operator()(const IVec& v) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace grasstrans
