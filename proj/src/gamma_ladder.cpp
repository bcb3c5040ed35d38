#include "grasstrans/gamma_ladder.hpp"

#include <cmath>
#include <cstdlib>

namespace grasstrans {

LogSigned ls_from_rat(const Rat& q) {
    if (q == 0) return {0.0, 1, 1};
    const int sign = (q > 0) ? 1 : -1;
    Rat abs_q = (q > 0) ? q : Rat(-q);
    return {std::log(to_double(abs_q)), sign, 0};
}

LogSigned ls_from_double(double v) {
    if (v == 0.0) return {0.0, 1, 1};
    return {std::log(std::abs(v)), v > 0 ? 1 : -1, 0};
}

LogSigned gamma_ls(const Rat& x) {
    if (x > 0) return {std::lgamma(to_double(x)), 1, 0};
    if (is_integer(x)) {
        // simple pole at -n with residue (-1)^n / n!
        const long n = -x.get_num().get_si();
        const int sign = (n % 2 == 0) ? 1 : -1;
        return {-std::lgamma(static_cast<double>(n) + 1.0), sign, -1};
    }
    // floor(x) by exact integer division toward -inf
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    const bool floor_even = mpz_even_p(fl.get_mpz_t()) != 0;
    const int sign = floor_even ? 1 : -1;
    return {std::lgamma(to_double(x)), sign, 0};
}

Rat pochhammer_rat(const Rat& x, long k) {
    Rat acc = 1;
    for (long l = 0; l < k; ++l) acc *= x + l;
    return acc;
}

bool poch_is_zero(const Rat& x, long k) {
    if (!is_integer(x)) return false;
    return x <= 0 && x + (k - 1) >= 0;
}

LogSigned pochhammer_ls(const Rat& x, long k) {
    LogSigned acc{0.0, 1, 0};
    for (long l = 0; l < k; ++l) acc = acc * ls_from_rat(x + l);
    return acc;
}

LogSigned gindikin_gamma(const Rat& a, int r, const Rat& alpha) {
    LogSigned acc{0.0, 1, 0};
    for (int j = 1; j <= r; ++j) acc = acc * gamma_ls(alpha - a / 2 * (j - 1));
    return acc;
}

}  // namespace grasstrans
