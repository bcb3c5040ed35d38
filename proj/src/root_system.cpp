#include "grasstrans/root_system.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace grasstrans {

Field parse_field(const std::string& s) {
    if (s == "R" || s == "r" || s == "real") return Field::Real;
    if (s == "C" || s == "c" || s == "complex") return Field::Complex;
    if (s == "H" || s == "h" || s == "quaternion") return Field::Quaternion;
    throw GtError("unknown field: " + s);
}

std::string rat_string(const Rat& q) {
    return q.get_str();
}

RSType RootSystemBC::type() const {
    const bool s = b2 != 0, l = iota != 0;
    if (s && l) return RSType::BC;
    if (s) return RSType::B;
    if (l) return RSType::C;
    return RSType::D;
}

std::vector<Rat> RootSystemBC::rho() const {
    std::vector<Rat> out;
    out.reserve(rank);
    for (int j = 1; j <= rank; ++j) out.push_back(iota + b() + a * (rank - j));
    return out;
}

RootSystemBC make_root_system(int rank, const Rat& a, const Rat& mult_short, const Rat& mult_long) {
    if (rank < 1) throw GtError("rank must be positive");
    if (a < 0 || mult_short < 0 || mult_long < 0) throw GtError("multiplicities must be nonnegative");
    return RootSystemBC{rank, a, mult_short, mult_long, std::nullopt};
}

RootSystemBC grassmannian_preset(Field f, int n, int r) {
    if (r < 1 || 2 * r > n) throw GtError("preset requires 1 <= r and 2r <= n");
    const int a = field_dim(f);
    RootSystemBC rs{r, a, a * (n - 2 * r), a - 1, GrassmannPreset{f, n, r}};
    return rs;
}

WeylDescription weyl_group(const RootSystemBC& rs) {
    long hyper = 1;
    for (int j = 1; j <= rs.rank; ++j) hyper *= 2L * j;
    const RSType ty = rs.type();
    long order = (ty == RSType::D) ? hyper / 2 : hyper;
    return {ty, order, hyper};
}

double measure_density(const RootSystemBC& rs, const std::vector<double>& t) {
    const int r = rs.rank;
    if (static_cast<int>(t.size()) != r) throw GtError("angle vector has wrong rank");
    const double a = to_double(rs.a), b2 = to_double(rs.b2), io = to_double(rs.iota);
    double logs = 0.0;
    for (int j = 0; j < r; ++j) {
        for (int k = j + 1; k < r; ++k) {
            logs += a * (std::log(std::fabs(2 * std::sin(t[j] - t[k]))) +
                         std::log(std::fabs(2 * std::sin(t[j] + t[k]))));
        }
        if (b2 != 0) logs += b2 * std::log(std::fabs(2 * std::sin(t[j])));
        if (io != 0) logs += io * std::log(std::fabs(2 * std::sin(2 * t[j])));
    }
    return std::exp(logs);
}

bool is_dominant(const IVec& lambda) {
    for (std::size_t j = 0; j + 1 < lambda.size(); ++j)
        if (lambda[j] < lambda[j + 1]) return false;
    return lambda.empty() || lambda.back() >= 0;
}

std::vector<IVec> signed_orbit(const IVec& lambda) {
    IVec sorted = lambda;
    std::sort(sorted.begin(), sorted.end());
    std::set<IVec> out;
    do {
        const int r = static_cast<int>(sorted.size());
        int nz = 0;
        for (int v : sorted) nz += (v != 0);
        for (unsigned mask = 0; mask < (1u << nz); ++mask) {
            IVec img = sorted;
            int bit = 0;
            for (int j = 0; j < r; ++j) {
                if (img[j] == 0) continue;
                if (mask & (1u << bit)) img[j] = -img[j];
                ++bit;
            }
            out.insert(std::move(img));
        }
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return {out.begin(), out.end()};
}

std::vector<IVec> dominance_cone(const RootSystemBC& rs, const IVec& m) {
    const int r = rs.rank;
    if (static_cast<int>(m.size()) != r) throw GtError("weight has wrong rank");
    if (!is_dominant(m)) throw GtError("weight must be dominant");
    const bool mod4 = (rs.b2 == 0);
    int msum = 0;
    for (int v : m) msum += v;

    std::vector<IVec> out;
    IVec cur(r, 0);
    // Enumerate dominant lam with lam_j <= partial-sum bound, entry parity of m.
    auto rec = [&](auto&& self, int j, int prefix_m, int prefix_l) -> void {
        if (j == r) {
            if (mod4 && (msum - prefix_l) % 4 != 0) return;
            out.push_back(cur);
            return;
        }
        const int hi = std::min(j > 0 ? cur[j - 1] : m[0], prefix_m + m[j] - prefix_l);
        const int par = ((m[j] % 2) + 2) % 2;
        for (int v = par; v <= hi; v += 2) {
            cur[j] = v;
            self(self, j + 1, prefix_m + m[j], prefix_l + v);
        }
    };
    rec(rec, 0, 0, 0);
    std::sort(out.begin(), out.end(), [](const IVec& x, const IVec& y) {
        int sx = 0, sy = 0;
        for (int v : x) sx += v;
        for (int v : y) sy += v;
        if (sx != sy) return sx < sy;
        return x < y;
    });
    return out;
}

std::vector<IVec> even_dominant_weights(int rank, int degree_cap) {
    std::vector<IVec> out;
    IVec cur(rank, 0);
    auto rec = [&](auto&& self, int j, int used) -> void {
        if (j == rank) {
            out.push_back(cur);
            return;
        }
        const int hi = std::min(j > 0 ? cur[j - 1] : degree_cap, degree_cap - used);
        for (int v = 0; v <= hi; v += 2) {
            cur[j] = v;
            self(self, j + 1, used + v);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), [](const IVec& x, const IVec& y) {
        int sx = 0, sy = 0;
        for (int v : x) sx += v;
        for (int v : y) sy += v;
        if (sx != sy) return sx < sy;
        return x < y;
    });
    return out;
}

}  // namespace grasstrans
