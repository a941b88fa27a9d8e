#pragma once

/**
 * @file ramanujan.hpp
 * @brief Slice determinants for p(5k+a), p(7k+5) and p(25k+a), the G1/G2
 *        residue split of Euler's product at fifth roots, the H polynomials,
 *        and the J1/J2 identity checks.
 *
 * Writing (q^{1/5})_oo = G1 - q^{1/5} (q^5)_oo + q^{2/5} G2 splits the
 * pentagonal series by the residue mod 5 of its exponents.  Everything in
 * this header stays in integer series arithmetic; the theta-quotient form
 * of G1/G2 is never needed.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "seqkernel/combinatorics.hpp"
#include "seqkernel/errors.hpp"
#include "seqkernel/ltt.hpp"
#include "seqkernel/numeric.hpp"
#include "seqkernel/partitions.hpp"
#include "seqkernel/series.hpp"
#include "seqkernel/series_pow.hpp"

namespace seqkernel {

/// G1 (constant term 1) and G2 (constant term -1).
struct G12Pair {
    TruncSeries g1;
    TruncSeries g2;
};

namespace detail {

struct PentagonalResidueSplit {
    TruncSeries g1;        // exponents = 0 mod 5, index q/5
    TruncSeries residue1;  // exponents = 1 mod 5, index (q-1)/5
    TruncSeries g2;        // exponents = 2 mod 5, index (q-2)/5
};

inline PentagonalResidueSplit pentagonal_residue_split(std::size_t L) {
    PentagonalResidueSplit s{TruncSeries(L), TruncSeries(L), TruncSeries(L)};
    const std::uint64_t limit = 5 * static_cast<std::uint64_t>(L) + 2;
    auto place = [&](std::uint64_t q, std::int64_t m) {
        const Rat sign = (m % 2 == 0) ? 1 : -1;
        switch (q % 5) {
            case 0: s.g1[q / 5] += sign; break;
            case 1:
                if ((q - 1) / 5 <= L) s.residue1[(q - 1) / 5] += sign;
                break;
            case 2: s.g2[(q - 2) / 5] += sign; break;
            default: break;  // residues 3 and 4 never occur for GPNs
        }
    };
    place(0, 0);
    for (const auto& [q, m] : gpn_upto(limit)) place(q, m);
    return s;
}

} // namespace detail

/// Splits the pentagonal series by exponent residue mod 5.  The residue-1
/// class must reproduce -(q^5)_oo; that is checked here, not returned.
inline G12Pair g1_g2_series(std::size_t L) {
    auto split = detail::pentagonal_residue_split(L);
    const TruncSeries expected = series_scale(-1, eta_power_series(1, 5, L));
    if (!(split.residue1 == expected))
        throw std::logic_error("g1_g2_series: residue-1 class does not reproduce -(q^5)_oo");
    return G12Pair{std::move(split.g1), std::move(split.g2)};
}

/// Tower column X^(a) for the p(5k+a) determinant over the (q)_oo^6 base.
/// For a <= 3 the determinant equals p(5k+a) directly; a = 4 uses the
/// (q^5)_oo^5 tower with an external factor of 5.
inline TruncSeries x_vector(unsigned a, std::size_t L) {
    if (a > 4) throw std::out_of_range("x_vector: residue must be 0..4");
    if (a == 4) return eta_power_series(5, 5, L);
    const G12Pair g = g1_g2_series(L);
    const TruncSeries lhs =
        series_scale(Rat(fibonacci(a + 1)),
                     series_mul(eta_power_series(a + 1, 5, L), series_pow_int(g.g1, 4 - a)));
    const TruncSeries rhs =
        series_scale(Rat(fibonacci(4 - a)),
                     series_mul(eta_power_series(4 - a, 5, L), series_pow_int(g.g2, a + 1)).shifted(1));
    return series_add(lhs, rhs);
}

/// p(5k+a) for a = 0..4 as a (k+1)x(k+1) tower determinant.
inline Int p_5k_a(unsigned a, std::size_t k,
                  TowerDetMode mode = TowerDetMode::fast_convolution) {
    TowerSpec spec(eta_power_series(6, 1, k), x_vector(a, k));
    Rat det = tower_det(spec, mode);
    if (a == 4) det *= 5;
    return rat_num(det);
}

/// Integer coefficient lists of H_1..H_5 (ascending powers), obtained by
/// expanding (1 + u + 2u^2 + 3u^3 + 5u^4 - 3u^5 + 2u^6 - u^7 + u^8)^6 and
/// collecting powers of u by residue mod 5.
struct HPolySet {
    std::array<std::vector<Int>, 5> h;
};

inline HPolySet h_polynomials() {
    const std::vector<Int> base = {1, 1, 2, 3, 5, -3, 2, -1, 1};
    std::vector<Int> pow = {1};
    for (int rep = 0; rep < 6; ++rep) {
        std::vector<Int> next(pow.size() + base.size() - 1);
        for (std::size_t i = 0; i < pow.size(); ++i)
            for (std::size_t j = 0; j < base.size(); ++j)
                next[i + j] += pow[i] * base[j];
        pow = std::move(next);
    }
    HPolySet out;
    for (std::size_t d = 0; d < pow.size(); ++d) {
        auto& poly = out.h[d % 5];
        const std::size_t idx = d / 5;
        if (poly.size() <= idx) poly.resize(idx + 1);
        poly[idx] = pow[d];
    }
    return out;
}

/// Tower column Z^(a) for the p(25k+a) determinant over the (q)_oo^31 base
/// (a in {4, 9, 14, 19, 24}).  Coefficient i of H_n rides on
/// q^i J1^{25-n-5i}, with negative J1 powers rewritten via J1 J2 = -1.
inline TruncSeries z_vector(unsigned a, std::size_t L) {
    if (a % 5 != 4 || a > 24) throw std::out_of_range("z_vector: residue must be 4, 9, 14, 19 or 24");
    const unsigned n = (a + 1) / 5;           // H index, 1..5
    const int e = 25 - static_cast<int>(n);   // leading J1 exponent
    const HPolySet hs = h_polynomials();
    const std::vector<Int>& h = hs.h[n - 1];
    const G12Pair g = g1_g2_series(L);
    TruncSeries acc(L);
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] == 0 || i > L) continue;
        const int j = e - 5 * static_cast<int>(i);
        TruncSeries term(L);
        if (j >= 0) {
            term = series_mul(eta_power_series(30 - j, 5, L), series_pow_int(g.g1, j));
        } else {
            term = series_mul(eta_power_series(30 + j, 5, L), series_pow_int(g.g2, -j));
            if ((-j) % 2 != 0) term = series_scale(-1, term);
        }
        acc = series_add(acc, series_scale(Rat(h[i]), term.shifted(i)));
    }
    return acc;
}

/// p(25k+a) = 5 x the (k+1)x(k+1) determinant with tower Z^(a).
inline Int p_25k_a(unsigned a, std::size_t k,
                   TowerDetMode mode = TowerDetMode::fast_convolution) {
    TowerSpec spec(eta_power_series(31, 1, k), z_vector(a, k));
    return rat_num(Rat(5) * tower_det(spec, mode));
}

enum class SliceId { m5r4, m7r5, m25r24 };

/// A slice determinant: prefactor * det(base LTT | tower) = p(modulus*k + residue).
struct SliceFamily {
    unsigned modulus = 0;
    unsigned residue = 0;
    Int prefactor;
    TruncSeries base;
    TruncSeries tower;
};

/// The three headline slice families, built at size k+1.
inline SliceFamily slice_family(SliceId id, std::size_t k) {
    switch (id) {
        case SliceId::m5r4:
            return {5, 4, 5, eta_power_series(6, 1, k), eta_power_series(5, 5, k)};
        case SliceId::m7r5: {
            TruncSeries tower =
                series_add(series_mul(eta_power_series(3, 7, k), eta_power_series(4, 1, k)),
                           series_scale(7, eta_power_series(7, 7, k).shifted(1)));
            return {7, 5, 7, eta_power_series(8, 1, k), std::move(tower)};
        }
        case SliceId::m25r24: {
            auto piece = [&](const Int& c, long long e1, long long e5, std::size_t shift) {
                return series_scale(Rat(c),
                                    series_mul(eta_power_series(e1, 1, k),
                                               eta_power_series(e5, 5, k)).shifted(shift));
            };
            TruncSeries tower = piece(63, 24, 6, 0);
            tower = series_add(tower, piece(Int(52) * int_pow(5, 3), 18, 12, 1));
            tower = series_add(tower, piece(Int(63) * int_pow(5, 5), 12, 18, 2));
            tower = series_add(tower, piece(Int(6) * int_pow(5, 8), 6, 24, 3));
            tower = series_add(tower, piece(int_pow(5, 10), 0, 30, 4));
            return {25, 24, 25, eta_power_series(31, 1, k), std::move(tower)};
        }
    }
    throw std::invalid_argument("slice_family: unknown id");
}

/// Mod-5 family in the X-vector convention (prefactor 1 for a <= 3, 5 for a = 4).
inline SliceFamily slice_family_mod5(unsigned a, std::size_t k) {
    if (a > 4) throw std::out_of_range("slice_family_mod5: residue must be 0..4");
    return {5, a, a == 4 ? Int(5) : Int(1), eta_power_series(6, 1, k), x_vector(a, k)};
}

/// Mod-25 family in the Z-vector convention (uniform prefactor 5).
inline SliceFamily slice_family_mod25(unsigned a, std::size_t k) {
    if (a % 5 != 4 || a > 24) throw std::out_of_range("slice_family_mod25: bad residue");
    return {25, a, 5, eta_power_series(31, 1, k), z_vector(a, k)};
}

inline Int slice_value(const SliceFamily& f,
                       TowerDetMode mode = TowerDetMode::fast_convolution) {
    TowerSpec spec(f.base, f.tower);
    return rat_num(Rat(f.prefactor) * tower_det(spec, mode));
}

/// p(5k+4), p(7k+5) or p(25k+24) via the named family determinant.
inline Int ramanujan_slice(SliceId id, std::size_t k,
                           TowerDetMode mode = TowerDetMode::fast_convolution) {
    return slice_value(slice_family(id, k), mode);
}

struct IdentityCheck {
    std::string name;
    bool pass = false;
    long long first_mismatch = -1;  // coefficient index, -1 when passing
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline IdentityCheck compare_series(std::string name, const TruncSeries& got,
                                    const TruncSeries& want) {
    IdentityCheck c{std::move(name), true, -1};
    for (std::size_t i = 0; i <= got.order(); ++i) {
        if (got[i] != want[i]) {
            c.pass = false;
            c.first_mismatch = static_cast<long long>(i);
            break;
        }
    }
    return c;
}

} // namespace detail

/// Verifies, to truncation L, Ramanujan's J1/J2 identities and the four
/// closing power-sum substitutions J1^{5j} + q^{2j} J2^{5j} = poly_j(X, q)
/// with X = (q)_oo^6 / (q^5)_oo^6.
inline IdentityReport ramanujan_j_identities(const G12Pair& g, std::size_t L) {
    IdentityReport report;
    const TruncSeries inv_p5 = series_inverse(eta_power_series(1, 5, L));
    const TruncSeries j1 = series_mul(g.g1, inv_p5);
    const TruncSeries j2 = series_mul(g.g2, inv_p5);
    const TruncSeries big_x =
        series_mul(eta_power_series(6, 1, L), series_inverse(eta_power_series(6, 5, L)));

    report.checks.push_back(
        detail::compare_series("J1*J2 = -1", series_mul(j1, j2),
                               series_scale(-1, TruncSeries::unit(L))));

    {
        TruncSeries lhs = series_pow_int(j1, 5);
        lhs[1] -= 11;
        lhs = series_add(lhs, series_pow_int(j2, 5).shifted(2));
        report.checks.push_back(
            detail::compare_series("J1^5 - 11q + q^2 J2^5 = (q)^6/(q^5)^6", lhs, big_x));
    }

    static const std::vector<std::vector<long long>> power_sum_coeffs = {
        {1, 11},
        {1, 22, 123},
        {1, 33, 366, 1364},
        {1, 44, 730, 5412, 15127},
    };
    for (std::size_t j = 1; j <= 4; ++j) {
        TruncSeries lhs =
            series_add(series_pow_int(j1, 5 * static_cast<long long>(j)),
                       series_pow_int(j2, 5 * static_cast<long long>(j)).shifted(2 * j));
        TruncSeries rhs(L);
        const auto& cs = power_sum_coeffs[j - 1];
        for (std::size_t r = 0; r < cs.size(); ++r) {
            rhs = series_add(rhs, series_scale(Rat(cs[r]),
                                               series_pow_int(big_x, static_cast<long long>(j - r))
                                                   .shifted(r)));
        }
        report.checks.push_back(detail::compare_series(
            "J1^" + std::to_string(5 * j) + " + q^" + std::to_string(2 * j) + " J2^" +
                std::to_string(5 * j) + " power sum",
            lhs, rhs));
    }
    return report;
}

inline IdentityReport ramanujan_j_identities(std::size_t L) {
    return ramanujan_j_identities(g1_g2_series(L), L);
}

} // namespace seqkernel
