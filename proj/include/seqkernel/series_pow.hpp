#pragma once

/**
 * @file series_pow.hpp
 * @brief Rational powers of truncated series by three equivalent mechanisms.
 *
 * Coefficient p of F(z)^X can be read off three ways:
 *   - partition_sum:    sum over exponent vectors (k_1..k_p), sum m k_m = p,
 *                       of binom(X,K) (K; k_1..k_p) a_0^{X-K} prod a_m^{k_m};
 *   - composition_sum:  the same sum rearranged over ordered compositions
 *                       of p (exponential in p; cross-validation at small p);
 *   - determinant:      a_0^{(p+1)X} times the determinant of the inverse
 *                       power's LTT matrix with a unit/-1 tower added to the
 *                       last column.
 * A fourth path, repeated multiplication, applies to integer X only and
 * serves as the plumbing oracle for the other three.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "seqkernel/combinatorics.hpp"
#include "seqkernel/errors.hpp"
#include "seqkernel/ltt.hpp"
#include "seqkernel/numeric.hpp"
#include "seqkernel/series.hpp"

namespace seqkernel {

enum class PowMethod { partition_sum, composition_sum, determinant, repeated_mul_oracle };

/// Integer power by square-and-multiply over the convolution product.
inline TruncSeries series_pow_int(const TruncSeries& a, long long e) {
    if (a[0] == 0) throw ZeroConstantTermError("series_pow_int: constant term is zero");
    const std::size_t L = a.order();
    if (e == 0) return TruncSeries::unit(L);
    TruncSeries base = e < 0 ? series_inverse(a) : a;
    unsigned long long m = e < 0 ? static_cast<unsigned long long>(-e)
                                 : static_cast<unsigned long long>(e);
    TruncSeries acc = TruncSeries::unit(L);
    while (m) {
        if (m & 1) acc = series_mul(acc, base);
        if (m >>= 1) base = series_mul(base, base);
    }
    return acc;
}

namespace detail {

inline TruncSeries series_pow_partition(const TruncSeries& a, const Rat& x) {
    const std::size_t L = a.order();
    const Rat a0x = rat_pow_exact(a[0], x);
    const bool unit_a0 = (a[0] == 1);
    TruncSeries r(L);
    r[0] = a0x;
    for (std::size_t p = 1; p <= L; ++p) {
        std::vector<std::uint64_t> parts;
        for (std::size_t m = 1; m <= p; ++m)
            if (a[m] != 0) parts.push_back(m);
        if (parts.empty()) continue;
        Rat acc = 0;
        for_each_exponent_vector(p, parts, [&](const std::vector<std::uint64_t>& k) {
            std::uint64_t K = 0;
            Rat prod = 1;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (k[i] == 0) continue;
                K += k[i];
                prod *= rat_pow(a[parts[i]], static_cast<long long>(k[i]));
            }
            Rat term = gen_binomial(x, static_cast<std::size_t>(K)) * Rat(ordering_count(k)) * prod;
            if (!unit_a0) term *= a0x * rat_pow(a[0], -static_cast<long long>(K));
            else term *= a0x;
            acc += term;
        });
        r[p] = acc;
    }
    return r;
}

inline TruncSeries series_pow_composition(const TruncSeries& a, const Rat& x) {
    const std::size_t L = a.order();
    const Rat a0x = rat_pow_exact(a[0], x);
    TruncSeries r(L);
    r[0] = a0x;
    for (std::size_t p = 1; p <= L; ++p) {
        // by_count[K] accumulates prod a_{q_1}..a_{q_K} over compositions of p
        std::vector<Rat> by_count(p + 1);
        auto dfs = [&](auto&& self, std::size_t rem, std::size_t count, const Rat& prod) -> void {
            if (rem == 0) {
                by_count[count] += prod;
                return;
            }
            for (std::size_t q = 1; q <= rem; ++q) {
                if (a[q] == 0) continue;
                self(self, rem - q, count + 1, prod * a[q]);
            }
        };
        dfs(dfs, p, 0, Rat(1));
        Rat acc = 0;
        for (std::size_t K = 1; K <= p; ++K) {
            if (by_count[K] == 0) continue;
            Rat term = gen_binomial(x, K) * by_count[K] * a0x;
            if (a[0] != 1) term *= rat_pow(a[0], -static_cast<long long>(K));
            acc += term;
        }
        r[p] = acc;
    }
    return r;
}

/// Integer exponents go through repeated multiplication, fractional ones
/// through the partition sum.
inline TruncSeries series_pow_auto(const TruncSeries& a, const Rat& x) {
    if (is_integer(x)) return series_pow_int(a, static_cast<long long>(rat_num(x)));
    return series_pow_partition(a, x);
}

} // namespace detail

/// LTT column raised to a rational power; the column of F(z)^X for the
/// corresponding series.
inline LttColumn ltt_pow(const LttColumn& col, const Rat& x) {
    if (col.a[0] == 0) throw ZeroConstantTermError("ltt_pow: zero diagonal");
    return LttColumn::from_series(detail::series_pow_auto(col.to_series(), x));
}

/// The (p+1)x(p+1) matrix whose first p columns come from the LTT form of
/// F^{-X} and whose last column has the tower (1, 0, ..., 0, -a_0^{-X})
/// added; a_0^{(p+1)X} times its determinant is coefficient p of F^X.
inline DenseMatrix build_thm2_matrix(const TruncSeries& a, const Rat& x, std::size_t p) {
    if (a[0] == 0) throw ZeroConstantTermError("build_thm2_matrix: constant term is zero");
    if (p > a.order()) throw std::out_of_range("build_thm2_matrix: p exceeds series order");
    const LttColumn inv_pow = ltt_pow(LttColumn::from_series(a.prefix(p)), -x);
    DenseMatrix m = to_dense(inv_pow);
    const Rat a0_minus_x = rat_pow_exact(a[0], -x);
    m.at(0, p) += 1;
    m.at(p, p) -= a0_minus_x;
    return m;
}

inline TruncSeries series_pow(const TruncSeries& a, const Rat& x, PowMethod method) {
    if (a[0] == 0) throw ZeroConstantTermError("series_pow: constant term is zero");
    switch (method) {
        case PowMethod::partition_sum:
            return detail::series_pow_partition(a, x);
        case PowMethod::composition_sum:
            return detail::series_pow_composition(a, x);
        case PowMethod::determinant: {
            const std::size_t L = a.order();
            const Rat a0x = rat_pow_exact(a[0], x);
            TruncSeries r(L);
            for (std::size_t p = 0; p <= L; ++p) {
                r[p] = rat_pow(a0x, static_cast<long long>(p) + 1) *
                       bareiss_det(build_thm2_matrix(a, x, p));
            }
            return r;
        }
        case PowMethod::repeated_mul_oracle: {
            if (!is_integer(x))
                throw UnsupportedMethodError("series_pow: repeated_mul_oracle needs an integer exponent");
            return series_pow_int(a, static_cast<long long>(rat_num(x)));
        }
    }
    throw UnsupportedMethodError("series_pow: unknown method");
}

/// Coefficientwise product of rational powers sharing one truncation order.
inline TruncSeries series_product_powers(const std::vector<std::pair<TruncSeries, Rat>>& factors) {
    if (factors.empty()) throw std::invalid_argument("series_product_powers: no factors");
    TruncSeries acc = detail::series_pow_auto(factors[0].first, factors[0].second);
    for (std::size_t i = 1; i < factors.size(); ++i) {
        require_same_order(acc, factors[i].first, "series_product_powers");
        acc = series_mul(acc, detail::series_pow_auto(factors[i].first, factors[i].second));
    }
    return acc;
}

/// Truncation of ((q^scale)_oo)^exponent, the workhorse eta-product power.
inline TruncSeries eta_power_series(long long exponent, std::size_t scale, std::size_t L) {
    if (scale == 0) throw std::invalid_argument("eta_power_series: scale must be >= 1");
    const TruncSeries base = pentagonal_series(L / scale).substituted(scale, L);
    return series_pow_int(base, exponent);
}

/// Cube of Euler's product via the Jacobi identity: coefficient j equals
/// (-1)^m (2m+1) when j = m(m+1)/2, else 0.
inline TruncSeries jacobi_cube_series(std::size_t L) {
    TruncSeries s(L);
    for (std::uint64_t m = 0;; ++m) {
        const std::uint64_t t = m * (m + 1) / 2;
        if (t > L) break;
        s[t] = Rat(Int(2 * m + 1) * ((m % 2 == 0) ? 1 : -1));
    }
    return s;
}

} // namespace seqkernel
