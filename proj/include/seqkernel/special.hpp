#pragma once

/**
 * @file special.hpp
 * @brief Bernoulli, Euler, Stirling, higher-order Bernoulli and Bell
 *        polynomial values, each by several closed forms plus a classical
 *        recurrence.
 *
 * Conventions: B_1 = -1/2 (the z/(e^z - 1) expansion), E_n are the secant
 * numbers (E_0 = 1, E_2 = -1, ...), Stirling operations take (n, p) with
 * p the co-index, i.e. they compute S(n, n-p) and s(n, n-p).
 *
 * The composition-shaped formulas are evaluated by enumerating partitions
 * and weighting each by its number of orderings; the two shapes are equal
 * term group by term group, and the direct composition enumeration is kept
 * as a small-n cross-check in the test suite.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "seqkernel/combinatorics.hpp"
#include "seqkernel/errors.hpp"
#include "seqkernel/ltt.hpp"
#include "seqkernel/numeric.hpp"
#include "seqkernel/series.hpp"
#include "seqkernel/series_pow.hpp"

namespace seqkernel {

enum class BernoulliMethod {
    partition_36a,
    composition_36b,
    sinh_38,
    general_41,
    laplace_det_3,
    vella_35,
    det_56a,
    recurrence_oracle,
};

enum class EulerMethod {
    even_partition_39a,
    even_composition_42,
    odd_composition_prop,
    odd_partition_48,
    det_56b,
    secant_oracle,
};

namespace detail {

/// Sums term(k) over every exponent vector of n for the given parts.
template <typename F>
Rat partition_weighted_sum(std::uint64_t n, const std::vector<std::uint64_t>& parts, F&& term) {
    if (parts.empty()) {
        if (n != 0) return 0;
        const std::vector<std::uint64_t> zero;
        return term(zero);
    }
    Rat acc = 0;
    for_each_exponent_vector(n, parts, [&](const std::vector<std::uint64_t>& k) { acc += term(k); });
    return acc;
}

inline std::vector<std::uint64_t> consecutive_parts(std::uint64_t upto) {
    std::vector<std::uint64_t> p;
    for (std::uint64_t m = 1; m <= upto; ++m) p.push_back(m);
    return p;
}

inline std::vector<std::uint64_t> even_parts(std::uint64_t upto) {
    std::vector<std::uint64_t> p;
    for (std::uint64_t m = 2; m <= upto; m += 2) p.push_back(m);
    return p;
}

inline std::vector<std::uint64_t> odd_parts(std::uint64_t upto) {
    std::vector<std::uint64_t> p;
    for (std::uint64_t m = 1; m <= upto; m += 2) p.push_back(m);
    return p;
}

inline std::uint64_t vector_total(const std::vector<std::uint64_t>& k) {
    std::uint64_t t = 0;
    for (auto v : k) t += v;
    return t;
}

/// n! / prod(parts_i!)^{k_i}: the composition multinomial of a partition
/// held in exponent form.
inline Int composition_multinomial(std::uint64_t n, const std::vector<std::uint64_t>& parts,
                                   const std::vector<std::uint64_t>& k) {
    Int r = factorial(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (k[i] == 0 || parts[i] <= 1) continue;
        r /= int_pow(factorial(static_cast<std::size_t>(parts[i])), k[i]);
    }
    return r;
}

/// Unit tower spec with base column a_q = 1/(step*q + first)! of the given
/// size; the shared shape of the Laplace-style determinants.
inline TowerSpec reciprocal_factorial_tower(std::size_t size, std::size_t first, std::size_t step) {
    std::vector<Rat> base(size), tower(size);
    for (std::size_t q = 0; q < size; ++q) base[q] = Rat(Int(1), factorial(step * q + first));
    tower[0] = 1;
    return TowerSpec(LttColumn(std::move(base)), std::move(tower));
}

inline Int require_integer(const Rat& r, const char* what) {
    if (!is_integer(r)) throw std::logic_error(std::string(what) + ": non-integer result");
    return rat_num(r);
}

} // namespace detail

/// B_0..B_n from the Pascal-weighted recurrence sum C(n+1, j) B_j = 0.
inline std::vector<Rat> bernoulli_table(std::size_t n) {
    std::vector<Rat> b(n + 1);
    b[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        Rat acc = 0;
        for (std::size_t j = 0; j < m; ++j) acc += Rat(binomial(m + 1, j)) * b[j];
        b[m] = -acc / Rat(Int(m + 1));
    }
    return b;
}

/// E_0..E_n from the reciprocal-cosh recurrence E_{2p} = -sum C(2p,2q) E_{2q}.
inline std::vector<Int> euler_table(std::size_t n) {
    std::vector<Int> e(n + 1);
    e[0] = 1;
    for (std::size_t m = 2; m <= n; m += 2) {
        Int acc = 0;
        for (std::size_t q = 0; q < m; q += 2) acc += binomial(m, q) * e[q];
        e[m] = -acc;
    }
    return e;
}

inline Rat bernoulli(std::size_t n, BernoulliMethod method = BernoulliMethod::recurrence_oracle) {
    using detail::partition_weighted_sum;
    switch (method) {
        case BernoulliMethod::recurrence_oracle:
            return bernoulli_table(n)[n];

        case BernoulliMethod::partition_36a: {
            const auto parts = detail::consecutive_parts(n);
            const Rat sum = partition_weighted_sum(n, parts, [&](const auto& k) {
                Rat w = Rat(ordering_count(k));
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    if (k[i] == 0) continue;
                    w *= rat_pow(Rat(Int(-1), factorial(parts[i] + 1)),
                                 static_cast<long long>(k[i]));
                }
                return w;
            });
            return Rat(factorial(n)) * sum;
        }

        case BernoulliMethod::composition_36b: {
            const auto parts = detail::consecutive_parts(n);
            return partition_weighted_sum(n, parts, [&](const auto& k) {
                const std::uint64_t K = detail::vector_total(k);
                Rat w = Rat(ordering_count(k) * detail::composition_multinomial(n, parts, k));
                if (K % 2) w = -w;
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    if (k[i] == 0) continue;
                    w *= rat_pow(Rat(Int(1), Int(parts[i] + 1)), static_cast<long long>(k[i]));
                }
                return w;
            });
        }

        case BernoulliMethod::vella_35: {
            const auto parts = detail::consecutive_parts(n);
            return partition_weighted_sum(n, parts, [&](const auto& k) {
                const std::uint64_t K = detail::vector_total(k);
                Rat w = Rat(ordering_count(k) * detail::composition_multinomial(n, parts, k)) /
                        Rat(Int(1 + K));
                return (K % 2) ? -w : w;
            });
        }

        case BernoulliMethod::sinh_38: {
            if (n % 2 != 0)
                throw UnsupportedInputError("bernoulli: sinh_38 expands even indices only");
            const std::size_t p = n / 2;
            const auto parts = detail::consecutive_parts(p);
            const Rat sum = partition_weighted_sum(p, parts, [&](const auto& k) {
                Rat w = Rat(ordering_count(k));
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    if (k[i] == 0) continue;
                    w *= rat_pow(Rat(Int(-1), factorial(2 * parts[i] + 1)),
                                 static_cast<long long>(k[i]));
                }
                return w;
            });
            return Rat(factorial(n)) / (Rat(2) - rat_pow(Rat(2), static_cast<long long>(n))) * sum;
        }

        case BernoulliMethod::general_41: {
            if (n == 1)
                throw UnsupportedInputError("bernoulli: general_41 excludes n = 1");
            const auto parts = detail::even_parts(n);
            const Rat sum = partition_weighted_sum(n, parts, [&](const auto& k) {
                const std::uint64_t K = detail::vector_total(k);
                Rat w = Rat(ordering_count(k) * detail::composition_multinomial(n, parts, k));
                if (K % 2) w = -w;
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    if (k[i] == 0) continue;
                    w *= rat_pow(Rat(Int(1), Int(parts[i] + 1)), static_cast<long long>(k[i]));
                }
                return w;
            });
            return sum / (Rat(2) - rat_pow(Rat(2), static_cast<long long>(n)));
        }

        case BernoulliMethod::laplace_det_3: {
            const auto spec = detail::reciprocal_factorial_tower(n + 1, 1, 1);
            return Rat(factorial(n)) * tower_det(spec, TowerDetMode::explicit_bareiss);
        }

        case BernoulliMethod::det_56a: {
            if (n % 2 != 0)
                throw UnsupportedInputError("bernoulli: det_56a expands even indices only");
            const std::size_t p = n / 2;
            const auto spec = detail::reciprocal_factorial_tower(p + 1, 1, 2);
            if (spec.size() != p + 1) throw std::logic_error("det_56a: matrix dimension");
            const Rat det = tower_det(spec, TowerDetMode::explicit_bareiss);
            return -Rat(factorial(n)) / (rat_pow(Rat(2), static_cast<long long>(n)) - Rat(2)) * det;
        }
    }
    throw UnsupportedMethodError("bernoulli: unknown method");
}

inline Int euler_number(std::size_t n, EulerMethod method = EulerMethod::secant_oracle) {
    using detail::partition_weighted_sum;
    switch (method) {
        case EulerMethod::secant_oracle:
            return euler_table(n)[n];

        case EulerMethod::even_partition_39a: {
            if (n % 2 != 0)
                throw UnsupportedInputError("euler_number: even_partition_39a needs an even index");
            const std::size_t p = n / 2;
            const auto parts = detail::consecutive_parts(p);
            const Rat sum = partition_weighted_sum(p, parts, [&](const auto& k) {
                Rat w = Rat(ordering_count(k));
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    if (k[i] == 0) continue;
                    w *= rat_pow(Rat(Int(-1), factorial(2 * parts[i])),
                                 static_cast<long long>(k[i]));
                }
                return w;
            });
            return detail::require_integer(Rat(factorial(n)) * sum, "even_partition_39a");
        }

        case EulerMethod::even_composition_42: {
            const auto parts = detail::even_parts(n);
            const Rat sum = partition_weighted_sum(n, parts, [&](const auto& k) {
                const std::uint64_t K = detail::vector_total(k);
                Rat w = Rat(ordering_count(k) * detail::composition_multinomial(n, parts, k));
                return (K % 2) ? -w : w;
            });
            return detail::require_integer(sum, "even_composition_42");
        }

        case EulerMethod::odd_composition_prop: {
            if (n < 2)
                throw UnsupportedInputError("euler_number: odd_composition_prop needs n >= 2");
            const auto parts = detail::odd_parts(n - 1);
            const Rat sum = partition_weighted_sum(n - 1, parts, [&](const auto& k) {
                const std::uint64_t K = detail::vector_total(k);
                if (K % 2 == 0) return Rat(0);   // only odd part counts contribute
                const std::uint64_t N = (K + 1) / 2;
                Rat w = Rat(ordering_count(k) * detail::composition_multinomial(n - 1, parts, k));
                return (N % 2) ? -w : w;
            });
            return detail::require_integer(sum, "odd_composition_prop");
        }

        case EulerMethod::odd_partition_48: {
            if (n % 2 != 0 || n < 2)
                throw UnsupportedInputError("euler_number: odd_partition_48 expands even n >= 2");
            const std::size_t p = n / 2;
            std::vector<std::uint64_t> parts;       // odd sizes 2m-1, m = 1..p
            for (std::size_t m = 1; m <= p; ++m) parts.push_back(2 * m - 1);
            const Rat sum = partition_weighted_sum(2 * p - 1, parts, [&](const auto& k) {
                Rat w = Rat(ordering_count(k));
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    if (k[i] == 0) continue;
                    const std::size_t m = i + 1;
                    Rat unit = Rat(Int((m % 2) ? -1 : 1), factorial(2 * m - 1));
                    w *= rat_pow(unit, static_cast<long long>(k[i]));
                }
                return w;
            });
            Rat value = Rat(factorial(2 * p - 1)) * sum;
            if (p % 2 == 0) value = -value;         // global (-1)^{p-1}
            return detail::require_integer(value, "odd_partition_48");
        }

        case EulerMethod::det_56b: {
            if (n % 2 != 0)
                throw UnsupportedInputError("euler_number: det_56b expands even indices only");
            const std::size_t p = n / 2;
            const auto spec = detail::reciprocal_factorial_tower(p + 1, 0, 2);
            if (spec.size() != p + 1) throw std::logic_error("det_56b: matrix dimension");
            const Rat det = tower_det(spec, TowerDetMode::explicit_bareiss);
            return detail::require_integer(Rat(factorial(n)) * det, "det_56b");
        }
    }
    throw UnsupportedMethodError("euler_number: unknown method");
}

struct EulerRecursionReport {
    std::size_t p = 0;
    Int lhs;   // a_{2p} from the odd-composition sum
    Int rhs;   // -1 - sum C(2p-1, 2q) 2^{2q-1} a_{2p-2q}
    bool pass = false;
};

/// Checks that the odd-composition sums satisfy the secant-number recursion.
inline EulerRecursionReport euler_recursion_check(std::size_t p) {
    if (p == 0) throw std::out_of_range("euler_recursion_check: p >= 1");
    std::vector<Int> a(p + 1);
    for (std::size_t j = 1; j <= p; ++j)
        a[j] = euler_number(2 * j, EulerMethod::odd_composition_prop);
    Int rhs = -1;
    for (std::size_t q = 1; q < p; ++q)
        rhs -= binomial(2 * p - 1, 2 * q) * int_pow(2, 2 * q - 1) * a[p - q];
    return EulerRecursionReport{p, a[p], rhs, a[p] == rhs};
}

/// B_n(x) via the reciprocal of sum z^k ((1-x)^{k+1} - (-x)^{k+1})/(k+1)!.
inline Rat bernoulli_poly(std::size_t n, const Rat& x) {
    TruncSeries u(n);
    for (std::size_t k = 0; k <= n; ++k) {
        const Rat num = rat_pow(Rat(1) - x, static_cast<long long>(k + 1)) -
                        rat_pow(-x, static_cast<long long>(k + 1));
        u[k] = num / Rat(factorial(k + 1));
    }
    return Rat(factorial(n)) * series_inverse(u)[n];
}

/// E_n(x) via the reciprocal of (1/2) sum z^k ((1-x)^k + (-x)^k)/k!.
inline Rat euler_poly(std::size_t n, const Rat& x) {
    TruncSeries u(n);
    for (std::size_t k = 0; k <= n; ++k) {
        const Rat num = rat_pow(Rat(1) - x, static_cast<long long>(k)) +
                        rat_pow(-x, static_cast<long long>(k));
        u[k] = num / Rat(factorial(k));
    }
    return Rat(2) * Rat(factorial(n)) * series_inverse(u)[n];
}

/// Partial exponential Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}).
inline Rat bell_partial(std::size_t n, std::size_t k, const std::vector<Rat>& xs) {
    if (k > n) throw std::out_of_range("bell_partial: k must not exceed n");
    if (xs.size() != n - k + 1)
        throw ArityError("bell_partial: xs must have n - k + 1 entries");
    const auto parts = detail::consecutive_parts(n - k + 1);
    return detail::partition_weighted_sum(n, parts, [&](const auto& kv) {
        if (detail::vector_total(kv) != k) return Rat(0);
        Rat w = Rat(factorial(n));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (kv[i] == 0) continue;
            w /= Rat(factorial(static_cast<std::size_t>(kv[i])));
            w *= rat_pow(xs[i] / Rat(factorial(parts[i])), static_cast<long long>(kv[i]));
        }
        return w;
    });
}

/// S(n, n-p) by the Bell-polynomial partition sum.
inline Int stirling2(std::size_t n, std::size_t p) {
    if (p > n) throw std::out_of_range("stirling2: p must not exceed n");
    const auto parts = detail::consecutive_parts(p);
    const Rat sum = detail::partition_weighted_sum(p, parts, [&](const auto& k) {
        const std::uint64_t K = detail::vector_total(k);
        Rat w = Rat(binomial(n - p, static_cast<std::size_t>(K)) * ordering_count(k));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (k[i] == 0) continue;
            w *= rat_pow(Rat(Int(1), factorial(parts[i] + 1)), static_cast<long long>(k[i]));
        }
        return w;
    });
    return detail::require_integer(Rat(factorial(n)) / Rat(factorial(n - p)) * sum, "stirling2");
}

/// Coefficient form of the n-th order Bernoulli numbers: p! [z^p] (z/(e^z-1))^order.
inline Rat higher_bernoulli(std::size_t p, std::size_t order) {
    TruncSeries a(p);
    for (std::size_t q = 0; q <= p; ++q) a[q] = Rat(Int(1), factorial(q + 1));
    const TruncSeries c = series_pow_int(a, -static_cast<long long>(order));
    return Rat(factorial(p)) * c[p];
}

/// s(n, n-p) via the higher-order Bernoulli relation.
inline Int stirling1(std::size_t n, std::size_t p) {
    if (n == 0) throw std::out_of_range("stirling1: n >= 1");
    if (p + 1 > n) throw std::out_of_range("stirling1: p must not exceed n - 1");
    const Rat v = Rat(binomial(n - 1, p)) * higher_bernoulli(p, n);
    return detail::require_integer(v, "stirling1");
}

/// s(n, n-p) by the explicit partition sum with binom(n+K-1, K) weights.
inline Int stirling1_partition_sum(std::size_t n, std::size_t p) {
    if (n == 0) throw std::out_of_range("stirling1_partition_sum: n >= 1");
    if (p + 1 > n) throw std::out_of_range("stirling1_partition_sum: p must not exceed n - 1");
    const auto parts = detail::consecutive_parts(p);
    const Rat sum = detail::partition_weighted_sum(p, parts, [&](const auto& k) {
        const std::uint64_t K = detail::vector_total(k);
        Rat w = Rat(binomial(n + static_cast<std::size_t>(K) - 1, static_cast<std::size_t>(K)) *
                    ordering_count(k));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (k[i] == 0) continue;
            w *= rat_pow(Rat(Int(-1), factorial(parts[i] + 1)), static_cast<long long>(k[i]));
        }
        return w;
    });
    return detail::require_integer(
        Rat(factorial(n - 1)) / Rat(factorial(n - p - 1)) * sum, "stirling1_partition_sum");
}

/// Triangle recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1); independent of the
/// series machinery.
inline Int stirling2_triangle(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::vector<std::vector<Int>> s(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        s[i].resize(i + 1);
        s[i][0] = (i == 0) ? 1 : 0;
        for (std::size_t j = 1; j <= i; ++j) {
            s[i][j] = Int(j) * (j < s[i - 1].size() ? s[i - 1][j] : Int(0)) + s[i - 1][j - 1];
        }
    }
    return s[n][k];
}

/// Signed triangle recurrence s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k).
inline Int stirling1_triangle(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::vector<std::vector<Int>> s(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        s[i].resize(i + 1);
        s[i][0] = (i == 0) ? 1 : 0;
        for (std::size_t j = 1; j <= i; ++j) {
            s[i][j] = s[i - 1][j - 1] - Int(i - 1) * (j < s[i - 1].size() ? s[i - 1][j] : Int(0));
        }
    }
    return s[n][k];
}

enum class SpecialDetKind { bernoulli_56a, euler_56b, stirling2_56c, stirling1_56d, laplace_3 };

/// S(n, n-p) as the determinant of I + A^{n-p} E with the unit/-1 tower E.
inline Int stirling2_det_56c(std::size_t n, std::size_t p) {
    if (p > n) throw std::out_of_range("stirling2_det_56c: p must not exceed n");
    std::vector<Rat> base(p + 1);
    for (std::size_t q = 0; q <= p; ++q) base[q] = Rat(Int(1), factorial(q + 1));
    const LttColumn apow = ltt_pow(LttColumn(std::move(base)), Rat(Int(n - p)));
    DenseMatrix m(p + 1);
    for (std::size_t i = 0; i <= p; ++i) m.at(i, i) = 1;
    for (std::size_t i = 0; i <= p; ++i) m.at(i, p) += apow.a[i];   // tower (1,0,..,0,-1)
    m.at(p, p) -= apow.a[0];
    const Rat det = bareiss_det(m);
    return detail::require_integer(Rat(factorial(n)) / Rat(factorial(n - p)) * det,
                                   "stirling2_det_56c");
}

/// s(n, n-p) as the determinant of A^n with the unit/-1 tower added.
inline Int stirling1_det_56d(std::size_t n, std::size_t p) {
    if (n == 0) throw std::out_of_range("stirling1_det_56d: n >= 1");
    if (p + 1 > n) throw std::out_of_range("stirling1_det_56d: p must not exceed n - 1");
    TruncSeries a(p);
    for (std::size_t q = 0; q <= p; ++q) a[q] = Rat(Int(1), factorial(q + 1));
    const Rat det = bareiss_det(build_thm2_matrix(a, -Rat(Int(n)), p));
    return detail::require_integer(
        Rat(factorial(n - 1)) / Rat(factorial(n - p - 1)) * det, "stirling1_det_56d");
}

/// Dispatch over the matrix representations.  Index arguments follow the
/// individual functions: (p) for 56a/56b, (n, p) for 56c/56d, (n) for
/// Laplace's formula.
inline Rat special_determinant(SpecialDetKind kind, std::size_t a, std::size_t b = 0) {
    switch (kind) {
        case SpecialDetKind::bernoulli_56a: return bernoulli(2 * a, BernoulliMethod::det_56a);
        case SpecialDetKind::euler_56b: return Rat(euler_number(2 * a, EulerMethod::det_56b));
        case SpecialDetKind::stirling2_56c: return Rat(stirling2_det_56c(a, b));
        case SpecialDetKind::stirling1_56d: return Rat(stirling1_det_56d(a, b));
        case SpecialDetKind::laplace_3: return bernoulli(a, BernoulliMethod::laplace_det_3);
    }
    throw UnsupportedMethodError("special_determinant: unknown kind");
}

} // namespace seqkernel
