#pragma once

/**
 * @file numeric.hpp
 * @brief Exact scalar layer: arbitrary-precision integers and rationals.
 *
 * Every quantity in this library is an exact integer or an exact rational;
 * nothing is ever rounded.  The representation is Boost.Multiprecision's
 * cpp_int / cpp_rational (header-only, canonical gcd-reduced form with a
 * positive denominator).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "seqkernel/errors.hpp"

namespace seqkernel {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// n! with a per-thread memo table; multinomial loops hit this hard.
inline const Int& factorial(std::size_t n) {
    thread_local std::vector<Int> cache{Int(1)};
    while (cache.size() <= n) {
        cache.push_back(cache.back() * Int(cache.size()));
    }
    return cache[n];
}

/// C(n, k) for non-negative integer n.
inline Int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= Int(n - i);
        r /= Int(i + 1);
    }
    return r;
}

/// Generalized binomial coefficient X(X-1)...(X-N+1)/N! for rational X.
inline Rat gen_binomial(const Rat& x, std::size_t n) {
    Rat r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        r *= x - Rat(Int(i));
    }
    return r / Rat(factorial(n));
}

inline Int int_pow(Int base, unsigned long long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// base^e for a (possibly negative) integer exponent; base must be nonzero
/// when e < 0.
inline Rat rat_pow(const Rat& base, long long e) {
    if (e >= 0) {
        return Rat(int_pow(rat_num(base), static_cast<unsigned long long>(e)),
                   int_pow(rat_den(base), static_cast<unsigned long long>(e)));
    }
    if (base == 0) throw DivisionByZeroError("rat_pow: 0 raised to a negative power");
    const auto m = static_cast<unsigned long long>(-e);
    Int n = int_pow(rat_den(base), m);
    Int d = int_pow(rat_num(base), m);
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rat(n, d);
}

/// Exact floor of the k-th root of a non-negative integer (binary search).
inline Int iroot_floor(const Int& a, unsigned k) {
    if (a < 0) throw std::invalid_argument("iroot_floor: negative radicand");
    if (k == 0) throw std::invalid_argument("iroot_floor: zeroth root");
    if (a == 0 || a == 1 || k == 1) return a;
    Int lo = 1;
    Int hi = 1;
    while (int_pow(hi, k) <= a) hi <<= 1;
    // invariant: lo^k <= a < hi^k
    while (hi - lo > 1) {
        Int mid = (lo + hi) >> 1;
        if (int_pow(mid, k) <= a) lo = mid; else hi = mid;
    }
    return lo;
}

/// Exact k-th root of an integer, if it exists.
inline std::optional<Int> exact_iroot(const Int& a, unsigned k) {
    if (a < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = exact_iroot(-a, k);
        if (!r) return std::nullopt;
        return -*r;
    }
    Int r = iroot_floor(a, k);
    if (int_pow(r, k) == a) return r;
    return std::nullopt;
}

/// Exact k-th root of a rational, if it exists.
inline std::optional<Rat> exact_root(const Rat& a, unsigned k) {
    auto n = exact_iroot(rat_num(a), k);
    if (!n) return std::nullopt;
    auto d = exact_iroot(rat_den(a), k);
    if (!d) return std::nullopt;
    return Rat(*n, *d);
}

/// base^(p/q) when the result is an exact rational, otherwise
/// NotRepresentableError.  base = 1 and integer exponents always succeed.
inline Rat rat_pow_exact(const Rat& base, const Rat& exponent) {
    const Int p = rat_num(exponent);
    const Int q = rat_den(exponent);
    if (q == 1) {
        return rat_pow(base, static_cast<long long>(p));
    }
    if (base == 0) throw DivisionByZeroError("rat_pow_exact: zero base with fractional exponent");
    auto root = exact_root(base, static_cast<unsigned>(q));
    if (!root) {
        throw NotRepresentableError("rat_pow_exact: base has no exact rational root of the required order");
    }
    return rat_pow(*root, static_cast<long long>(p));
}

/// Width in bits of |x| (1 for x = 0); the operand-size metric used by the
/// benchmark harness.
inline std::size_t bit_size(const Int& x) {
    if (x == 0) return 1;
    return static_cast<std::size_t>(boost::multiprecision::msb(abs(x))) + 1;
}

inline std::size_t bit_size(const Rat& x) {
    const std::size_t n = bit_size(rat_num(x));
    const std::size_t d = bit_size(rat_den(x));
    return n > d ? n : d;
}

/// Canonical text form: "num/den", with "/den" omitted for integers.
inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Parses the output of rat_to_string (round-trip exact).
inline Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

} // namespace seqkernel
