#pragma once

/**
 * @file partitions.hpp
 * @brief The partition function p(n) by four routes, restricted and distinct
 *        partition counts, and the weighted-sum determinants.
 *
 * Routes for p(n):
 *   - pentagonal_sum: signed multinomial sum over the partitions of n into
 *     generalized pentagonal numbers;
 *   - series: coefficient n of the inverse of Euler's product;
 *   - determinant: (n+1)x(n+1) unit-tower determinant over the pentagonal
 *     base column (explicit elimination up to n = 60, convolution beyond);
 *   - recurrence: p(n) = p(n-1) + p(n-2) - p(n-5) - p(n-7) + ...
 */

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "seqkernel/combinatorics.hpp"
#include "seqkernel/errors.hpp"
#include "seqkernel/ltt.hpp"
#include "seqkernel/numeric.hpp"
#include "seqkernel/series.hpp"
#include "seqkernel/series_pow.hpp"

namespace seqkernel {

enum class PartitionMethod { pentagonal_sum, series, determinant, recurrence };

/// p(0..n) by the pentagonal recurrence.
inline std::vector<Int> partition_numbers_upto(std::size_t n) {
    std::vector<Int> p(n + 1);
    p[0] = 1;
    const auto offsets = gpn_upto(n);
    for (std::size_t i = 1; i <= n; ++i) {
        Int acc = 0;
        for (const auto& [q, m] : offsets) {
            if (q > i) break;
            const Int& prev = p[i - q];
            if (m % 2 == 0) acc -= prev; else acc += prev;
        }
        p[i] = acc;
    }
    return p;
}

/// Process-wide write-once cache of p(0..n).  Readers get an immutable
/// snapshot; concurrent fills agree because the recurrence is deterministic.
inline std::shared_ptr<const std::vector<Int>> cached_partition_values(std::size_t n) {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<Int>> table;
    std::lock_guard<std::mutex> lock(mu);
    if (!table || table->size() <= n) {
        table = std::make_shared<const std::vector<Int>>(partition_numbers_upto(n));
    }
    return table;
}

namespace detail {

/// Signed multinomial sum over pentagonal partitions; peak_bits reports the
/// largest operand seen (benchmark instrumentation).
inline Int partition_pentagonal_sum(std::size_t n, std::size_t* peak_bits = nullptr) {
    if (n == 0) return 1;
    const auto gpns = gpn_upto(n);
    std::vector<std::uint64_t> parts;
    std::vector<bool> sign_flip;   // parts of even GPN index flip the sign
    parts.reserve(gpns.size());
    for (const auto& [q, m] : gpns) {
        parts.push_back(q);
        sign_flip.push_back(m % 2 == 0);
    }
    Int total = 0;
    for_each_exponent_vector(n, parts, [&](const std::vector<std::uint64_t>& k) {
        std::uint64_t flips = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (sign_flip[i]) flips += k[i];
        Int term = ordering_count(k);
        if (peak_bits) {
            const std::size_t b = bit_size(term);
            if (b > *peak_bits) *peak_bits = b;
        }
        if (flips % 2) total -= term; else total += term;
        if (peak_bits) {
            const std::size_t b = bit_size(total);
            if (b > *peak_bits) *peak_bits = b;
        }
    });
    return total;
}

inline Int partition_tower_determinant(std::size_t n, TowerDetMode mode) {
    // k = n: unit tower entry sits at row k - n = 0
    std::vector<Rat> tower(n + 1);
    tower[0] = 1;
    TowerSpec spec(LttColumn::from_series(pentagonal_series(n)), std::move(tower));
    const Rat det = tower_det(spec, mode);
    return rat_num(det);
}

} // namespace detail

inline Int partition_number(std::size_t n, PartitionMethod method = PartitionMethod::series) {
    switch (method) {
        case PartitionMethod::pentagonal_sum:
            return detail::partition_pentagonal_sum(n);
        case PartitionMethod::series:
            return rat_num(series_inverse(pentagonal_series(n))[n]);
        case PartitionMethod::determinant:
            return detail::partition_tower_determinant(
                n, n <= 60 ? TowerDetMode::explicit_bareiss : TowerDetMode::fast_convolution);
        case PartitionMethod::recurrence:
            return partition_numbers_upto(n)[n];
    }
    throw UnsupportedMethodError("partition_number: unknown method");
}

/// Tower column for partitions with no part repeated more than D times:
/// (-1)^m at q = (D+1) * gpn(m), including the m = 0 entry.
inline std::vector<Rat> restricted_tower(std::size_t D, std::size_t n) {
    std::vector<Rat> t(n + 1);
    t[0] = 1;
    for (const auto& [q, m] : gpn_upto(n / (D + 1))) {
        t[q * (D + 1)] = (m % 2 == 0) ? 1 : -1;
    }
    return t;
}

/// Number of partitions of n in which no part occurs more than D times.
inline Int restricted_partition_number(std::size_t D, std::size_t n,
                                       TowerDetMode mode = TowerDetMode::fast_convolution) {
    if (D == 0)
        throw DegenerateCaseError("restricted_partition_number: D = 0 collapses to the pentagonal recurrence");
    TowerSpec spec(LttColumn::from_series(pentagonal_series(n)), restricted_tower(D, n));
    return rat_num(tower_det(spec, mode));
}

/// Alternating-p(n) evaluation of the same count: p_D(n) = sum over m of
/// (-1)^m p(n - (D+1) gpn(m)).
inline Int restricted_partition_alternating(std::size_t D, std::size_t n) {
    if (D == 0)
        throw DegenerateCaseError("restricted_partition_alternating: D = 0");
    const auto p = cached_partition_values(n);
    Int acc = (*p)[n];   // m = 0 term
    for (const auto& [q, m] : gpn_upto(n / (D + 1))) {
        const Int& prev = (*p)[n - q * (D + 1)];
        if (m % 2 == 0) acc += prev; else acc -= prev;
    }
    return acc;
}

/// Partitions of n into distinct parts (equivalently, into odd parts).
inline Int distinct_partition_number(std::size_t n,
                                     TowerDetMode mode = TowerDetMode::fast_convolution) {
    return restricted_partition_number(1, n, mode);
}

/// The n x n all-integer determinant form of p(n): -J^T plus shifted
/// pentagonal stripes, assembled from powers of the lower shift matrix.
inline DenseMatrix partition_matrix_nxn(std::size_t n) {
    DenseMatrix m(n);
    auto add_jpow = [&](std::uint64_t e, const Rat& w) {
        for (std::size_t i = e; i < n; ++i) m.at(i, i - e) += w;
    };
    for (std::size_t i = 0; i + 1 < n; ++i) m.at(i, i + 1) = -1;
    for (const auto& [q, mm] : gpn_upto(n)) {
        if (q == 0) continue;
        add_jpow(q - 1, (mm % 2 == 0) ? Rat(-1) : Rat(1));
    }
    return m;
}

enum class WeightedSumMode { direct, det_c1, det_c2 };

/// The k x k banded matrix whose determinant is sum_{n<=k} p(n) x^n,
/// assembled from shift-matrix powers: -x J^T + I plus pentagonal stripes
/// at exponents q_m and q_m - 1.
inline DenseMatrix weighted_sum_matrix(const Rat& x, std::size_t k) {
    DenseMatrix m(k);
    auto add_jpow = [&](std::uint64_t e, const Rat& w) {
        if (e >= k) return;
        for (std::size_t i = e; i < k; ++i) m.at(i, i - e) += w;
    };
    for (std::size_t i = 0; i + 1 < k; ++i) m.at(i, i + 1) = -x;
    for (std::size_t i = 0; i < k; ++i) m.at(i, i) += 1;
    for (const auto& [q, mm] : gpn_upto(2 * k + 2)) {
        const Rat sign = (mm % 2 == 0) ? Rat(1) : Rat(-1);
        add_jpow(q, sign);
        add_jpow(q - 1, -x * sign);
    }
    return m;
}

/// Finite weighted sum of partition numbers, sum_{n=0}^{k} p(n) x^n.
inline Rat weighted_partition_sum(const Rat& x, std::size_t k, WeightedSumMode mode) {
    switch (mode) {
        case WeightedSumMode::direct: {
            const auto p = cached_partition_values(k);
            Rat acc = 0;
            Rat xn = 1;
            for (std::size_t n = 0; n <= k; ++n) {
                acc += Rat((*p)[n]) * xn;
                xn *= x;
            }
            return acc;
        }
        case WeightedSumMode::det_c1: {
            if (x == 0)
                throw DivisionByZeroError("weighted_partition_sum: det_c1 tower needs x != 0");
            std::vector<Rat> tower(k + 1);
            for (std::size_t q = 0; q <= k; ++q) tower[q] = rat_pow(x, -static_cast<long long>(q));
            TowerSpec spec(LttColumn::from_series(pentagonal_series(k)), std::move(tower));
            return rat_pow(x, static_cast<long long>(k)) *
                   tower_det(spec, TowerDetMode::explicit_bareiss);
        }
        case WeightedSumMode::det_c2:
            return bareiss_det(weighted_sum_matrix(x, k));
    }
    throw UnsupportedMethodError("weighted_partition_sum: unknown mode");
}

} // namespace seqkernel
