#pragma once

/**
 * @file combinatorics.hpp
 * @brief Restricted partition/composition enumeration, multinomials, and the
 *        pentagonal-number machinery behind Euler's product expansion.
 *
 * The partition stream enumerates exponent vectors (k_1, ..., k_P) with
 * sum k_i * part_i = n, exactly once each, in lexicographically increasing
 * order of k, without materializing the whole set.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "seqkernel/numeric.hpp"
#include "seqkernel/series.hpp"

namespace seqkernel {

/// Generalized pentagonal number (3m^2 - m)/2 for any integer m.
inline std::uint64_t gpn(std::int64_t m) {
    const std::int64_t v = (3 * m * m - m) / 2;
    return static_cast<std::uint64_t>(v);
}

/// Positive GPNs <= n paired with their index m, ascending.
/// Index order m = 1, -1, 2, -2, ... yields 1, 2, 5, 7, 12, 15, ...
inline std::vector<std::pair<std::uint64_t, std::int64_t>> gpn_upto(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::int64_t>> out;
    for (std::int64_t m = 1;; ++m) {
        const std::uint64_t plus = gpn(m);
        if (plus > n) break;
        out.emplace_back(plus, m);
        const std::uint64_t minus = gpn(-m);
        if (minus <= n) out.emplace_back(minus, -m);
    }
    return out;
}

/// A set of allowed part sizes, strictly increasing.
struct PartSet {
    std::vector<std::uint64_t> allowed;
    std::string label;
};

inline PartSet all_parts(std::uint64_t n, std::string label = "all") {
    PartSet p{{}, std::move(label)};
    for (std::uint64_t m = 1; m <= n; ++m) p.allowed.push_back(m);
    if (p.allowed.empty()) p.allowed.push_back(1);
    return p;
}

inline PartSet pentagonal_parts(std::uint64_t n) {
    PartSet p{{}, "pentagonal"};
    for (const auto& [q, m] : gpn_upto(n)) p.allowed.push_back(q);
    if (p.allowed.empty()) p.allowed.push_back(1);
    return p;
}

/// One term of a restricted-partition sum: the exponent vector k aligned
/// with its part sizes.
struct ExponentVector {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> parts;
    std::vector<std::uint64_t> k;
};

/**
 * Caller-driven stream over the exponent vectors of n for a fixed part set.
 *
 * The last exponent is determined by the remainder; the free prefix runs
 * through an odometer whose rightmost position moves fastest, which is
 * exactly lexicographic order on the full vector.
 */
class RestrictedPartitionStream {
public:
    RestrictedPartitionStream(std::uint64_t n, std::vector<std::uint64_t> parts)
        : n_(n), parts_(std::move(parts)), k_(parts_.size(), 0) {
        if (parts_.empty()) throw std::invalid_argument("RestrictedPartitionStream: empty part set");
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
            if (parts_[i] >= parts_[i + 1])
                throw std::invalid_argument("RestrictedPartitionStream: parts not strictly increasing");
        }
        if (parts_[0] == 0) throw std::invalid_argument("RestrictedPartitionStream: zero part");
    }

    /// Next exponent vector, or nullptr when exhausted.  The pointee is
    /// owned by the stream and overwritten by the following call.
    const std::vector<std::uint64_t>* next() {
        while (!done_) {
            if (first_) {
                first_ = false;      // all-zero prefix is the first candidate
            } else if (!advance_prefix()) {
                done_ = true;
                break;
            }
            const std::uint64_t rem = n_ - prefix_weight_;
            const std::uint64_t last = parts_.back();
            if (rem % last == 0) {
                k_.back() = rem / last;
                return &k_;
            }
        }
        return nullptr;
    }

    const std::vector<std::uint64_t>& parts() const { return parts_; }

private:
    bool advance_prefix() {
        if (parts_.size() == 1) return false;
        std::size_t j = parts_.size() - 1;   // free positions are 0..j-1
        while (j-- > 0) {
            if (prefix_weight_ + parts_[j] <= n_) {
                ++k_[j];
                prefix_weight_ += parts_[j];
                return true;
            }
            prefix_weight_ -= k_[j] * parts_[j];
            k_[j] = 0;
        }
        return false;
    }

    std::uint64_t n_;
    std::vector<std::uint64_t> parts_;
    std::vector<std::uint64_t> k_;
    std::uint64_t prefix_weight_ = 0;
    bool first_ = true;
    bool done_ = false;
};

/// Visits every exponent vector of n over the given parts, in lex order.
template <typename F>
void for_each_exponent_vector(std::uint64_t n, const std::vector<std::uint64_t>& parts, F&& visit) {
    RestrictedPartitionStream stream(n, parts);
    while (const auto* k = stream.next()) visit(*k);
}

inline std::uint64_t count_exponent_vectors(std::uint64_t n, const std::vector<std::uint64_t>& parts) {
    std::uint64_t c = 0;
    for_each_exponent_vector(n, parts, [&](const std::vector<std::uint64_t>&) { ++c; });
    return c;
}

/// Materialized vectors for small n; the streaming form is the workhorse.
inline std::vector<ExponentVector> list_exponent_vectors(std::uint64_t n,
                                                         const std::vector<std::uint64_t>& parts) {
    std::vector<ExponentVector> out;
    for_each_exponent_vector(n, parts, [&](const std::vector<std::uint64_t>& k) {
        out.push_back(ExponentVector{n, parts, k});
    });
    return out;
}

/// Multinomial coefficient n!/(q_1! ... q_K!) carrying the Kronecker delta:
/// zero unless the entries sum to n.
inline Int multinomial(std::uint64_t n, const std::vector<std::uint64_t>& qs) {
    std::uint64_t total = 0;
    for (std::uint64_t q : qs) total += q;
    if (total != n) return 0;
    Int r = factorial(static_cast<std::size_t>(n));
    for (std::uint64_t q : qs) {
        if (q > 1) r /= factorial(static_cast<std::size_t>(q));
    }
    return r;
}

/// K!/(k_1! ... k_P!) where K = sum k_i: the number of distinct orderings of
/// a partition held in exponent form.
inline Int ordering_count(const std::vector<std::uint64_t>& k) {
    std::uint64_t K = 0;
    for (std::uint64_t v : k) K += v;
    Int r = factorial(static_cast<std::size_t>(K));
    for (std::uint64_t v : k) {
        if (v > 1) r /= factorial(static_cast<std::size_t>(v));
    }
    return r;
}

/**
 * Visits every composition of n (ordered sequences of positive parts),
 * including the empty composition of 0.  Exponential in n; retained as the
 * small-n reference against which the weighted partition sums are checked.
 */
template <typename F>
void for_each_composition(std::uint64_t n, F&& visit) {
    std::vector<std::uint64_t> parts;
    auto rec = [&](auto&& self, std::uint64_t rem) -> void {
        if (rem == 0) {
            visit(const_cast<const std::vector<std::uint64_t>&>(parts));
            return;
        }
        for (std::uint64_t q = 1; q <= rem; ++q) {
            parts.push_back(q);
            self(self, rem - q);
            parts.pop_back();
        }
    };
    rec(rec, n);
}

/// Euler's product prod (1 - z^k) truncated at L; coefficient q is (-1)^m
/// when q is the generalized pentagonal number of index m, else 0.
inline TruncSeries pentagonal_series(std::size_t L) {
    TruncSeries s(L);
    s[0] = 1;
    for (const auto& [q, m] : gpn_upto(L)) {
        s[q] = (m % 2 == 0) ? 1 : -1;
    }
    return s;
}

/// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}.
inline Int fibonacci(std::size_t n) {
    Int a = 0, b = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int next = a + b;
        a = b;
        b = next;
    }
    return a;
}

/// Alternating multinomial sum over all compositions of p; equals (-1)^p.
inline Int corollary_identity(std::uint64_t p) {
    Int total = 0;
    for_each_composition(p, [&](const std::vector<std::uint64_t>& parts) {
        const Int term = multinomial(p, parts);
        if (parts.size() % 2 == 0) total += term; else total -= term;
    });
    return total;
}

} // namespace seqkernel
