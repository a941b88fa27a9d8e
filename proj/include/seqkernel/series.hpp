#pragma once

/**
 * @file series.hpp
 * @brief Truncated formal power series with exact rational coefficients.
 *
 * A TruncSeries carries its truncation order explicitly: coefficients
 * c_0..c_L are exact through index L and make no claim beyond it.  Binary
 * operations require equal orders; nothing truncates silently.
 */

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "seqkernel/errors.hpp"
#include "seqkernel/numeric.hpp"

namespace seqkernel {

class TruncSeries {
public:
    TruncSeries() : coeffs_(1) {}

    /// Zero series of the given order (L+1 stored coefficients).
    explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}

    explicit TruncSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.resize(1);
    }

    TruncSeries(std::initializer_list<int> ints) {
        for (int v : ints) coeffs_.emplace_back(v);
        if (coeffs_.empty()) coeffs_.resize(1);
    }

    static TruncSeries unit(std::size_t order) {
        TruncSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    std::size_t size() const { return coeffs_.size(); }

    const Rat& operator[](std::size_t i) const { return coeffs_[i]; }
    Rat& operator[](std::size_t i) { return coeffs_[i]; }

    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }

    bool is_integral() const {
        for (const Rat& c : coeffs_)
            if (!is_integer(c)) return false;
        return true;
    }

    /// First L+1 coefficients as a shorter series (L <= order).
    TruncSeries prefix(std::size_t new_order) const {
        if (new_order > order()) throw std::out_of_range("TruncSeries::prefix: order grows");
        return TruncSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    /// Same coefficients re-held at a larger order (high part zero).
    TruncSeries extended(std::size_t new_order) const {
        if (new_order < order()) throw std::out_of_range("TruncSeries::extended: order shrinks");
        std::vector<Rat> c(coeffs_);
        c.resize(new_order + 1);
        return TruncSeries(std::move(c));
    }

    /// Argument substitution q -> q^s, truncated at the given order.
    TruncSeries substituted(std::size_t scale, std::size_t new_order) const {
        if (scale == 0) throw std::invalid_argument("TruncSeries::substituted: zero scale");
        TruncSeries r(new_order);
        for (std::size_t j = 0; j < coeffs_.size() && j * scale <= new_order; ++j) {
            r.coeffs_[j * scale] = coeffs_[j];
        }
        return r;
    }

    /// Multiplication by q^s, truncated at the same order.
    TruncSeries shifted(std::size_t s) const {
        TruncSeries r(order());
        for (std::size_t i = s; i <= order(); ++i) r.coeffs_[i] = coeffs_[i - s];
        return r;
    }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) out += ", ";
            out += rat_to_string(coeffs_[i]);
        }
        return out + ")";
    }

private:
    std::vector<Rat> coeffs_;
};

inline void require_same_order(const TruncSeries& a, const TruncSeries& b, const char* what) {
    if (a.order() != b.order()) {
        throw OrderMismatchError(std::string(what) + ": operand orders " +
                                 std::to_string(a.order()) + " and " + std::to_string(b.order()));
    }
}

/// Cauchy product through the common truncation order.
inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b, "series_mul");
    const std::size_t L = a.order();
    TruncSeries r(L);
    for (std::size_t p = 0; p <= L; ++p) {
        Rat acc = 0;
        for (std::size_t q = 0; q <= p; ++q) {
            if (a[q] == 0 || b[p - q] == 0) continue;
            acc += a[q] * b[p - q];
        }
        r[p] = acc;
    }
    return r;
}

/// Multiplicative inverse: b_0 = 1/a_0, b_p = -(1/a_0) * sum a_q b_{p-q}.
inline TruncSeries series_inverse(const TruncSeries& a) {
    if (a[0] == 0) throw ZeroConstantTermError("series_inverse: constant term is zero");
    const std::size_t L = a.order();
    TruncSeries b(L);
    const Rat inv0 = Rat(1) / a[0];
    b[0] = inv0;
    for (std::size_t p = 1; p <= L; ++p) {
        Rat acc = 0;
        for (std::size_t q = 1; q <= p; ++q) {
            if (a[q] == 0) continue;
            acc += a[q] * b[p - q];
        }
        b[p] = -inv0 * acc;
    }
    return b;
}

inline TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b, "series_add");
    TruncSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b, "series_sub");
    TruncSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline TruncSeries series_scale(const Rat& s, const TruncSeries& a) {
    TruncSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) r[i] = s * a[i];
    return r;
}

inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return series_mul(a, b); }
inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return series_add(a, b); }
inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return series_sub(a, b); }

} // namespace seqkernel
