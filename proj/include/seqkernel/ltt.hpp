#pragma once

/**
 * @file ltt.hpp
 * @brief Lower-triangular Toeplitz algebra and exact determinants.
 *
 * An LTT matrix is stored as its first column only; the dense form is
 * materialized solely for the fraction-free determinant path.  A "tower"
 * determinant is the determinant of a unit LTT base whose last column is
 * replaced by an arbitrary column t; for a unit base it collapses to the
 * convolution sum det = sum_q t_q b_{k-q} with b the inverse-base column.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "seqkernel/errors.hpp"
#include "seqkernel/numeric.hpp"
#include "seqkernel/series.hpp"

namespace seqkernel {

/// First column a_0..a_k of a lower-triangular Toeplitz matrix.
struct LttColumn {
    std::vector<Rat> a;

    LttColumn() : a(1) {}
    explicit LttColumn(std::vector<Rat> col) : a(std::move(col)) {
        if (a.empty()) a.resize(1);
    }
    LttColumn(std::initializer_list<int> ints) {
        for (int v : ints) a.emplace_back(v);
        if (a.empty()) a.resize(1);
    }

    std::size_t size() const { return a.size(); }
    bool operator==(const LttColumn& o) const { return a == o.a; }

    TruncSeries to_series() const { return TruncSeries(a); }
    static LttColumn from_series(const TruncSeries& s) { return LttColumn(s.coeffs()); }
};

/// Square matrix of exact rationals, row-major.
class DenseMatrix {
public:
    explicit DenseMatrix(std::size_t n) : n_(n), e_(n * n) {}

    std::size_t rows() const { return n_; }
    Rat& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    bool operator==(const DenseMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

private:
    std::size_t n_;
    std::vector<Rat> e_;
};

/// Dense (k+1)x(k+1) materialization of an LTT column.
inline DenseMatrix to_dense(const LttColumn& col) {
    const std::size_t n = col.size();
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            m.at(i, j) = col.a[i - j];
    return m;
}

namespace detail {

/// Bareiss fraction-free elimination over integers.  Divisions are exact;
/// entry growth stays polynomial where naive expansion is exponential.
inline Int bareiss_int_det(std::vector<std::vector<Int>>& m, std::size_t* peak_bits = nullptr) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                if (peak_bits) {
                    const std::size_t b = bit_size(m[i][j]);
                    if (b > *peak_bits) *peak_bits = b;
                }
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

} // namespace detail

/// Exact determinant.  Rows are scaled to integers first so the elimination
/// itself runs fraction-free.
inline Rat bareiss_det(const DenseMatrix& mat, std::size_t* peak_bits = nullptr) {
    const std::size_t n = mat.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    Rat scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const Int d = rat_den(mat.at(i, j));
            l = lcm(l, d);
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Rat v = mat.at(i, j) * Rat(l);
            m[i][j] = rat_num(v);
        }
        scale *= Rat(Int(1), l);
    }
    return scale * Rat(detail::bareiss_int_det(m, peak_bits));
}

/// Inverse column: identical to series_inverse of the corresponding series.
inline LttColumn ltt_inverse(const LttColumn& col) {
    if (col.a[0] == 0) throw SingularMatrixError("ltt_inverse: zero diagonal");
    return LttColumn::from_series(series_inverse(col.to_series()));
}

/// "Base + tower" determinant: first k columns from a unit LTT base, last
/// column replaced by the tower.
struct TowerSpec {
    LttColumn base;          // a_0 must equal 1
    std::vector<Rat> tower;  // same length as base

    TowerSpec(LttColumn b, std::vector<Rat> t) : base(std::move(b)), tower(std::move(t)) {
        if (base.size() != tower.size())
            throw OrderMismatchError("TowerSpec: base and tower lengths differ");
    }
    TowerSpec(const TruncSeries& b, const TruncSeries& t)
        : TowerSpec(LttColumn::from_series(b), t.coeffs()) {}

    std::size_t size() const { return base.size(); }
};

enum class TowerDetMode { fast_convolution, explicit_bareiss };

/// Dense form of a tower spec (for the explicit determinant path and tests).
inline DenseMatrix tower_matrix(const TowerSpec& spec) {
    const std::size_t n = spec.size();
    DenseMatrix m(n);
    for (std::size_t j = 0; j + 1 < n; ++j)
        for (std::size_t i = j; i < n; ++i)
            m.at(i, j) = spec.base.a[i - j];
    for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = spec.tower[i];
    return m;
}

inline Rat tower_det(const TowerSpec& spec, TowerDetMode mode = TowerDetMode::fast_convolution) {
    if (spec.base.a[0] != 1)
        throw UnsupportedBaseError("tower_det: base is not unit-diagonal");
    if (mode == TowerDetMode::explicit_bareiss) {
        return bareiss_det(tower_matrix(spec));
    }
    const std::size_t k = spec.size() - 1;
    const LttColumn b = ltt_inverse(spec.base);
    Rat acc = 0;
    for (std::size_t q = 0; q <= k; ++q) {
        if (spec.tower[q] == 0) continue;
        acc += spec.tower[q] * b.a[k - q];
    }
    return acc;
}

} // namespace seqkernel
