#pragma once

#include "zmx/errors.hpp"
#include "zmx/rational.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace zmx {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Square dense matrix of exact rationals. Storage is 0-based as usual for
/// Eigen; everything user-facing (IndexSet, vertices, I/O) is 1-based.
using Matrix = DenseMatrix<Rational>;

/// Builds a matrix from integer rows. Rows must all have the same length.
Matrix matrix_from_rows(std::initializer_list<std::initializer_list<long long>> rows);
Matrix matrix_from_rows(const std::vector<std::vector<Rational>>& rows);

/// Ascending set of 1-based indices drawn from {1, ..., base}.
///
/// The empty set is representable; it arises as the complement of the full set,
/// and the determinant over it is 1.
class IndexSet {
public:
    IndexSet(int base, std::vector<int> members);

    static IndexSet full(int base);
    /// Bit k of `mask` selects index k + 1.
    static IndexSet from_mask(int base, std::uint64_t mask);

    int base() const noexcept { return base_; }
    int size() const noexcept { return static_cast<int>(members_.size()); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<int>& members() const noexcept { return members_; }
    bool contains(int index) const;

    IndexSet complement() const;
    /// Sum of the members, as used in cofactor sign exponents.
    long index_sum() const;
    std::vector<Eigen::Index> zero_based() const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    int base_;
    std::vector<int> members_;
};

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a) {
    if (a.rows() != a.cols()) {
        throw Error("matrix must be square");
    }
}

/// Determinant by Bareiss fraction-free elimination with row swaps on zero pivots.
/// The 0x0 determinant is 1.
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    require_square(a);
    const Eigen::Index n = a.rows();
    if (n == 0) {
        return Scalar(1);
    }
    DenseMatrix<Scalar> m = a;
    Scalar previous(1);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == Scalar(0)) {
            Eigen::Index pivot = k + 1;
            while (pivot < n && m(pivot, k) == Scalar(0)) {
                ++pivot;
            }
            if (pivot == n) {
                return Scalar(0);
            }
            m.row(k).swap(m.row(pivot));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
            }
        }
        previous = m(k, k);
    }
    return negate ? Scalar(-m(n - 1, n - 1)) : Scalar(m(n - 1, n - 1));
}

/// Exact inverse by Gauss-Jordan elimination. Throws SingularError when det(a) = 0.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    require_square(a);
    const Eigen::Index n = a.rows();
    DenseMatrix<Scalar> m = a;
    DenseMatrix<Scalar> inv = DenseMatrix<Scalar>::Identity(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = k;
        while (pivot < n && m(pivot, k) == Scalar(0)) {
            ++pivot;
        }
        if (pivot == n) {
            throw SingularError();
        }
        if (pivot != k) {
            m.row(k).swap(m.row(pivot));
            inv.row(k).swap(inv.row(pivot));
        }
        const Scalar scale = Scalar(1) / m(k, k);
        m.row(k) *= scale;
        inv.row(k) *= scale;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == k || m(i, k) == Scalar(0)) {
                continue;
            }
            const Scalar factor = m(i, k);
            m.row(i) -= factor * m.row(k);
            inv.row(i) -= factor * inv.row(k);
        }
    }
    return inv;
}

/// A[rows | cols] with 1-based index sets.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> submatrix(const Eigen::MatrixBase<Derived>& a,
                                                const IndexSet& rows, const IndexSet& cols) {
    return a(rows.zero_based(), cols.zero_based());
}

/// det A[S]; S must be drawn from {1, ..., n}.
Rational principal_minor(const Matrix& a, const IndexSet& s);

/// Checks det B[alpha|beta] = (gamma / det A) * det A[beta'|alpha'] for B = A^{-1},
/// where gamma = (-1)^(sum alpha + sum beta). Throws SingularError for singular A.
bool complementary_minor_check(const Matrix& a, const IndexSet& alpha, const IndexSet& beta);

/// Entrywise sign tests (strict versions use >/<).
bool all_positive(const Matrix& a);
bool all_negative(const Matrix& a);
bool all_nonnegative(const Matrix& a);
bool all_nonpositive(const Matrix& a);

}  // namespace zmx
