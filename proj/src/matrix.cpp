#include "zmx/matrix.hpp"

#include <algorithm>

namespace zmx {

Matrix matrix_from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Rational>> grid;
    grid.reserve(rows.size());
    for (const auto& row : rows) {
        grid.emplace_back(row.begin(), row.end());
    }
    return matrix_from_rows(grid);
}

Matrix matrix_from_rows(const std::vector<std::vector<Rational>>& rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto m = n == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
    Matrix a(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != m) {
            throw Error("ragged rows in matrix literal");
        }
        for (Eigen::Index j = 0; j < m; ++j) {
            a(i, j) = rows[i][j];
        }
    }
    return a;
}

IndexSet::IndexSet(int base, std::vector<int> members) : base_(base), members_(std::move(members)) {
    if (base_ < 0) {
        throw Error("index set base must be nonnegative");
    }
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (members_[k] < 1 || members_[k] > base_) {
            throw Error("index " + std::to_string(members_[k]) + " outside 1.." +
                        std::to_string(base_));
        }
        if (k > 0 && members_[k] <= members_[k - 1]) {
            throw Error("index set must be strictly ascending");
        }
    }
}

IndexSet IndexSet::full(int base) {
    std::vector<int> members(static_cast<std::size_t>(base));
    for (int k = 0; k < base; ++k) {
        members[k] = k + 1;
    }
    return IndexSet(base, std::move(members));
}

IndexSet IndexSet::from_mask(int base, std::uint64_t mask) {
    std::vector<int> members;
    for (int k = 0; k < base; ++k) {
        if (mask & (std::uint64_t{1} << k)) {
            members.push_back(k + 1);
        }
    }
    return IndexSet(base, std::move(members));
}

bool IndexSet::contains(int index) const {
    return std::binary_search(members_.begin(), members_.end(), index);
}

IndexSet IndexSet::complement() const {
    std::vector<int> rest;
    for (int k = 1; k <= base_; ++k) {
        if (!contains(k)) {
            rest.push_back(k);
        }
    }
    return IndexSet(base_, std::move(rest));
}

long IndexSet::index_sum() const {
    long sum = 0;
    for (int k : members_) {
        sum += k;
    }
    return sum;
}

std::vector<Eigen::Index> IndexSet::zero_based() const {
    std::vector<Eigen::Index> out;
    out.reserve(members_.size());
    for (int k : members_) {
        out.push_back(k - 1);
    }
    return out;
}

Rational principal_minor(const Matrix& a, const IndexSet& s) {
    require_square(a);
    if (s.base() != a.rows()) {
        throw Error("index set base does not match matrix order");
    }
    return det(submatrix(a, s, s));
}

bool complementary_minor_check(const Matrix& a, const IndexSet& alpha, const IndexSet& beta) {
    require_square(a);
    if (alpha.size() != beta.size()) {
        throw Error("row and column index sets must have equal size");
    }
    if (alpha.base() != a.rows() || beta.base() != a.rows()) {
        throw Error("index set base does not match matrix order");
    }
    const Rational det_a = det(a);
    if (det_a == 0) {
        throw SingularError();
    }
    const Matrix b = inverse(a);
    const Rational lhs = det(submatrix(b, alpha, beta));
    const Rational gamma = (alpha.index_sum() + beta.index_sum()) % 2 == 0 ? 1 : -1;
    const Rational rhs = gamma / det_a * det(submatrix(a, beta.complement(), alpha.complement()));
    return lhs == rhs;
}

bool all_positive(const Matrix& a) {
    return (a.array() > Rational(0)).all();
}

bool all_negative(const Matrix& a) {
    return (a.array() < Rational(0)).all();
}

bool all_nonnegative(const Matrix& a) {
    return (a.array() >= Rational(0)).all();
}

bool all_nonpositive(const Matrix& a) {
    return (a.array() <= Rational(0)).all();
}

}  // namespace zmx
