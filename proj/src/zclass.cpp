#include "zmx/zclass.hpp"

#include "zmx/graph.hpp"

#include <algorithm>
#include <bit>

namespace zmx {

namespace {

int order_of(const Matrix& a) {
    require_square(a);
    return static_cast<int>(a.rows());
}

void check_cap(int n, int cap) {
    if (n > cap) {
        throw OrderCapExceeded(n, cap);
    }
}

// Taxonomy predicates over the minor-sign profile of a Z-matrix.
bool floor_at_least(const std::vector<int>& floor, int up_to, int bound) {
    for (int k = 1; k <= up_to; ++k) {
        if (floor[k] < bound) {
            return false;
        }
    }
    return true;
}

int l_index_from(const std::vector<int>& floor) {
    const int n = static_cast<int>(floor.size()) - 1;
    for (int k = 1; k <= n; ++k) {
        if (floor[k] < 0) {
            return k - 1;
        }
    }
    return n;
}

bool n_from(const std::vector<int>& floor) {
    const int n = static_cast<int>(floor.size()) - 1;
    return n >= 2 && floor_at_least(floor, n - 1, 1) && floor[n] < 0;
}

bool n0_from(const std::vector<int>& floor) {
    const int n = static_cast<int>(floor.size()) - 1;
    return floor_at_least(floor, n - 1, 0) && floor[n] < 0;
}

bool f0_from(const std::vector<int>& floor) {
    const int n = static_cast<int>(floor.size()) - 1;
    return n >= 3 && floor_at_least(floor, n - 2, 0) && floor[n - 1] < 0;
}

}  // namespace

bool is_z(const Matrix& a) {
    const int n = order_of(a);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && a(i, j) > 0) {
                return false;
            }
        }
    }
    return true;
}

ZRepresentation z_decompose(const Matrix& a, const Rational& t) {
    const int n = order_of(a);
    if (!is_z(a)) {
        throw NotZMatrix();
    }
    for (int i = 0; i < n; ++i) {
        if (a(i, i) > t) {
            throw TTooSmall("t = " + to_string(t) + " is below diagonal entry a_" +
                            std::to_string(i + 1) + std::to_string(i + 1) + " = " +
                            to_string(a(i, i)));
        }
    }
    Matrix b = t * Matrix::Identity(n, n) - a;
    return ZRepresentation{t, std::move(b)};
}

std::vector<int> principal_minor_signs(const Matrix& a, int order_cap) {
    const int n = order_of(a);
    check_cap(n, order_cap);
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<int> signs(count, 1);
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        signs[mask] = sign(principal_minor(a, IndexSet::from_mask(n, mask)));
    }
    return signs;
}

std::vector<int> minor_sign_floor(const Matrix& a, int order_cap) {
    const int n = order_of(a);
    const std::vector<int> signs = principal_minor_signs(a, order_cap);
    std::vector<int> floor(static_cast<std::size_t>(n) + 1, 1);
    for (std::uint64_t mask = 1; mask < signs.size(); ++mask) {
        const int k = std::popcount(mask);
        floor[k] = std::min(floor[k], signs[mask]);
    }
    return floor;
}

bool is_m(const Matrix& a, int order_cap) {
    const int n = order_of(a);
    check_cap(n, order_cap);
    return is_z(a) && floor_at_least(minor_sign_floor(a, order_cap), n, 0);
}

bool is_nonsingular_m(const Matrix& a, int order_cap) {
    const int n = order_of(a);
    check_cap(n, order_cap);
    return is_z(a) && floor_at_least(minor_sign_floor(a, order_cap), n, 1);
}

bool is_n(const Matrix& a, int order_cap) {
    check_cap(order_of(a), order_cap);
    return is_z(a) && n_from(minor_sign_floor(a, order_cap));
}

bool is_n0(const Matrix& a, int order_cap) {
    check_cap(order_of(a), order_cap);
    return is_z(a) && n0_from(minor_sign_floor(a, order_cap));
}

bool is_f0(const Matrix& a, int order_cap) {
    const int n = order_of(a);
    check_cap(n, order_cap);
    if (n < 3) {
        throw OrderTooSmall(n, 3);
    }
    return is_z(a) && f0_from(minor_sign_floor(a, order_cap));
}

int l_index(const Matrix& a, int order_cap) {
    check_cap(order_of(a), order_cap);
    if (!is_z(a)) {
        throw NotZMatrix();
    }
    return l_index_from(minor_sign_floor(a, order_cap));
}

bool shifted_is_m(const Matrix& b, const Rational& t) {
    const int n = order_of(b);
    const Matrix a = t * Matrix::Identity(n, n) - b;
    // Small subsets first: a negative minor usually shows up early.
    std::vector<std::uint64_t> masks;
    masks.reserve((std::size_t{1} << n) - 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        masks.push_back(mask);
    }
    std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t x, std::uint64_t y) {
        return std::popcount(x) < std::popcount(y);
    });
    for (std::uint64_t mask : masks) {
        if (principal_minor(a, IndexSet::from_mask(n, mask)) < 0) {
            return false;
        }
    }
    return true;
}

PerronBracket perron_bracket(const Matrix& b, int r, const Rational& tol, int order_cap) {
    const int n = order_of(b);
    check_cap(n, order_cap);
    if (r < 1 || r > n) {
        throw Error("perron_r order r must lie in 1.." + std::to_string(n));
    }
    if (tol <= 0) {
        throw Error("perron_r tolerance must be positive");
    }
    if (!all_nonnegative(b)) {
        throw Error("perron_r expects an entrywise nonnegative matrix");
    }

    std::optional<PerronBracket> best;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) != r) {
            continue;
        }
        const IndexSet support = IndexSet::from_mask(n, mask);
        const Matrix block = submatrix(b, support, support);

        Rational lower(0);
        Rational upper(0);
        if (!shifted_is_m(block, lower)) {
            // Max row sum bounds the spectral radius from above.
            for (Eigen::Index i = 0; i < block.rows(); ++i) {
                upper = std::max(upper, Rational(block.row(i).sum()));
            }
            while (upper - lower >= tol) {
                const Rational mid = (lower + upper) / 2;
                if (shifted_is_m(block, mid)) {
                    upper = mid;
                } else {
                    lower = mid;
                }
            }
        }
        PerronBracket candidate{lower, upper, support};
        if (!best || candidate.value() > best->value()) {
            best = std::move(candidate);
        }
    }
    return *best;
}

Rational perron_r(const Matrix& b, int r, const Rational& tol, int order_cap) {
    return perron_bracket(b, r, tol, order_cap).value();
}

ClassReport classify(const Matrix& a, int order_cap) {
    const int n = order_of(a);
    check_cap(n, order_cap);
    ClassReport report;
    report.order = n;
    report.determinant = det(a);
    report.is_nonsingular = report.determinant != 0;
    report.irreducible = is_irreducible(digraph_of(a));
    report.is_z = is_z(a);
    if (!report.is_z) {
        return report;
    }
    const std::vector<int> floor = minor_sign_floor(a, order_cap);
    report.is_m = floor_at_least(floor, n, 0);
    report.is_nonsingular_m = floor_at_least(floor, n, 1);
    report.is_n = n_from(floor);
    report.is_n0 = n0_from(floor);
    report.is_f0 = f0_from(floor);
    report.l_index = l_index_from(floor);
    return report;
}

}  // namespace zmx
