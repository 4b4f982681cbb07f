#pragma once

// Property checks shared by the unit tests and the acceptance runner. Each returns
// an empty string on success and a short description of the first violation otherwise.

#include "oracles.hpp"

#include "zmx/cyclic.hpp"
#include "zmx/graph.hpp"
#include "zmx/zclass.hpp"

#include <bit>
#include <string>

namespace zmx::test {

/// Every principal minor of `a` by direct cofactor expansion, indexed by bitmask.
inline std::vector<Rational> all_principal_minors(const Matrix& a) {
    const int n = static_cast<int>(a.rows());
    std::vector<Rational> minors(std::size_t{1} << n);
    minors[0] = 1;
    for (std::uint64_t mask = 1; mask < minors.size(); ++mask) {
        const IndexSet s = IndexSet::from_mask(n, mask);
        minors[mask] = cofactor_det(submatrix(a, s, s));
    }
    return minors;
}

inline bool has_negative_principal_minor(const Matrix& a) {
    for (const Rational& m : all_principal_minors(a)) {
        if (m < 0) {
            return true;
        }
    }
    return false;
}

/// det A < 0, every principal minor of A^{-1} of order >= 2 is <= 0, and A^{-1} has a
/// positive diagonal entry.
inline bool f0_by_inverse(const Matrix& a, const Matrix& inv) {
    if (cofactor_det(a) >= 0) {
        return false;
    }
    const std::vector<Rational> minors = all_principal_minors(inv);
    for (std::uint64_t mask = 1; mask < minors.size(); ++mask) {
        if (std::popcount(mask) >= 2 && minors[mask] > 0) {
            return false;
        }
    }
    for (Eigen::Index i = 0; i < inv.rows(); ++i) {
        if (inv(i, i) > 0) {
            return true;
        }
    }
    return false;
}

/// Inverse-sign characterisations of the Z-matrix classes for a nonsingular Z-matrix.
inline std::string zclass_equivalences(const Matrix& a) {
    const Matrix inv = adjugate_inverse(a);
    const ClassReport r = classify(a);
    const bool irreducible = closure_strongly_connected(a);
    if (r.is_nonsingular_m != all_nonnegative(inv)) {
        return "nonsingular M <=> inverse >= 0";
    }
    if ((r.is_nonsingular_m && irreducible) != all_positive(inv)) {
        return "irreducible nonsingular M <=> inverse > 0";
    }
    if (r.is_n != all_negative(inv)) {
        return "N <=> inverse < 0";
    }
    if (r.is_n0 != (all_nonpositive(inv) && irreducible)) {
        return "N0 <=> inverse <= 0 and irreducible";
    }
    if (a.rows() >= 3 && r.is_f0 != f0_by_inverse(a, inv)) {
        return "F0 <=> three inverse conditions";
    }
    if (r.is_n && !irreducible) {
        return "N-matrix is reducible";
    }
    return {};
}

/// Checks a perron_r value v against the bracket conditions: (v - tol) I - B[S] has a
/// negative principal minor for the reported support S, and (v + tol) I - B[T] has none
/// for every order-r subset T.
inline std::string perron_value_check(const Matrix& b, int r, const Rational& tol) {
    const PerronBracket bracket = perron_bracket(b, r, tol);
    const Rational v = perron_r(b, r, tol);
    if (v != bracket.value()) {
        return "perron_r disagrees with the bracket midpoint";
    }
    if (bracket.support.size() != r) {
        return "support has the wrong order";
    }
    const auto shifted = [](const Matrix& m, const Rational& t) {
        return Matrix(t * Matrix::Identity(m.rows(), m.cols()) - m);
    };
    const Matrix hat = submatrix(b, bracket.support, bracket.support);
    if (!has_negative_principal_minor(shifted(hat, v - tol))) {
        return "value minus tol is not below the root";
    }
    const int n = static_cast<int>(b.rows());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) != r) {
            continue;
        }
        const IndexSet s = IndexSet::from_mask(n, mask);
        if (has_negative_principal_minor(shifted(submatrix(b, s, s), v + tol))) {
            return "value plus tol is below the root of some order-r submatrix";
        }
    }
    return {};
}

/// Sweeps t downward through the order-r Perron roots of B and checks that l_index(tI - B)
/// takes the value dictated by where t sits among them.
inline std::string l_index_sweep(const Matrix& b, const Rational& tol) {
    const int n = static_cast<int>(b.rows());
    std::vector<Rational> rho(n + 2);
    for (int r = 1; r <= n; ++r) {
        rho[r] = perron_r(b, r, tol);
        if (r > 1 && rho[r] + 2 * tol < rho[r - 1]) {
            return "order-r Perron roots decrease with r";
        }
    }
    const Matrix id = Matrix::Identity(n, n);
    int previous = n;
    const auto probe = [&](const Rational& t, int expected) -> std::string {
        const int got = l_index(Matrix(t * id - b));
        if (got != expected) {
            return "l_index " + std::to_string(got) + " at t = " + to_string(t) + ", expected " +
                   std::to_string(expected);
        }
        if (got > previous) {
            return "l_index increased as t decreased";
        }
        previous = got;
        return {};
    };
    // Above every root, between consecutive roots (when separated), below the smallest.
    if (auto e = probe(rho[n] + 3 * tol, n); !e.empty()) {
        return e;
    }
    for (int s = n - 1; s >= 1; --s) {
        if (rho[s + 1] - rho[s] > 8 * tol) {
            if (auto e = probe(rho[s + 1] - 3 * tol, s); !e.empty()) {
                return e;
            }
            if (auto e = probe(rho[s] + 3 * tol, s); !e.empty()) {
                return e;
            }
        }
    }
    return probe(rho[1] - 3 * tol, 0);
}

}  // namespace zmx::test
