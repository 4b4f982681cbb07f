#pragma once

#include "zmx/matrix.hpp"

#include <optional>
#include <vector>

namespace zmx {

/// Default limit on the order of matrices whose 2^n - 1 principal minors are enumerated.
inline constexpr int kDefaultOrderCap = 12;

/// A = t I - B with B >= 0.
struct ZRepresentation {
    Rational t;
    Matrix b;
};

/// Taxonomy verdict for one matrix. Flags that need Z-structure are false (and
/// l_index empty) for non-Z input.
struct ClassReport {
    int order = 0;
    bool is_z = false;
    bool is_nonsingular = false;
    Rational determinant;
    bool irreducible = false;
    bool is_m = false;
    bool is_nonsingular_m = false;
    bool is_n = false;
    bool is_n0 = false;
    bool is_f0 = false;
    std::optional<int> l_index;
};

bool is_z(const Matrix& a);

/// B = t I - A. Throws NotZMatrix, or TTooSmall when t < max a_ii.
ZRepresentation z_decompose(const Matrix& a, const Rational& t);

/// Sign of every principal minor, indexed by subset bitmask (bit k selects index k+1).
/// Entry 0 is the empty minor (+1).
std::vector<int> principal_minor_signs(const Matrix& a, int order_cap = kDefaultOrderCap);

/// For each order k = 1..n, the smallest sign among principal minors of order k.
/// Index 0 is unused. Everything in the taxonomy is a function of this profile.
std::vector<int> minor_sign_floor(const Matrix& a, int order_cap = kDefaultOrderCap);

bool is_m(const Matrix& a, int order_cap = kDefaultOrderCap);
bool is_nonsingular_m(const Matrix& a, int order_cap = kDefaultOrderCap);
bool is_n(const Matrix& a, int order_cap = kDefaultOrderCap);
bool is_n0(const Matrix& a, int order_cap = kDefaultOrderCap);
/// Throws OrderTooSmall for n < 3.
bool is_f0(const Matrix& a, int order_cap = kDefaultOrderCap);

/// s such that A lies in L_s: one less than the smallest order carrying a negative
/// principal minor, or n when none is negative. Throws NotZMatrix.
///
/// t I - B_hat is a (possibly singular) M-matrix exactly when all of its principal
/// minors are nonnegative, i.e. when t >= rho(B_hat). Quantifying over all principal
/// submatrices of order s turns rho_s(B) <= t into "every minor of order <= s is
/// nonnegative" and t < rho_{s+1}(B) into "some minor of order s+1 is negative".
int l_index(const Matrix& a, int order_cap = kDefaultOrderCap);

/// Bisection bracket for rho_r(B): the Perron root of the maximizing order-r
/// principal submatrix `support` lies in (lower, upper], with upper - lower < tol.
/// When that root is 0 the bracket collapses to [0, 0].
struct PerronBracket {
    Rational lower;
    Rational upper;
    IndexSet support;

    Rational value() const { return (lower + upper) / 2; }
};

PerronBracket perron_bracket(const Matrix& b, int r, const Rational& tol,
                             int order_cap = kDefaultOrderCap);

/// rho_r(B) within tol (the midpoint of perron_bracket).
Rational perron_r(const Matrix& b, int r, const Rational& tol, int order_cap = kDefaultOrderCap);

/// Z-matrix test "t I - B has no negative principal minor" used by the bisection.
bool shifted_is_m(const Matrix& b, const Rational& t);

ClassReport classify(const Matrix& a, int order_cap = kDefaultOrderCap);

}  // namespace zmx
