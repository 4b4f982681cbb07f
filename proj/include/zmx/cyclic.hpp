#pragma once

#include "zmx/matrix.hpp"

#include <string_view>

namespace zmx {

/// d: product of the diagonal. c: cyclic product a_12 a_23 ... a_(n-1)n a_n1.
struct CyclicProducts {
    Rational d;
    Rational c;
};

enum class SignVerdict { InverseM, InverseN, Neither };

std::string_view to_string(SignVerdict verdict);

/// No zero entry anywhere.
bool is_full(const Matrix& a);

/// Nonzero diagonal, super-diagonal and (n,1) corner; zeros elsewhere. Requires n >= 2;
/// for n = 2 the three bands cover all four entries.
bool is_bdsw(const Matrix& a);

/// Nonzero diagonal and, exactly,
///   a_ij = a_ik a_kj / a_kk   for i < k < j,
///   a_ij = a_in a_nj / a_nn   for j < i != n,
///   a_nj = a_n1 a_1j / a_11   for j < n.
bool is_inverse_cyclic(const Matrix& a);

CyclicProducts cyclic_products(const Matrix& a);

/// det A = (d - c)^(n-1) / d^(n-2). Throws NotInverseCyclic.
Rational cyclic_det(const Matrix& a);

/// Closed-form inverse of an inverse cyclic matrix (a bdsw matrix when A is full):
///   b_ii     =  prod_{k != i} a_kk / (d - c)
///   b_i,i+1  = -a_i,i+1 prod_{k != i, i+1} a_kk / (d - c)
///   b_n1     = -a_n1 prod_{k = 2..n-1} a_kk / (d - c)
/// Non-full input is accepted; A B = I is checked before returning.
/// Throws NotInverseCyclic, or SingularError when d = c.
Matrix cyclic_inverse(const Matrix& a);

/// [full(A) and inverse cyclic(A)] <=> bdsw(A^{-1}). Throws SingularError.
bool roundtrip_check(const Matrix& a);

/// InverseM: A > 0, inverse cyclic, d - c > 0.
/// InverseN: A < 0, inverse cyclic, d - c < 0 for even n or d - c > 0 for odd n.
SignVerdict bdsw_sign_classify(const Matrix& a);

}  // namespace zmx
