#pragma once

// Matrices printed in the source material, shared by several suites.

#include "oracles.hpp"

namespace zmx::test {

/// 3x3 inverse cyclic matrix whose inverse is bdsw.
inline Matrix cyclic3() { return matrix_from_rows({{1, -1, -1}, {-2, 1, 1}, {2, -2, -1}}); }

/// cyclic3 with a_32 changed; not inverse cyclic.
inline Matrix perturbed3() { return matrix_from_rows({{1, -1, -1}, {-2, 1, 1}, {2, 2, -1}}); }

inline Matrix bdsw3() { return matrix_from_rows({{-1, -1, 0}, {0, -1, -1}, {-2, 0, 1}}); }

/// 4x4 inverse cyclic matrix with zero entries.
inline Matrix sparse_cyclic4() {
    return matrix_from_rows({{2, -2, -4, 0}, {0, 1, 2, 0}, {0, 0, -2, 0}, {2, -2, -4, 1}});
}

/// Positive 5x5 example; inverse is a bdsw M-matrix.
inline Matrix positive5() {
    return matrix_from_rows({{4, 4, 8, 4, 4},
                             {1, 2, 4, 2, 2},
                             {1, 1, 4, 2, 2},
                             {2, 2, 4, 4, 4},
                             {2, 2, 4, 2, 4}});
}

inline Matrix positive5_inverse() {
    return scaled(Rational(1, 4), {{2, -4, 0, 0, 0},
                                   {0, 4, -4, 0, 0},
                                   {0, 0, 2, -1, 0},
                                   {0, 0, 0, 2, -2},
                                   {-1, 0, 0, 0, 2}});
}

/// Negative even-order example; inverse is a bdsw N-matrix.
inline Matrix negative4() {
    return matrix_from_rows({{-2, -2, -4, -8}, {-4, -1, -2, -4}, {-2, -2, -1, -2}, {-2, -2, -4, -2}});
}

inline Matrix negative4_inverse() {
    return scaled(Rational(1, 6), {{1, -2, 0, 0}, {0, 2, -4, 0}, {0, 0, 2, -2}, {-1, 0, 0, 1}});
}

/// Negative odd-order example; inverse is a bdsw N-matrix.
inline Matrix negative5() {
    return matrix_from_rows({{-2, -2, -4, -8, -16},
                             {-8, -1, -2, -4, -8},
                             {-4, -4, -1, -2, -4},
                             {-2, -2, -4, -1, -2},
                             {-2, -2, -4, -8, -2}});
}

inline Matrix negative5_inverse() {
    return scaled(Rational(1, 14), {{1, -2, 0, 0, 0},
                                    {0, 2, -4, 0, 0},
                                    {0, 0, 2, -4, 0},
                                    {0, 0, 0, 2, -2},
                                    {-1, 0, 0, 0, 1}});
}

/// Parity counterexamples: even order with d - c > 0, odd order with d - c < 0.
inline Matrix parity_even4() {
    return matrix_from_rows({{-2, -2, -2, -2}, {-1, -2, -2, -2}, {-1, -1, -2, -2}, {-1, -1, -1, -2}});
}

inline Matrix parity_even4_inverse() {
    return scaled(Rational(1, 2), {{-2, 2, 0, 0}, {0, -2, 2, 0}, {0, 0, -2, 2}, {1, 0, 0, -2}});
}

inline Matrix parity_odd5() {
    return matrix_from_rows({{-2, -2, -2, -2, -2},
                             {-1, -2, -2, -2, -2},
                             {-1, -1, -2, -2, -2},
                             {-1, -1, -1, -2, -2},
                             {-1, -1, -1, -1, -2}});
}

inline Matrix parity_odd5_inverse() {
    return scaled(Rational(1, 2), {{-2, 2, 0, 0, 0},
                                   {0, -2, 2, 0, 0},
                                   {0, 0, -2, 2, 0},
                                   {0, 0, 0, -2, 2},
                                   {1, 0, 0, 0, -2}});
}

}  // namespace zmx::test
