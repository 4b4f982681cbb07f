#pragma once

#include "zmx/matrix.hpp"
#include "zmx/zclass.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace zmx {

/// a_1 < a_2 < ... < a_n for the type-D matrix a_ij = a_min(i,j).
struct TypeDParams {
    std::vector<Rational> a;
};

/// Free parameters of an inverse cyclic matrix: the diagonal, the super-diagonal
/// and the (n,1) entry.
struct CyclicParams {
    std::vector<Rational> diag;
    std::vector<Rational> super;
    Rational corner;
};

/// Coefficients of p(Z) = alpha_1 I + alpha_2 Z + ... + alpha_n Z^(n-1).
struct CirculantParams {
    std::vector<Rational> alpha;
};

enum class SignMode { Nonneg, Nonpos };

/// Throws NotStrictlyIncreasing (ties included) or InvalidParameters when empty.
Matrix type_d(const TypeDParams& p);

struct TypeDCheck {
    int nonpositive_count = 0;
    int l_index_of_inverse = 0;
    bool tridiagonal = false;
    bool z = false;

    /// L_{s-1} with the convention L_{-1} = L_n.
    int expected_l_index(int order) const {
        return nonpositive_count == 0 ? order : nonpositive_count - 1;
    }
};

/// Inverts type_d(p) and reports its pattern and L_s index. Throws ZeroA1.
TypeDCheck type_d_verify(const TypeDParams& p, int order_cap = kDefaultOrderCap);

/// Fills every entry from the parameters via the path-product form. The result is
/// inverse cyclic and carries the parameters on its diagonal, super-diagonal and
/// (n,1) slot. Throws ZeroDiagonal, or InvalidParameters on a length mismatch.
Matrix from_cyclic_params(const CyclicParams& p);

/// Reads diagonal, super-diagonal and (n,1) entry back out of a matrix.
CyclicParams cyclic_params_of(const Matrix& a);

/// Throws ZeroParameter, or InvalidParameters for n < 2 / length mismatch.
Matrix bdsw_matrix(const std::vector<Rational>& diag, const std::vector<Rational>& super,
                   const Rational& corner);

/// Z = (e^n, e^1, ..., e^(n-1)): ones on the super-diagonal and at (n,1).
Matrix shift_matrix(int n);

/// p(Z) evaluated by Horner's rule in the shift matrix. Row 1 is
/// (alpha_1, ..., alpha_n); each later row is the previous one rotated right.
Matrix circulant_pz(const CirculantParams& p);

/// Nonneg: alpha_1 > alpha_2 > 0; Nonpos: alpha_2 < alpha_1 < 0. Both modes also need
/// alpha_r = alpha_2^(r-1) / alpha_1^(r-2) for r = 3..n. Throws SignViolation when a
/// coefficient has the wrong sign for the mode.
bool circulant_conditions(const CirculantParams& p, SignMode mode);

/// a_ij = 0 whenever |i - j| > 1.
bool is_tridiagonal(const Matrix& a);

/// Integer numerators in [lo, hi] over denominators in [1, max_denominator].
struct SampleRange {
    int lo = -4;
    int hi = 4;
    int max_denominator = 1;
};

/// Seeded source of small rational parameters. Identical seeds give identical streams.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    int integer(int lo, int hi);
    bool chance(double probability);
    Rational rational(const SampleRange& range);
    Rational nonzero(const SampleRange& range);
    /// Strictly positive value with numerator in [1, max(|lo|, |hi|)].
    Rational positive(const SampleRange& range);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// Nonzero diagonal; super-diagonal and corner entries are zero with `zero_probability`.
CyclicParams random_cyclic_params(Sampler& s, int n, const SampleRange& range,
                                  double zero_probability);

/// All-nonzero parameters, so the generated inverse cyclic matrix is full.
CyclicParams random_full_cyclic_params(Sampler& s, int n, const SampleRange& range);

Matrix random_bdsw(Sampler& s, int n, const SampleRange& range);

/// Strictly increasing sample with a_1 != 0, drawn from [lo, hi] (widened when the
/// range holds fewer than n + 1 values).
TypeDParams random_type_d_params(Sampler& s, int n, const SampleRange& range);

/// Entries drawn from the range, each set to zero with `zero_probability`.
Matrix random_matrix(Sampler& s, int n, const SampleRange& range, double zero_probability);

/// t I - B with B >= 0 random (entries in [0, hi], zero with `zero_probability`) and t
/// a half-integer in [0, max row sum + 1], so samples spread across the L_s classes.
Matrix random_z_matrix(Sampler& s, int n, int hi, double zero_probability);

enum class SignCase {
    /// All parameters positive, d - c > 0.
    Positive,
    /// All parameters negative, |c| > |d| (d - c < 0 for even n, > 0 for odd n).
    Negative,
    /// All positive with d - c < 0.
    PositiveWrongGap,
    /// All negative with |c| < |d|.
    NegativeWrongGap,
    /// Diagonal entries of both signs.
    Mixed,
};

/// Full inverse cyclic parameters realising `which`; the corner is rescaled when the
/// first draw lands on the wrong side of the d/c condition. Never produces d = c.
CyclicParams random_signed_cyclic_params(Sampler& s, int n, SignCase which);

/// Coefficients in the given sign mode. `conforming` draws parameters satisfying
/// circulant_conditions; otherwise the power relation or the inequality is broken.
CirculantParams random_circulant_params(Sampler& s, int n, SignMode mode, bool conforming);

}  // namespace zmx
