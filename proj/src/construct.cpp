#include "zmx/construct.hpp"

#include "zmx/cyclic.hpp"

#include <algorithm>
#include <set>

namespace zmx {

Matrix type_d(const TypeDParams& p) {
    const int n = static_cast<int>(p.a.size());
    if (n == 0) {
        throw InvalidParameters("type-D matrix needs at least one parameter");
    }
    for (int k = 1; k < n; ++k) {
        if (!(p.a[k] > p.a[k - 1])) {
            throw NotStrictlyIncreasing();
        }
    }
    Matrix d(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            d(i, j) = p.a[std::min(i, j)];
        }
    }
    return d;
}

TypeDCheck type_d_verify(const TypeDParams& p, int order_cap) {
    if (p.a.empty() || p.a.front() == 0) {
        throw ZeroA1();
    }
    const Matrix inv = inverse(type_d(p));
    TypeDCheck check;
    check.nonpositive_count =
        static_cast<int>(std::count_if(p.a.begin(), p.a.end(), [](const Rational& x) { return x <= 0; }));
    check.tridiagonal = is_tridiagonal(inv);
    check.z = is_z(inv);
    check.l_index_of_inverse = check.z ? l_index(inv, order_cap) : -1;
    return check;
}

Matrix from_cyclic_params(const CyclicParams& p) {
    const int n = static_cast<int>(p.diag.size());
    if (n == 0 || static_cast<int>(p.super.size()) != n - 1) {
        throw InvalidParameters("cyclic parameters need n diagonal and n-1 super-diagonal entries");
    }
    for (const Rational& x : p.diag) {
        if (x == 0) {
            throw ZeroDiagonal();
        }
    }
    // Weight of the cycle edge leaving vertex m (0-based): m -> m+1, and n-1 -> 0.
    auto edge = [&](int m) -> const Rational& { return m + 1 < n ? p.super[m] : p.corner; };

    Matrix a(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = p.diag[i];
        // Walk the cycle from i; every vertex passed through contributes its diagonal.
        Rational numerator = edge(i);
        Rational denominator(1);
        for (int j = (i + 1) % n; j != i; j = (j + 1) % n) {
            a(i, j) = numerator / denominator;
            numerator *= edge(j);
            denominator *= p.diag[j];
        }
    }
    return a;
}

CyclicParams cyclic_params_of(const Matrix& a) {
    require_square(a);
    const int n = static_cast<int>(a.rows());
    CyclicParams p;
    for (int i = 0; i < n; ++i) {
        p.diag.push_back(a(i, i));
    }
    for (int i = 0; i + 1 < n; ++i) {
        p.super.push_back(a(i, i + 1));
    }
    p.corner = a(n - 1, 0);
    return p;
}

Matrix bdsw_matrix(const std::vector<Rational>& diag, const std::vector<Rational>& super,
                   const Rational& corner) {
    const int n = static_cast<int>(diag.size());
    if (n < 2 || static_cast<int>(super.size()) != n - 1) {
        throw InvalidParameters("bdsw needs n >= 2 diagonal and n-1 super-diagonal entries");
    }
    const auto zero = [](const Rational& x) { return x == 0; };
    if (std::any_of(diag.begin(), diag.end(), zero) ||
        std::any_of(super.begin(), super.end(), zero) || corner == 0) {
        throw ZeroParameter();
    }
    Matrix a = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = diag[i];
    }
    for (int i = 0; i + 1 < n; ++i) {
        a(i, i + 1) = super[i];
    }
    a(n - 1, 0) = corner;
    return a;
}

Matrix shift_matrix(int n) {
    if (n < 1) {
        throw InvalidParameters("shift matrix order must be positive");
    }
    Matrix z = Matrix::Zero(n, n);
    // Column 1 is e^n, column k is e^(k-1).
    z(n - 1, 0) = 1;
    for (int k = 1; k < n; ++k) {
        z(k - 1, k) = 1;
    }
    return z;
}

Matrix circulant_pz(const CirculantParams& p) {
    const int n = static_cast<int>(p.alpha.size());
    if (n < 2) {
        throw InvalidParameters("circulant needs n >= 2 coefficients");
    }
    const Matrix z = shift_matrix(n);
    const Matrix identity = Matrix::Identity(n, n);
    Matrix a = p.alpha[n - 1] * identity;
    for (int r = n - 2; r >= 0; --r) {
        a = Matrix(a * z) + p.alpha[r] * identity;
    }
    return a;
}

bool circulant_conditions(const CirculantParams& p, SignMode mode) {
    const int n = static_cast<int>(p.alpha.size());
    if (n < 2) {
        throw InvalidParameters("circulant needs n >= 2 coefficients");
    }
    for (const Rational& x : p.alpha) {
        if (mode == SignMode::Nonneg ? x < 0 : x > 0) {
            throw SignViolation(mode == SignMode::Nonneg
                                    ? "nonneg mode needs every coefficient >= 0"
                                    : "nonpos mode needs every coefficient <= 0");
        }
    }
    const Rational& a1 = p.alpha[0];
    const Rational& a2 = p.alpha[1];
    const bool ordered = mode == SignMode::Nonneg ? (a1 > a2 && a2 > 0) : (a2 < a1 && a1 < 0);
    if (!ordered) {
        return false;
    }
    for (int r = 3; r <= n; ++r) {
        if (p.alpha[r - 1] != power(a2, r - 1) / power(a1, r - 2)) {
            return false;
        }
    }
    return true;
}

bool is_tridiagonal(const Matrix& a) {
    require_square(a);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if ((i > j + 1 || j > i + 1) && a(i, j) != 0) {
                return false;
            }
        }
    }
    return true;
}

int Sampler::integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

bool Sampler::chance(double probability) {
    return std::bernoulli_distribution(probability)(engine_);
}

Rational Sampler::rational(const SampleRange& range) {
    const int numerator = integer(range.lo, range.hi);
    const int denominator = integer(1, std::max(1, range.max_denominator));
    return Rational(numerator, denominator);
}

Rational Sampler::nonzero(const SampleRange& range) {
    for (;;) {
        Rational q = rational(range);
        if (q != 0) {
            return q;
        }
    }
}

Rational Sampler::positive(const SampleRange& range) {
    const int magnitude = std::max({1, std::abs(range.lo), std::abs(range.hi)});
    return Rational(integer(1, magnitude), integer(1, std::max(1, range.max_denominator)));
}

CyclicParams random_cyclic_params(Sampler& s, int n, const SampleRange& range,
                                  double zero_probability) {
    CyclicParams p;
    for (int i = 0; i < n; ++i) {
        p.diag.push_back(s.nonzero(range));
    }
    auto draw = [&] { return s.chance(zero_probability) ? Rational(0) : s.nonzero(range); };
    for (int i = 0; i + 1 < n; ++i) {
        p.super.push_back(draw());
    }
    p.corner = draw();
    return p;
}

CyclicParams random_full_cyclic_params(Sampler& s, int n, const SampleRange& range) {
    return random_cyclic_params(s, n, range, 0.0);
}

Matrix random_bdsw(Sampler& s, int n, const SampleRange& range) {
    std::vector<Rational> diag;
    std::vector<Rational> super;
    for (int i = 0; i < n; ++i) {
        diag.push_back(s.nonzero(range));
    }
    for (int i = 0; i + 1 < n; ++i) {
        super.push_back(s.nonzero(range));
    }
    return bdsw_matrix(diag, super, s.nonzero(range));
}

TypeDParams random_type_d_params(Sampler& s, int n, const SampleRange& range) {
    int lo = range.lo;
    int hi = range.hi;
    while (hi - lo < n) {
        --lo;
        ++hi;
    }
    for (;;) {
        std::set<int> picked;
        while (static_cast<int>(picked.size()) < n) {
            picked.insert(s.integer(lo, hi));
        }
        if (*picked.begin() == 0) {
            continue;
        }
        const int scale = s.integer(1, std::max(1, range.max_denominator));
        TypeDParams p;
        for (int v : picked) {
            p.a.emplace_back(v, scale);
        }
        return p;
    }
}

Matrix random_matrix(Sampler& s, int n, const SampleRange& range, double zero_probability) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a(i, j) = s.chance(zero_probability) ? Rational(0) : s.rational(range);
        }
    }
    return a;
}

Matrix random_z_matrix(Sampler& s, int n, int hi, double zero_probability) {
    Matrix b(n, n);
    int max_row_sum = 0;
    for (int i = 0; i < n; ++i) {
        int row_sum = 0;
        for (int j = 0; j < n; ++j) {
            const int v = s.chance(zero_probability) ? 0 : s.integer(0, hi);
            b(i, j) = v;
            row_sum += v;
        }
        max_row_sum = std::max(max_row_sum, row_sum);
    }
    const Rational t(s.integer(0, 2 * (max_row_sum + 1)), 2);
    return t * Matrix::Identity(n, n) - b;
}

CyclicParams random_signed_cyclic_params(Sampler& s, int n, SignCase which) {
    const SampleRange magnitudes{1, 4, 2};
    const bool negative = which == SignCase::Negative || which == SignCase::NegativeWrongGap;
    const Rational orient = negative ? -1 : 1;
    CyclicParams p;
    for (int i = 0; i < n; ++i) {
        p.diag.push_back(orient * s.positive(magnitudes));
    }
    for (int i = 0; i + 1 < n; ++i) {
        p.super.push_back(orient * s.positive(magnitudes));
    }
    p.corner = orient * s.positive(magnitudes);
    if (which == SignCase::Mixed) {
        const int flip = s.integer(0, n - 1);
        p.diag[flip] = -p.diag[flip];
        if (n > 1 && p.diag[(flip + 1) % n].sign() == p.diag[flip].sign()) {
            p.diag[(flip + 1) % n] = -p.diag[(flip + 1) % n];
        }
    }
    const CyclicProducts prod = cyclic_products(from_cyclic_params(p));
    const Rational d = abs(prod.d);
    const Rational c = abs(prod.c);
    // Want |c| above |d| for Negative/PositiveWrongGap and below it otherwise.
    const bool want_c_larger = which == SignCase::Negative || which == SignCase::PositiveWrongGap;
    if (want_c_larger && c <= d) {
        p.corner *= 2 * d / c;
    } else if (!want_c_larger && c >= d) {
        p.corner *= d / (2 * c);
    }
    return p;
}

CirculantParams random_circulant_params(Sampler& s, int n, SignMode mode, bool conforming) {
    const SampleRange magnitudes{1, 4, 3};
    const Rational orient = mode == SignMode::Nonneg ? 1 : -1;
    // |alpha_1| < |alpha_2| is the conforming order in nonpos mode, the reverse in nonneg.
    Rational small = s.positive(magnitudes);
    Rational large = small + s.positive(magnitudes);
    const bool break_order = !conforming && (n < 3 || s.chance(0.5));
    if (break_order) {
        // Equal magnitudes or swapped roles both violate the strict inequality.
        if (s.chance(0.3)) {
            large = small;
        } else {
            std::swap(small, large);
        }
    }
    Rational a1 = orient * (mode == SignMode::Nonneg ? large : small);
    Rational a2 = orient * (mode == SignMode::Nonneg ? small : large);
    CirculantParams p;
    p.alpha = {a1, a2};
    for (int r = 3; r <= n; ++r) {
        p.alpha.push_back(power(a2, r - 1) / power(a1, r - 2));
    }
    if (!conforming && !break_order) {
        const int r = s.integer(3, n);
        Rational& target = p.alpha[r - 1];
        switch (s.integer(0, 2)) {
            case 0:
                target *= 2;
                break;
            case 1:
                target /= 3;
                break;
            default:
                target = 0;
                break;
        }
    }
    return p;
}

}  // namespace zmx
