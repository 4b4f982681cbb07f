#include "zmx/cyclic.hpp"

#include <stdexcept>

namespace zmx {

namespace {

int order_of(const Matrix& a) {
    require_square(a);
    return static_cast<int>(a.rows());
}

bool has_nonzero_diagonal(const Matrix& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        if (a(i, i) == 0) {
            return false;
        }
    }
    return true;
}

// Product of the diagonal skipping 0-based positions `skip1` and `skip2`.
Rational diagonal_product_except(const Matrix& a, Eigen::Index skip1, Eigen::Index skip2) {
    Rational product(1);
    for (Eigen::Index k = 0; k < a.rows(); ++k) {
        if (k != skip1 && k != skip2) {
            product *= a(k, k);
        }
    }
    return product;
}

}  // namespace

std::string_view to_string(SignVerdict verdict) {
    switch (verdict) {
        case SignVerdict::InverseM:
            return "InverseM";
        case SignVerdict::InverseN:
            return "InverseN";
        case SignVerdict::Neither:
            return "Neither";
    }
    return "Neither";
}

bool is_full(const Matrix& a) {
    return (a.array() != Rational(0)).all();
}

bool is_bdsw(const Matrix& a) {
    const int n = order_of(a);
    if (n < 2) {
        return false;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const bool band = i == j || j == i + 1 || (i == n - 1 && j == 0);
            if (band != (a(i, j) != 0)) {
                return false;
            }
        }
    }
    return true;
}

bool is_inverse_cyclic(const Matrix& a) {
    const int n = order_of(a);
    if (!has_nonzero_diagonal(a)) {
        return false;
    }
    const int last = n - 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i < j) {
                for (int k = i + 1; k < j; ++k) {
                    if (a(i, j) * a(k, k) != a(i, k) * a(k, j)) {
                        return false;
                    }
                }
            } else if (j < i && i != last) {
                if (a(i, j) * a(last, last) != a(i, last) * a(last, j)) {
                    return false;
                }
            } else if (j < i) {
                if (a(last, j) * a(0, 0) != a(last, 0) * a(0, j)) {
                    return false;
                }
            }
        }
    }
    return true;
}

CyclicProducts cyclic_products(const Matrix& a) {
    const int n = order_of(a);
    CyclicProducts p{Rational(1), Rational(1)};
    for (int i = 0; i < n; ++i) {
        p.d *= a(i, i);
        p.c *= a(i, (i + 1) % n);
    }
    return p;
}

Rational cyclic_det(const Matrix& a) {
    if (!is_inverse_cyclic(a)) {
        throw NotInverseCyclic();
    }
    const int n = order_of(a);
    const auto [d, c] = cyclic_products(a);
    if (n == 1) {
        return d;
    }
    return power(d - c, n - 1) / power(d, n - 2);
}

Matrix cyclic_inverse(const Matrix& a) {
    if (!is_inverse_cyclic(a)) {
        throw NotInverseCyclic();
    }
    const int n = order_of(a);
    if (n == 1) {
        return Matrix::Constant(1, 1, Rational(1) / a(0, 0));
    }
    const auto [d, c] = cyclic_products(a);
    if (d == c) {
        throw SingularError("inverse cyclic matrix with d = c is singular");
    }
    const Rational scale = Rational(1) / (d - c);
    Matrix b = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        b(i, i) = diagonal_product_except(a, i, i) * scale;
    }
    for (int i = 0; i + 1 < n; ++i) {
        b(i, i + 1) = -a(i, i + 1) * diagonal_product_except(a, i, i + 1) * scale;
    }
    // For n = 2 the corner is (2,1) and gets the same form with an empty product.
    b(n - 1, 0) = -a(n - 1, 0) * diagonal_product_except(a, 0, n - 1) * scale;

    if (Matrix(a * b) != Matrix::Identity(n, n)) {
        throw std::logic_error("closed-form inverse failed A*B = I");
    }
    return b;
}

bool roundtrip_check(const Matrix& a) {
    const Matrix b = inverse(a);
    return (is_full(a) && is_inverse_cyclic(a)) == is_bdsw(b);
}

SignVerdict bdsw_sign_classify(const Matrix& a) {
    const int n = order_of(a);
    if (n < 2 || !is_inverse_cyclic(a)) {
        return SignVerdict::Neither;
    }
    const auto [d, c] = cyclic_products(a);
    const int gap = sign(d - c);
    if (all_positive(a) && gap > 0) {
        return SignVerdict::InverseM;
    }
    if (all_negative(a) && gap == (n % 2 == 0 ? -1 : 1)) {
        return SignVerdict::InverseN;
    }
    return SignVerdict::Neither;
}

}  // namespace zmx
