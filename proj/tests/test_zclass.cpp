#include "checks.hpp"
#include "fixtures.hpp"

#include "zmx/construct.hpp"
#include "zmx/zclass.hpp"

#include <gtest/gtest.h>

using namespace zmx;
using namespace zmx::test;

namespace {

const Rational kTol = Rational(1, 1000000000);

Matrix two_by_two() { return matrix_from_rows({{1, -1}, {-2, 3}}); }

Matrix type_d_inverse(std::initializer_list<long long> a) {
    TypeDParams p;
    for (long long v : a) {
        p.a.emplace_back(v);
    }
    return inverse(type_d(p));
}

}  // namespace

TEST(IsZ, Examples) {
    EXPECT_TRUE(is_z(Matrix::Identity(3, 3)));
    EXPECT_TRUE(is_z(two_by_two()));
    EXPECT_FALSE(is_z(perturbed3()));
    EXPECT_THROW(is_z(Matrix::Zero(2, 3)), Error);
}

TEST(ZDecompose, Examples) {
    EXPECT_EQ(z_decompose(Matrix::Identity(3, 3), Rational(1)).b, Matrix::Zero(3, 3).eval());
    EXPECT_EQ(z_decompose(two_by_two(), Rational(3)).b, matrix_from_rows({{2, 1}, {2, 0}}));
    EXPECT_THROW(z_decompose(two_by_two(), Rational(0)), TTooSmall);
    EXPECT_THROW(z_decompose(perturbed3(), Rational(5)), NotZMatrix);
}

TEST(MMatrix, Examples) {
    EXPECT_TRUE(is_nonsingular_m(Matrix::Identity(3, 3)));
    EXPECT_TRUE(is_nonsingular_m(positive5_inverse()));
    EXPECT_FALSE(is_nonsingular_m(negative4_inverse()));
    EXPECT_TRUE(is_m(Matrix::Zero(3, 3)));
    EXPECT_FALSE(is_nonsingular_m(Matrix::Zero(3, 3)));
    EXPECT_TRUE(is_m(matrix_from_rows({{1, -1}, {-1, 1}})));
    EXPECT_FALSE(is_nonsingular_m(matrix_from_rows({{1, -1}, {-1, 1}})));
    EXPECT_FALSE(is_m(matrix_from_rows({{0, -1}, {-1, 0}})));
    EXPECT_TRUE(is_m(matrix_from_rows({{0}})));
    EXPECT_FALSE(is_m(matrix_from_rows({{-1}})));
    EXPECT_FALSE(is_m(perturbed3()));
}

TEST(NMatrix, Examples) {
    EXPECT_TRUE(is_n(negative4_inverse()));
    EXPECT_FALSE(is_n(Matrix::Identity(3, 3)));
    EXPECT_FALSE(is_n(parity_even4_inverse()));
    EXPECT_FALSE(is_n(matrix_from_rows({{-1}})));
    EXPECT_TRUE(is_n0(negative4_inverse()));
    EXPECT_TRUE(is_n(negative5_inverse()));
    EXPECT_TRUE(is_n0(negative5_inverse()));
    EXPECT_FALSE(is_n0(Matrix::Identity(3, 3)));
    EXPECT_TRUE(is_n0(matrix_from_rows({{-1}})));
}

TEST(NMatrix, TypeDWithZeroLastParameterIsN0ButNotN) {
    const Matrix inv = type_d_inverse({-3, -2, -1, 0});
    EXPECT_TRUE(is_n0(inv));
    EXPECT_FALSE(is_n(inv));
}

TEST(F0Matrix, Examples) {
    EXPECT_TRUE(is_f0(type_d_inverse({-2, -1, 0, 1})));
    EXPECT_FALSE(is_f0(Matrix::Identity(3, 3)));
    EXPECT_FALSE(is_f0(negative4_inverse()));
    EXPECT_FALSE(is_f0(negative5_inverse()));
    EXPECT_THROW(is_f0(Matrix::Identity(2, 2)), OrderTooSmall);
}

TEST(LIndex, Examples) {
    EXPECT_EQ(l_index(Matrix::Identity(5, 5)), 5);
    EXPECT_EQ(l_index(negative4_inverse()), 3);
    EXPECT_EQ(l_index(type_d_inverse({-2, -1, 0, 1})), 2);
    EXPECT_EQ(l_index(matrix_from_rows({{-1, 0}, {0, 1}})), 0);
    EXPECT_THROW(l_index(perturbed3()), NotZMatrix);
}

TEST(OrderCap, IsEnforced) {
    EXPECT_THROW(is_m(Matrix::Identity(5, 5), 4), OrderCapExceeded);
    EXPECT_THROW(classify(Matrix::Identity(13, 13)), OrderCapExceeded);
    EXPECT_NO_THROW(is_m(Matrix::Identity(5, 5), 5));
}

TEST(MinorSigns, AgreeWithCofactorExpansion) {
    Sampler s(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix a = random_matrix(s, 1 + trial % 5, {-3, 3, 2}, 0.3);
        const std::vector<int> signs = principal_minor_signs(a);
        const std::vector<Rational> minors = all_principal_minors(a);
        ASSERT_EQ(signs.size(), minors.size());
        for (std::size_t k = 0; k < signs.size(); ++k) {
            ASSERT_EQ(signs[k], sign(minors[k]));
        }
    }
}

TEST(Perron, Examples) {
    const Rational one(1);
    const Rational v2 = perron_r(matrix_from_rows({{0, 1}, {1, 0}}), 2, kTol);
    EXPECT_LE(abs(v2 - one), kTol);
    const Rational v3 = perron_r(Matrix::Ones(3, 3), 3, kTol);
    EXPECT_LE(abs(v3 - Rational(3)), kTol);
    const Rational v1 = perron_r(matrix_from_rows({{2}}), 1, kTol);
    EXPECT_LE(abs(v1 - Rational(2)), kTol);
    const PerronBracket zero = perron_bracket(Matrix::Zero(2, 2), 2, kTol);
    EXPECT_EQ(zero.lower, Rational(0));
    EXPECT_EQ(zero.upper, Rational(0));
}

TEST(Perron, RejectsBadArguments) {
    EXPECT_THROW(perron_r(matrix_from_rows({{0, -1}, {1, 0}}), 1, kTol), Error);
    EXPECT_THROW(perron_r(Matrix::Ones(2, 2), 3, kTol), Error);
    EXPECT_THROW(perron_r(Matrix::Ones(2, 2), 0, kTol), Error);
    EXPECT_THROW(perron_r(Matrix::Ones(2, 2), 1, Rational(0)), Error);
}

TEST(Perron, BracketAndSweep) {
    Sampler s(21);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + trial % 4;
        Matrix b = random_matrix(s, n, {0, 3, 2}, 0.4);
        for (int r = 1; r <= n; ++r) {
            ASSERT_EQ(perron_value_check(b, r, kTol), "") << "trial " << trial << " r " << r;
        }
        ASSERT_EQ(l_index_sweep(b, kTol), "") << "trial " << trial;
    }
}

TEST(Classify, Examples) {
    const ClassReport id = classify(Matrix::Identity(3, 3));
    EXPECT_TRUE(id.is_z);
    EXPECT_TRUE(id.is_nonsingular_m);
    EXPECT_EQ(id.l_index, 3);
    EXPECT_FALSE(id.irreducible);

    const ClassReport n = classify(negative4_inverse());
    EXPECT_TRUE(n.is_n);
    EXPECT_TRUE(n.is_n0);
    EXPECT_EQ(n.l_index, 3);

    const ClassReport not_z = classify(parity_odd5_inverse());
    EXPECT_FALSE(not_z.is_z);
    EXPECT_FALSE(not_z.l_index.has_value());
    EXPECT_EQ(not_z.determinant, det(parity_odd5_inverse()));
    EXPECT_TRUE(not_z.is_nonsingular);

    EXPECT_FALSE(classify(Matrix::Identity(2, 2)).is_f0);
}

TEST(Classify, OracleEquivalencesOnRandomZMatrices) {
    Sampler s(31);
    int nonsingular = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 4;
        const Matrix a = random_z_matrix(s, n, 3, 0.4);
        if (det(a) == 0) {
            continue;
        }
        ++nonsingular;
        ASSERT_EQ(zclass_equivalences(a), "") << "trial " << trial;
    }
    EXPECT_GT(nonsingular, 150);
}
