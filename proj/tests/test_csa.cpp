#include <gtest/gtest.h>

#include <numeric>

#include "tamejl/csa.hpp"
#include "tamejl/error.hpp"
#include "tamejl/localfield.hpp"

using namespace tamejl;

TEST(Csa, EnumerateAndValidate)
{
    // n = 4: (4,1,0), (2,2,1), (1,4,1), (1,4,3).
    const auto all = enumerate_csa(4);
    EXPECT_EQ(all.size(), 4U);
    for (const auto& A : all) {
        EXPECT_EQ(A.n(), 4);
        EXPECT_EQ(std::gcd(A.h, A.d), 1);
        EXPECT_NO_THROW(validate_csa(A));
    }
    EXPECT_EQ(all.front(), CsaParams::split(4));
    EXPECT_THROW(validate_csa({1, 4, 2}), Error);
    EXPECT_THROW(validate_csa({1, 4, 4}), Error);
    EXPECT_THROW(validate_csa({0, 1, 0}), Error);

    // Count against sum over d | n of phi(d).
    for (std::int64_t n = 1; n <= 12; ++n) {
        std::size_t expected = 0;
        for (std::int64_t d = 1; d <= n; ++d) {
            if (n % d) continue;
            for (std::int64_t h = 0; h < d; ++h) expected += std::gcd(h, d) == 1;
        }
        EXPECT_EQ(enumerate_csa(n).size(), expected);
    }
}

TEST(OrderInvariants, SpecExamples)
{
    EXPECT_EQ(order_invariants(build_extension({3, 1, 4, 0}), {2, 2, 1}),
              (OrderInvariants{1, 2, 2, 2}));
    EXPECT_EQ(order_invariants(build_extension({3, 1, 2, 0}), {1, 2, 1}),
              (OrderInvariants{1, 1, 2, 2}));
    for (std::int64_t e : {1, 2, 4}) {
        for (std::int64_t f : {1, 2}) {
            const auto X = build_extension({5, e, f, 0});
            EXPECT_EQ(order_invariants(X, CsaParams::split(e * f)), (OrderInvariants{e, f, e, 1}));
        }
    }
    try {
        order_invariants(build_extension({3, 1, 2, 0}), {1, 4, 1});
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(OrderInvariants, Relations)
{
    for (std::int64_t e : {1, 2, 4, 8}) {
        for (std::int64_t f = 1; e * f <= 8; ++f) {
            const auto X = build_extension({5, e, f, 0});
            for (const auto& A : enumerate_csa(e * f)) {
                const auto inv = order_invariants(X, A);
                EXPECT_EQ(inv.e_E * e, inv.e_F);
                EXPECT_EQ(inv.e_E, A.d / std::gcd(A.d, e));
            }
        }
    }
}

TEST(Centralizer, SpecExamples)
{
    const auto X = build_extension({3, 1, 4, 0});
    const CsaParams A{2, 2, 1};
    EXPECT_EQ(centralizer_invariants(X, A, X.gamma_F()), (CentralizerInvariants{2, 2, 2}));
    EXPECT_EQ(centralizer_invariants(X, A, X.gamma_E()), (CentralizerInvariants{1, 1, 1}));
    const SubfieldHandle quadratic = subgroup_closure(X, {1U << 2});  // <phi^2>
    EXPECT_EQ(subfield_invariants(X, quadratic), (FieldInvariants{1, 2}));
    EXPECT_EQ(centralizer_invariants(X, A, quadratic), (CentralizerInvariants{2, 1, 1}));
}

TEST(Centralizer, DivisibilityAlongChains)
{
    for (std::int64_t e : {1, 2, 4}) {
        for (std::int64_t f = 1; e * f <= 8; ++f) {
            const auto X = build_extension({5, e, f, 0});
            const auto subs = enumerate_subfields(X);
            for (const auto& A : enumerate_csa(e * f)) {
                for (const auto& H : subs) {
                    for (const auto& K : subs) {
                        if ((H.cosets & K.cosets) != H.cosets) continue;
                        EXPECT_EQ(centralizer_invariants(X, A, K).e_over_E
                                      % centralizer_invariants(X, A, H).e_over_E,
                                  0);
                    }
                }
            }
        }
    }
}

TEST(Brauer, ClassArithmetic)
{
    const BrauerClass half = BrauerClass::of({1, 2, 1});
    EXPECT_EQ(half.value(), Rational(1, 2));
    EXPECT_TRUE(half.is_two_torsion());
    EXPECT_TRUE((half + half).is_trivial());
    EXPECT_EQ(BrauerClass::of({1, 4, 3}).scaled(3).value(), Rational(1, 4));
    EXPECT_EQ(BrauerClass(Rational(-1, 3)).value(), Rational(2, 3));
    EXPECT_FALSE(BrauerClass(Rational(1, 3)).is_two_torsion());
}

TEST(Brauer, TorsionSign)
{
    EXPECT_EQ(brauer_torsion_sign({1, 2, 1}, 1), Sign::minus);
    EXPECT_EQ(brauer_torsion_sign(CsaParams::split(6), 3), Sign::plus);
    EXPECT_EQ(brauer_torsion_sign({2, 2, 1}, 2), Sign::plus);
    try {
        brauer_torsion_sign({1, 4, 1}, 1);
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::NotTwoTorsion);
    }
    // Integer oracle: n h / d mod 1 is 0 or 1/2.
    for (std::int64_t n = 1; n <= 12; ++n) {
        for (const auto& A : enumerate_csa(n)) {
            for (std::int64_t k = 1; k <= 12; ++k) {
                const std::int64_t num = (k * A.h) % A.d;
                if (num == 0) {
                    EXPECT_EQ(brauer_torsion_sign(A, k), Sign::plus);
                } else if (2 * num == A.d) {
                    EXPECT_EQ(brauer_torsion_sign(A, k), Sign::minus);
                } else {
                    EXPECT_THROW(brauer_torsion_sign(A, k), Error);
                }
            }
            // The symmetric ramified identity: inv(n/2 [A]) has sign (-1)^m when n is even.
            if (n % 2 == 0) EXPECT_EQ(brauer_torsion_sign(A, n / 2), sign_pow(A.m));
        }
    }
}

TEST(Brauer, SymramProduct)
{
    EXPECT_EQ(symram_epsilon_product({1, 2, 1}, 1), Sign::minus);
    EXPECT_EQ(symram_epsilon_product({3, 1, 0}, 0), Sign::plus);
    EXPECT_EQ(symram_epsilon_product({2, 1, 0}, 1), Sign::plus);
}
