#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "tamejl/arith.hpp"
#include "tamejl/chartools.hpp"
#include "tamejl/error.hpp"

using namespace tamejl;

namespace {

// Oracle for prime fields: exponent of x w.r.t. a primitive root, then the
// quadratic character by Euler's criterion evaluated in actual field arithmetic.
std::int64_t primitive_root(std::int64_t p)
{
    for (std::int64_t g = 2; g < p; ++g) {
        std::int64_t x = 1;
        std::int64_t order = 0;
        do {
            x = x * g % p;
            ++order;
        } while (x != 1);
        if (order == p - 1) return g;
    }
    return 1;
}

int euler_symbol(std::int64_t p, std::int64_t y)
{
    return arith::powmod(y, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace

TEST(Sign, GroupLaw)
{
    EXPECT_EQ(Sign::minus * Sign::minus, Sign::plus);
    EXPECT_EQ(Sign::plus * Sign::minus, Sign::minus);
    EXPECT_EQ(negate(Sign::plus), Sign::minus);
    EXPECT_EQ(sign_pow(3), Sign::minus);
    EXPECT_EQ(sign_pow(-2), Sign::plus);
    EXPECT_EQ(sign_from_int(-1), Sign::minus);
    EXPECT_THROW(sign_from_int(2), Error);
}

TEST(Legendre, SpecExamples)
{
    EXPECT_EQ(legendre_kx(7, MuExponent::make(3, 6)), Sign::minus);
    EXPECT_EQ(legendre_kx(7, MuExponent::make(0, 6)), Sign::plus);
    EXPECT_EQ(legendre_kx(9, MuExponent::make(4, 8)), Sign::plus);
    EXPECT_EQ(legendre_k1(25, 5, MuExponent::make(20, 24)), Sign::minus);
    EXPECT_EQ(legendre_k1(25, 5, MuExponent::make(0, 24)), Sign::plus);
    EXPECT_EQ(legendre_k1(9, 3, MuExponent::make(6, 8)), Sign::minus);
}

TEST(Legendre, MatchesEulerCriterionOnPrimeFields)
{
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97, 101}) {
        const std::int64_t g = primitive_root(p);
        std::int64_t y = 1;
        for (std::int64_t x = 0; x < p - 1; ++x) {
            EXPECT_EQ(to_int(legendre_kx(p, MuExponent::make(x, p - 1))), euler_symbol(p, y))
                << "p=" << p << " x=" << x;
            y = y * g % p;
        }
    }
}

TEST(Legendre, RestrictsThroughLargerField)
{
    // x lies in the subfield of size 5 inside mu of order 24.
    const MuExponent x = MuExponent::make(6, 24);
    EXPECT_EQ(restrict_to_subfield(x, 5), MuExponent::make(1, 4));
    EXPECT_EQ(legendre_kx(5, x), Sign::minus);
    EXPECT_THROW(legendre_kx(5, MuExponent::make(1, 24)), Error);
}

TEST(Legendre, Multiplicative)
{
    for (std::int64_t Q : {9, 25, 49, 121}) {
        const std::int64_t M = Q - 1;
        for (std::int64_t x = 0; x < M; ++x) {
            for (std::int64_t y = 0; y < M; ++y) {
                const MuExponent a = MuExponent::make(x, M);
                const MuExponent b = MuExponent::make(y, M);
                ASSERT_EQ(legendre_kx(Q, a + b), legendre_kx(Q, a) * legendre_kx(Q, b));
            }
        }
        const std::int64_t qpm = Q == 9 ? 3 : Q == 25 ? 5 : Q == 49 ? 7 : 11;
        for (std::int64_t x = 0; x < M; x += qpm - 1) {
            for (std::int64_t y = 0; y < M; y += qpm - 1) {
                const MuExponent a = MuExponent::make(x, M);
                const MuExponent b = MuExponent::make(y, M);
                ASSERT_EQ(legendre_k1(Q, qpm, a + b), legendre_k1(Q, qpm, a) * legendre_k1(Q, qpm, b));
            }
        }
    }
}

TEST(Legendre, NormOneSquaresAreTrivial)
{
    for (std::int64_t qpm : {3, 5, 7, 9, 11}) {
        const std::int64_t Q = qpm * qpm;
        for (std::int64_t x = 0; x < Q - 1; x += qpm - 1) {
            EXPECT_EQ(legendre_k1(Q, qpm, MuExponent::make(2 * x, Q - 1)), Sign::plus);
        }
        EXPECT_THROW(legendre_k1(Q, qpm, MuExponent::make(1, Q - 1)), Error);
    }
}

TEST(PermSign, SpecExamples)
{
    EXPECT_EQ(perm_sign(5, MuExponent::make(1, 4)), Sign::minus);
    EXPECT_EQ(perm_sign(5, MuExponent::make(0, 4)), Sign::plus);
    EXPECT_EQ(perm_sign(9, MuExponent::make(4, 8)), Sign::plus);
    EXPECT_EQ(perm_sign_bruteforce(5, MuExponent::make(1, 4)), Sign::minus);
    EXPECT_EQ(perm_sign_bruteforce(9, MuExponent::make(4, 8)), Sign::plus);
}

TEST(PermSign, ClosedFormMatchesCycleWalk)
{
    for (std::int64_t Q = 2; Q <= 400; ++Q) {
        if (!arith::is_prime_power(Q)) continue;
        for (std::int64_t x = 0; x < Q - 1; ++x) {
            const MuExponent mx = MuExponent::make(x, Q - 1);
            ASSERT_EQ(perm_sign(Q, mx), perm_sign_bruteforce(Q, mx)) << "Q=" << Q << " x=" << x;
        }
    }
}

TEST(PermSign, PrimeFieldInversionCount)
{
    // Independent oracle: sign of y -> g^x y on {1..p-1} via inversion parity.
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        const std::int64_t g = primitive_root(p);
        for (std::int64_t x = 0; x < p - 1; ++x) {
            const std::int64_t mult = arith::powmod(g, x, p);
            std::vector<std::int64_t> image;
            for (std::int64_t y = 1; y < p; ++y) image.push_back(y * mult % p);
            std::int64_t inversions = 0;
            for (std::size_t i = 0; i < image.size(); ++i) {
                for (std::size_t j = i + 1; j < image.size(); ++j) inversions += image[i] > image[j];
            }
            EXPECT_EQ(perm_sign(p, MuExponent::make(x, p - 1)), sign_pow(inversions));
        }
    }
}

TEST(TameQuadChar, Algebra)
{
    const TameQuadChar chi{Sign::minus, Sign::plus};
    EXPECT_EQ(TameQuadChar::trivial() * chi, chi);
    for (Sign u : {Sign::plus, Sign::minus}) {
        for (Sign v : {Sign::plus, Sign::minus}) {
            const TameQuadChar c{u, v};
            EXPECT_TRUE((c * c).is_trivial());
        }
    }
    EXPECT_EQ(char_eval(chi, 1, 0), Sign::minus);
    EXPECT_EQ(char_eval(TameQuadChar{Sign::minus, Sign::minus}, 3, 5), Sign::plus);
    EXPECT_EQ(TameQuadChar::from_values(-1, 1), chi);
    EXPECT_THROW(TameQuadChar::from_values(3, 1), Error);
}
