#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stern/ring.hpp"

namespace stern {
namespace {

TEST(Ring, ReduceHandlesNegatives) {
    const Ring r(7);
    EXPECT_EQ(r.reduce(-1), 6);
    EXPECT_EQ(r.reduce(-14), 0);
    EXPECT_EQ(r.reduce(100), 2);
}

TEST(Ring, RejectsTinyModulus) {
    EXPECT_THROW(Ring(1), Error);
    EXPECT_THROW(Ring(0), Error);
    EXPECT_THROW(Ring(65536), Error);
}

TEST(Ring, PrimalityFlags) {
    EXPECT_TRUE(Ring(3).is_odd_prime());
    EXPECT_TRUE(Ring(65521).is_odd_prime());
    EXPECT_FALSE(Ring(2).is_odd_prime());
    EXPECT_FALSE(Ring(9).is_odd_prime());
    try {
        Ring(9).require_odd_prime("test");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::not_odd_prime);
    }
}

TEST(Ring, InverseMatchesBruteForce) {
    for (std::uint32_t m = 2; m <= 60; ++m) {
        const Ring r(m);
        for (std::uint32_t a = 0; a < m; ++a) {
            const std::int64_t want = oracle::brute_inverse(a, m);
            if (want < 0) {
                try {
                    (void)r.inv(static_cast<Value>(a));
                    ADD_FAILURE() << a << " mod " << m;
                } catch (const Error& e) {
                    EXPECT_EQ(e.kind(), ErrorKind::not_invertible);
                }
            } else {
                EXPECT_EQ(r.inv(static_cast<Value>(a)), want) << a << " mod " << m;
            }
        }
    }
}

TEST(Ring, MultiplicativeOrderMatchesBruteForce) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
        const Ring r(p);
        for (std::uint32_t a = 1; a < p; ++a) EXPECT_EQ(r.mult_order(static_cast<Value>(a)), oracle::brute_order(a, p));
    }
    EXPECT_EQ(Ring(7).mult_order(4), 3u);
    EXPECT_EQ(Ring(5).mult_order(4), 2u);
}

TEST(Ring, ArithmeticNearTheCap) {
    const Ring r(65521);
    EXPECT_EQ(r.mul(65520, 65520), 1);
    EXPECT_EQ(r.add(65520, 2), 1);
    EXPECT_EQ(r.sub(0, 1), 65520);
    EXPECT_EQ(r.pow(3, 65520), 1);
}

TEST(Matrix, DeterminantAndInverse) {
    const Ring r(5);
    const Mat3 a = make_mat<3>(r, {{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}});
    EXPECT_EQ(mat_det(r, a), 2);
    EXPECT_EQ(mat_mul(r, a, mat_inv(r, a)), Mat3::identity());
    EXPECT_EQ(mat_mul(r, mat_inv(r, a), a), Mat3::identity());

    const Mat3 singular = make_mat<3>(r, {{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}});
    try {
        (void)mat_inv(r, singular);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::singular_matrix);
    }
}

TEST(Matrix, PowerAndRowProduct) {
    const Ring r(7);
    const Mat2 l = make_mat<2>(r, {{{1, 1}, {0, 1}}});
    EXPECT_EQ(mat_pow(r, l, 7), Mat2::identity());
    EXPECT_EQ(mat_pow(r, l, 3), make_mat<2>(r, {{{1, 3}, {0, 1}}}));
    EXPECT_EQ((row_mul<2>(r, {2, 5}, l)), (Row<2>{2, 0}));
}

TEST(Matrix, MakeMatReducesEntries) {
    const Ring r(3);
    EXPECT_EQ(to_string(make_mat<2>(r, {{{4, 3}, {-3, 1}}})), "[[1,0],[0,1]]");
}

}  // namespace
}  // namespace stern
