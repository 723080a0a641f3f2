#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "ccbench/argument.hpp"

using namespace ccbench;

TEST(argument, omega_examples) {
    EXPECT_DOUBLE_EQ(omega(1.0, 1.0), std::numbers::pi / 4);
    EXPECT_EQ(to_bits(omega(-5.0, 0.0)), to_bits(0.0));
    EXPECT_EQ(omega(0.0, -3.0), std::numbers::pi / 2);
    EXPECT_EQ(to_bits(omega(-0.0, -0.0)), to_bits(0.0));
    EXPECT_THROW(omega(std::nan(""), 1.0), NanInputError);
}

TEST(argument, principal_arg_examples) {
    EXPECT_EQ(principal_arg(SignedComplex<double>{-1.0, 0.0}), std::numbers::pi);
    EXPECT_EQ(principal_arg(SignedComplex<double>{-1.0, -0.0}), -std::numbers::pi);
    EXPECT_EQ(to_bits(principal_arg(SignedComplex<double>{0.0, 0.0})), to_bits(0.0));
    EXPECT_EQ(to_bits(principal_arg(SignedComplex<double>{0.0, -0.0})), to_bits(-0.0));
    EXPECT_EQ(principal_arg(SignedComplex<double>{-0.0, 0.0}), std::numbers::pi);
    EXPECT_EQ(principal_arg(SignedComplex<double>{-0.0, -0.0}), -std::numbers::pi);
    EXPECT_THROW(principal_arg(SignedComplex<double>{1.0, std::nan("")}), NanInputError);
}

template <class T>
void check_conjugate_property(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 100000; ++i) {
        const SignedComplex<T> z{from_bits<T>(static_cast<BitsOf<T>>(rng())),
                                 from_bits<T>(static_cast<BitsOf<T>>(rng()))};
        if (std::isnan(z.re) || std::isnan(z.im)) {
            continue;
        }
        ASSERT_EQ(to_bits(principal_arg(conj(z))), to_bits(-principal_arg(z)));
    }
}

TEST(argument, conjugation_negates_arg) {
    check_conjugate_property<float>(5);
    check_conjugate_property<double>(6);
}

template <class T>
void check_negative_axis_is_pi() {
    const T pi = std::numbers::pi_v<T>;
    for (T x : {T(-1), T(-0.5), -std::numeric_limits<T>::max(), -std::numeric_limits<T>::min(),
                -std::numeric_limits<T>::denorm_min()}) {
        EXPECT_EQ(principal_arg(SignedComplex<T>{x, T(0)}), pi);
        EXPECT_EQ(principal_arg(SignedComplex<T>{x, T(-0.0)}), -pi);
    }
}

TEST(argument, negative_axis_gives_exact_pi) {
    check_negative_axis_is_pi<float>();
    check_negative_axis_is_pi<double>();
}

template <class T>
void check_quadrants() {
    const T pi = std::numbers::pi_v<T>;
    for (T m : {T(0), T(1), std::numeric_limits<T>::max()}) {
        for (bool xneg : {false, true}) {
            for (bool yneg : {false, true}) {
                const SignedComplex<T> z{xneg ? -m : m, yneg ? -m : m};
                const T a = principal_arg(z);
                EXPECT_EQ(sign_bit(a), yneg);
                if (xneg) {
                    EXPECT_GE(std::fabs(a), pi / 2);
                    EXPECT_LE(std::fabs(a), pi);
                } else {
                    EXPECT_LE(std::fabs(a), pi / 2);
                }
            }
        }
    }
}

TEST(argument, quadrant_follows_sign_bits) {
    check_quadrants<float>();
    check_quadrants<double>();
}
