#include <gtest/gtest.h>

#include <random>

#include "cda/series.hpp"
#include "cda/text_format.hpp"

namespace cda {
namespace {

const LaurentFp F7 = laurent_fp(7);
const LaurentQ QX = laurent_q();
const LaurentQ2 QXY = laurent_q2();

Series<PrimeField> f7(const char* s) { return parse_element(F7, s); }
Series<RationalField> qx(const char* s) { return parse_element(QX, s); }

TEST(Valuation, Basics) {
    EXPECT_EQ(*valuation(f7("t^2 + t^3")), Rational(2));
    EXPECT_FALSE(valuation(F7.zero()).has_value());
    EXPECT_THROW((void)valuation(F7.zero_to(5)), PrecisionError);
    EXPECT_EQ(*valuation(f7("t + t^2")), Rational(1));
}

TEST(Residue, Basics) {
    EXPECT_EQ(residue(f7("3 + t")).value(), 3U);
    EXPECT_TRUE(residue(f7("t^-1")).is_zero());
    EXPECT_TRUE(residue(f7("5*t^2")).is_zero());
    EXPECT_TRUE(residue(F7.zero()).is_zero());
    EXPECT_THROW((void)residue(F7.zero_to(0)), PrecisionError);
}

TEST(AngularComponent, Basics) {
    EXPECT_EQ(angular_component(f7("2*t^3 + t^4")).value(), 2U);
    EXPECT_EQ(angular_component(f7("5")).value(), 5U);
    const auto s = parse_element(QXY, "X*Y^2 + Y^3");
    EXPECT_TRUE(equal_to_precision(angular_component(s), qx("X")));
    EXPECT_THROW((void)angular_component(F7.zero()), Error);
}

TEST(Arithmetic, ExactProducts) {
    EXPECT_TRUE(equal_to_precision(f7("1 + t") * f7("1 - t"), f7("1 - t^2")));
    EXPECT_TRUE((f7("1 + t") * f7("1 - t")).is_exact());
    EXPECT_TRUE((f7("t") - f7("t")).is_exact_zero());
}

TEST(Arithmetic, PrecisionContract) {
    const auto a = f7("1 + 2*t + O(t^3)");
    const auto b = f7("3 + t^2 + O(t^3)");
    const auto p = a * b;
    ASSERT_TRUE(p.precision().has_value());
    EXPECT_EQ(*p.precision(), Rational(3));
    EXPECT_EQ(*(a + f7("t + O(t^2)")).precision(), Rational(2));
    EXPECT_EQ(*(f7("t^2 + O(t^5)") * f7("t^-1 + O(t^4)")).precision(), Rational(4));
}

TEST(Arithmetic, DomainMismatch) {
    const auto f11 = laurent_fp(11);
    EXPECT_THROW((void)(F7.one() + f11.one()), DomainMismatch);
}

TEST(Invert, Examples) {
    EXPECT_TRUE(equal_to_precision(invert(f7("1 - t"), Rational(4)), f7("1 + t + t^2 + t^3 + O(t^4)")));
    const auto inv_t = invert(f7("t"), Rational(4));
    EXPECT_TRUE(inv_t.is_exact());
    EXPECT_TRUE(equal_to_precision(inv_t, f7("t^-1")));
    const auto inv = invert(qx("2 + 2*X^2"), Rational(4));
    EXPECT_EQ(inv.to_string(), "1/2 - 1/2*X^2 + O(X^4)");
    EXPECT_THROW((void)invert(F7.zero(), Rational(3)), Error);
    EXPECT_THROW((void)invert(f7("1 + O(t^2)"), Rational(5)), PrecisionError);
}

TEST(Invert, RoundTripRandomized) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> coef(0, 6);
    std::uniform_int_distribution<int> lead(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        Series<PrimeField>::Terms terms;
        const int v = lead(rng);
        terms.emplace(Rational(v), PrimeField(7).element(1 + coef(rng) % 6));
        for (int e = v + 1; e < v + 6; ++e) {
            const auto c = PrimeField(7).element(coef(rng));
            if (!c.is_zero()) terms.emplace(Rational(e), c);
        }
        const auto s = F7.from_terms(terms);
        const auto r = s * invert(s, Rational(10));
        EXPECT_TRUE(equal_to_precision(r, F7.one()));
        EXPECT_GE(*r.precision(), Rational(10) + Rational(v));
        EXPECT_TRUE(equal_to_precision(s * s.inverse(), F7.one()));
    }
}

TEST(Hensel, Examples) {
    const auto r = hensel_qth_root(f7("1 + t"), 3, Rational(2));
    EXPECT_EQ(r.to_string(), "1 + 5*t + O(t^2)");
    EXPECT_TRUE(hensel_qth_root(F7.one(), 3, Rational(10)).is_exact());
    EXPECT_THROW((void)hensel_qth_root(qx("2 + 2*X^2"), 2, Rational(4)), Error);
    EXPECT_THROW((void)hensel_qth_root(f7("t"), 3, Rational(4)), Error);
    EXPECT_THROW((void)hensel_qth_root(laurent_fp(3).one(), 3, Rational(4)), Error);
}

TEST(Hensel, RootsRandomized) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint64_t> coef(0, 6);
    for (int trial = 0; trial < 50; ++trial) {
        Series<PrimeField>::Terms terms;
        terms.emplace(Rational(0), PrimeField(7).element(6));
        for (int e = 1; e < 8; ++e) {
            const auto c = PrimeField(7).element(coef(rng));
            if (!c.is_zero()) terms.emplace(Rational(e), c);
        }
        const auto s = F7.from_terms(terms);
        const auto r = hensel_qth_root(s, 3, Rational(15));
        EXPECT_EQ(residue(r).value(), 3U);
        EXPECT_TRUE(equal_to_precision(r.pow(3), s));
        EXPECT_GE(*r.pow(3).precision(), Rational(15));
    }
}

TEST(Cosets, Separation) {
    EXPECT_TRUE(is_coset_separating(Rational(1), 3, ValueGroup::integers()));
    EXPECT_FALSE(is_coset_separating(Rational(3), 3, ValueGroup::integers()));
    EXPECT_TRUE(is_coset_separating(Rational(1), 3, ValueGroup::p_divisible(7)));
    EXPECT_FALSE(is_coset_separating(Rational(3, 49), 3, ValueGroup::p_divisible(7)));
    EXPECT_THROW((void)is_coset_separating(Rational(1, 3), 3, ValueGroup::p_divisible(7)), Error);
}

TEST(ValueGroup, DivisibleMode) {
    const auto tower = hahn_tower_fp(7, 7);
    const auto s = parse_element(tower, "t^(1/7) + x*t^(2/49)");
    const auto p = s * s * s;
    for (const auto& [e, c] : p.terms()) {
        EXPECT_TRUE(tower.group().contains(e));
        for (const auto& [e2, c2] : c.terms()) EXPECT_TRUE(tower.group().contains(e2));
    }
    EXPECT_THROW((void)tower.monomial(tower.coefficients().one(), Rational(1, 3)), Error);
}

TEST(Squares, Tower) {
    EXPECT_TRUE(is_square_in_tower(qx("(1 + X)").pow(2)));
    EXPECT_FALSE(is_square_in_tower(qx("2 + 2*X^2")));
    EXPECT_FALSE(is_square_in_tower(qx("X")));
    EXPECT_TRUE(is_square_in_tower(qx("1 + X")));
    EXPECT_THROW((void)is_square_in_tower(qx("1 + O(X^3)")), Error);
    const auto y = parse_element(QXY, "(1 + X)*Y^2 + X*Y^3");
    EXPECT_TRUE(is_square_in_tower(y));
    EXPECT_FALSE(is_square_in_tower(parse_element(QXY, "X*Y^2")));
}

TEST(Squares, MultiplicativityRandomized) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> c(-4, 4);
    const auto nonsquare = parse_element(QXY, "(2 + 2*X^2)");
    for (int trial = 0; trial < 40; ++trial) {
        auto inner = QX.from_terms({{Rational(0), Rational(c(rng) == 0 ? 1 : c(rng))}, {Rational(1), Rational(c(rng))}});
        if (inner.is_zero()) inner = QX.one();
        auto s = QXY.from_terms({{Rational(trial % 3), inner}, {Rational(3), QX.from_integer(c(rng))}});
        EXPECT_TRUE(is_square_in_tower(s * s));
        EXPECT_FALSE(is_square_in_tower(nonsquare * s * s));
    }
}

TEST(Printing, Format) {
    EXPECT_EQ(f7("3*t^-1 + 2 + 5*t^3 + O(t^5)").to_string(), "3*t^(-1) + 2 + 5*t^3 + O(t^5)");
    EXPECT_EQ(F7.zero().to_string(), "0");
    EXPECT_EQ(F7.zero_to(4).to_string(), "O(t^4)");
    const auto tower = hahn_tower_fp(7, 7);
    const auto s = parse_element(tower, "(1 + 2*x)*t^2 + x*t^(3/7)");
    EXPECT_EQ(s.to_string(), "(x)*t^(3/7) + (1 + 2*x)*t^2");
    EXPECT_EQ(parse_element(tower, s.to_string()).to_string(), s.to_string());
}

}  // namespace
}  // namespace cda
