#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cda/base_fields.hpp"

namespace cda {
namespace {

std::vector<std::uint64_t> values(const std::vector<PrimeFieldElement>& xs) {
    std::vector<std::uint64_t> out;
    for (const auto& x : xs) out.push_back(x.value());
    return out;
}

TEST(PrimeField, RejectsComposite) {
    EXPECT_THROW(PrimeField(1), Error);
    EXPECT_THROW(PrimeField(21), Error);
    EXPECT_NO_THROW(PrimeField(2));
}

TEST(PrimeField, Arithmetic) {
    const PrimeField f(7);
    const auto a = f.element(5), b = f.element(4);
    EXPECT_EQ((a + b).value(), 2U);
    EXPECT_EQ((a - b).value(), 1U);
    EXPECT_EQ((b - a).value(), 6U);
    EXPECT_EQ((a * b).value(), 6U);
    EXPECT_EQ((a / b * b), a);
    EXPECT_EQ(a.inverse().value(), 3U);
    EXPECT_EQ((-a).value(), 2U);
    EXPECT_EQ(f.from_rational(Rational(-3, 4)).value(), 1U);
    EXPECT_THROW((void)f.zero().inverse(), Error);
    EXPECT_THROW((void)(a + PrimeField(11).one()), DomainMismatch);
}

TEST(PrimitiveRoot, SmallestRepresentative) {
    EXPECT_EQ(primitive_qth_root(7, 3).value(), 2U);
    // 3^5 = 243 ≡ 1 mod 11, so 3 (not 4) is the smallest.
    EXPECT_EQ(primitive_qth_root(11, 5).value(), 3U);
    EXPECT_TRUE(PrimeField(11).element(4).pow(5).is_one());
    EXPECT_EQ(primitive_qth_root(13, 3).value(), 3U);
    EXPECT_THROW((void)primitive_qth_root(7, 5), Error);
}

TEST(PrimitiveRoot, PowersAreDistinct) {
    for (std::uint64_t p : {7U, 11U, 13U, 29U, 31U, 43U, 71U}) {
        for (unsigned q : {2U, 3U, 5U, 7U}) {
            if ((p - 1) % q != 0) continue;
            const auto xi = primitive_qth_root(p, q);
            EXPECT_TRUE(xi.pow(q).is_one());
            std::set<std::uint64_t> seen;
            for (unsigned k = 0; k < q; ++k) seen.insert(xi.pow(k).value());
            EXPECT_EQ(seen.size(), q) << "p=" << p << " q=" << q;
        }
    }
}

TEST(QthPowers, Sets) {
    EXPECT_EQ(values(qth_power_set(7, 3)), (std::vector<std::uint64_t>{1, 6}));
    EXPECT_EQ(values(qth_power_set(5, 3)), (std::vector<std::uint64_t>{1, 2, 3, 4}));
    EXPECT_EQ(values(qth_power_set(11, 5)), (std::vector<std::uint64_t>{1, 10}));
}

TEST(QthPowers, Membership) {
    const PrimeField f(7);
    EXPECT_FALSE(is_qth_power(7, 3, f.element(2)));
    EXPECT_TRUE(is_qth_power(7, 3, f.element(6)));
    EXPECT_TRUE(is_qth_power(7, 3, f.element(1)));
    EXPECT_THROW((void)is_qth_power(7, 3, f.zero()), Error);
}

TEST(QthPowers, AgreesWithEnumeration) {
    for (std::uint64_t p = 2; p <= 100; ++p) {
        if (!is_prime(p)) continue;
        const PrimeField f(p);
        for (unsigned q : {2U, 3U, 5U, 7U}) {
            const auto set = qth_power_set(p, q);
            std::set<std::uint64_t> members;
            for (const auto& y : set) members.insert(y.value());
            const std::uint64_t expected = (p - 1) % q == 0 ? (p - 1) / q : p - 1;
            EXPECT_EQ(members.size(), expected) << "p=" << p << " q=" << q;
            for (std::uint64_t x = 1; x < p; ++x) {
                EXPECT_EQ(is_qth_power(p, q, f.element(x)), members.contains(x)) << "p=" << p << " q=" << q << " x=" << x;
            }
        }
    }
}

TEST(Dirichlet, Primes) {
    EXPECT_EQ(dirichlet_primes(3, 50), (std::vector<std::uint64_t>{7, 13, 19, 31, 37, 43}));
    EXPECT_EQ(dirichlet_primes(5, 35), (std::vector<std::uint64_t>{11, 31}));
    EXPECT_TRUE(dirichlet_primes(3, 6).empty());
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("-3/4").to_string(), "-3/4");
    EXPECT_EQ(Rational::parse("−3/4"), Rational(-3, 4));
    EXPECT_EQ(Rational::parse(" 6/8 "), Rational(3, 4));
    EXPECT_EQ(Rational::parse("5").to_string(), "5");
    EXPECT_THROW((void)Rational::parse("1/0"), Error);
    EXPECT_THROW((void)Rational::parse("x"), Error);
}

TEST(Rational, FieldAxiomsRandomized) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    for (int i = 0; i < 300; ++i) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Rational(1));
        }
        EXPECT_EQ(a - a, Rational(0));
    }
}

TEST(Roots, RationalAndFp) {
    EXPECT_EQ(*qth_root(Rational(8, 27), 3), Rational(2, 3));
    EXPECT_FALSE(qth_root(Rational(2), 2).has_value());
    EXPECT_EQ(*qth_root(Rational(-8), 3), Rational(-2));
    EXPECT_FALSE(qth_root(Rational(-4), 2).has_value());
    EXPECT_EQ(qth_root(PrimeField(7).element(6), 3)->value(), 3U);
    EXPECT_FALSE(qth_root(PrimeField(7).element(2), 3).has_value());
}

}  // namespace
}  // namespace cda
