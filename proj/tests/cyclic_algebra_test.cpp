#include <gtest/gtest.h>

#include <random>

#include "cda/cyclic_algebra.hpp"
#include "cda/text_format.hpp"

namespace cda {
namespace {

CyclicAlgebra<LaurentFp> f7_algebra(const char* alpha) {
    const auto k = laurent_kummer(7, 3);
    return {k, parse_element(k.field(), alpha)};
}

CyclicAlgebra<RationalField> hamilton() { return {KummerContext<RationalField>(RationalField{}, 2, Rational(-1), Rational(-1)), Rational(-1)}; }

AlgebraElement<LaurentFp> random_exact(const CyclicAlgebra<LaurentFp>& d, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> c(0, 6);
    std::uniform_int_distribution<int> lo(-2, 2);
    std::vector<Series<PrimeField>> coords;
    for (std::size_t i = 0; i < d.n(); ++i) {
        Series<PrimeField>::Terms terms;
        const int start = lo(rng);
        for (int e = start; e < start + 3; ++e) {
            const auto x = PrimeField(7).element(c(rng));
            if (!x.is_zero()) terms.emplace(Rational(e), x);
        }
        coords.push_back(d.field().from_terms(std::move(terms)));
    }
    auto out = d.element(std::move(coords));
    return out.is_zero() ? d.one() : out;
}

TEST(RelationMul, Rules) {
    const auto d = f7_algebra("2");
    EXPECT_EQ((d.x() * d.u()).to_string(), (Series<PrimeField>(d.field().from_integer(2)) * d.u() * d.x()).to_string());
    EXPECT_EQ((d.x().pow(2) * d.x()).to_string(), d.scalar(d.alpha()).to_string());
    const auto a = d.basis(4) + d.basis(7);
    EXPECT_EQ((d.one() * a).to_string(), a.to_string());
    EXPECT_EQ((d.u().pow(3)).to_string(), d.scalar(d.field().variable()).to_string());
    EXPECT_EQ(d.label(5), "u^2X");
    EXPECT_EQ(d.label(0), "1");
}

TEST(RelationMul, AssociativeRandomized) {
    std::mt19937_64 rng(4);
    const auto d = f7_algebra("2");
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_exact(d, rng), b = random_exact(d, rng), c = random_exact(d, rng);
        EXPECT_TRUE(equal_to_precision((a * b) * c, a * (b * c)));
    }
}

TEST(RelationMul, TwistByGalois) {
    const auto d = f7_algebra("2");
    const auto k = d.kummer();
    const auto b = k.element(parse_coordinates(k.field(), "[1 + t; 3; t^-1]"));
    EXPECT_TRUE(equal_to_precision(d.x() * d.embed(b), d.embed(galois_sigma(b, 1)) * d.x()));
}

TEST(StructureConstants, Hamilton) {
    const auto h = hamilton();
    const auto s = structure_constants(h);
    EXPECT_EQ(s.n(), 4U);
    EXPECT_TRUE(is_associative_unital(s));
    // basis (1, u, X, uX) = (1, i, j, k)
    auto prod = [&](std::size_t i, std::size_t j) { return constants_mul(s.unit(i), s.unit(j), s); };
    auto neg = [&](std::size_t i) {
        auto v = s.unit(i);
        v[i] = Rational(-1);
        return v;
    };
    EXPECT_EQ(prod(1, 1), neg(0));
    EXPECT_EQ(prod(2, 2), neg(0));
    EXPECT_EQ(prod(3, 3), neg(0));
    EXPECT_EQ(prod(1, 2), s.unit(3));
    EXPECT_EQ(prod(2, 1), neg(3));
}

TEST(StructureConstants, EntriesForQ3) {
    const auto d = f7_algebra("2");
    const auto s = structure_constants(d);
    const auto& uu = s.product(1, 1);
    ASSERT_EQ(uu.size(), 1U);
    EXPECT_EQ(uu[0].first, 2U);
    EXPECT_TRUE(is_one(uu[0].second));
    const auto& xu = s.product(3, 1);
    ASSERT_EQ(xu.size(), 1U);
    EXPECT_EQ(xu[0].first, 4U);
    EXPECT_EQ(xu[0].second.to_string(), "2");
}

TEST(StructureConstants, MatchesRelationMul) {
    std::mt19937_64 rng(8);
    const auto d = f7_algebra("2");
    const auto s = structure_constants(d);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_exact(d, rng), b = random_exact(d, rng);
        EXPECT_TRUE(vectors_equal_to_precision(constants_mul(a.coords(), b.coords(), s), (a * b).coords()));
    }
}

TEST(Division, Certificates) {
    const auto two = is_division(f7_algebra("2"));
    EXPECT_TRUE(two.is_division);
    EXPECT_EQ(two.norm.residue->value(), 2U);
    const auto six = is_division(f7_algebra("6"));
    EXPECT_FALSE(six.is_division);
    EXPECT_EQ(six.norm.preimage->to_string(), "[3; 0; 0]");
    const auto t = is_division(f7_algebra("t"));
    EXPECT_FALSE(t.is_division);
    EXPECT_EQ(t.norm.preimage->to_string(), "[0; 1; 0]");
}

TEST(ZeroDivisors, CubeWitness) {
    const auto d = f7_algebra("6");
    const auto [l, r] = zero_divisor_witness(d, d.field().from_integer(3));
    EXPECT_EQ(r.to_display(), "(2) + (3)*X + (1)*X^2");
    const auto p = l * r;
    EXPECT_TRUE(p.is_zero() && p.is_exact());
    EXPECT_THROW((void)zero_divisor_witness(d, d.field().from_integer(2)), Error);
}

TEST(ZeroDivisors, NormWitness) {
    const auto d = f7_algebra("t");
    const auto [l, r] = norm_zero_divisor_witness(d, d.kummer().u_power(1));
    EXPECT_FALSE(l.is_zero());
    EXPECT_FALSE(r.is_zero());
    const auto p = l * r;
    EXPECT_TRUE(p.is_zero() && p.is_exact());
    const auto k = left_annihilated(l);
    ASSERT_TRUE(k.has_value());
    EXPECT_TRUE((l * *k).is_zero());
}

TEST(Matrices, LeftMultiplication) {
    const auto d = f7_algebra("6");
    EXPECT_EQ(rank(d.field(), left_mul_matrix(d.one())), 9U);
    const auto lm = left_mul_matrix(d.x() - d.scalar(d.field().from_integer(3)));
    EXPECT_LT(rank(d.field(), lm), 9U);
}

TEST(Invert, Examples) {
    const auto h = hamilton();
    const auto a = h.element({Rational(1), Rational(1), Rational(1), Rational(1)});
    const auto inv = invert(a);
    EXPECT_EQ(inv.to_string(), "[1/4; -1/4; -1/4; -1/4]");

    const auto d = f7_algebra("2");
    const auto xi = invert(d.x());
    EXPECT_TRUE(equal_to_precision(xi, d.field().from_integer(2).inverse() * d.x().pow(2)));

    const auto six = f7_algebra("6");
    try {
        (void)invert(six.x() - six.scalar(six.field().from_integer(3)));
        FAIL() << "expected a zero divisor";
    } catch (const ZeroDivisorError& e) {
        // proportional to X^2 + 3X + 2
        const auto k = parse_coordinates(six.field(), e.kernel());
        for (std::size_t i : {1, 2, 4, 5, 7, 8}) EXPECT_TRUE(k[i].is_zero());
        EXPECT_FALSE(k[6].is_zero());
        EXPECT_TRUE(equal_to_precision(k[0], six.field().from_integer(2) * k[6]));
        EXPECT_TRUE(equal_to_precision(k[3], six.field().from_integer(3) * k[6]));
    }
}

TEST(Invert, RoundTripRandomized) {
    std::mt19937_64 rng(15);
    const auto d = f7_algebra("2");
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = random_exact(d, rng);
        const auto inv = invert(a, Rational(20));
        EXPECT_TRUE(equal_to_precision(a * inv, d.one()));
        EXPECT_TRUE(equal_to_precision(inv * a, d.one()));
    }
}

TEST(Center, IsBaseField) {
    EXPECT_EQ(center_dimension(f7_algebra("2")), 1U);
    EXPECT_EQ(center_dimension(hamilton()), 1U);
}

}  // namespace
}  // namespace cda
