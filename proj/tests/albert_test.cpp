#include <gtest/gtest.h>

#include "cda/albert.hpp"
#include "cda/linear_algebra.hpp"
#include "cda/text_format.hpp"

namespace cda {
namespace {

const LaurentQ2 F = laurent_q2();

QuaternionAlgebra<RationalField> hamilton() { return {RationalField{}, Rational(-1), Rational(-1)}; }

Quaternion<RationalField> rq(long a, long b, long c, long d) {
    return make_quaternion(hamilton(), Rational(a), Rational(b), Rational(c), Rational(d));
}

TEST(Quaternion, Relations) {
    const auto h = hamilton();
    const auto i = quaternion_basis(h, 1), j = quaternion_basis(h, 2);
    EXPECT_EQ((i * j).to_string(), "[0; 0; 0; 1]");
    EXPECT_EQ((j * i).to_string(), "[0; 0; 0; -1]");
    EXPECT_EQ((i * i).to_string(), "[-1; 0; 0; 0]");
    EXPECT_EQ((rq(1, 1, 1, 1) * rq(1, -1, -1, -1)).to_string(), "[4; 0; 0; 0]");
    EXPECT_EQ(reduced_norm(rq(1, 1, 1, 1)), Rational(4));
    EXPECT_EQ(reduced_norm(rq(3, 0, 0, 0)), Rational(9));
}

TEST(Quaternion, GeneralParameters) {
    const QuaternionAlgebra<RationalField> h(RationalField{}, Rational(2), Rational(-3));
    const auto i = quaternion_basis(h, 1), j = quaternion_basis(h, 2), k = quaternion_basis(h, 3);
    EXPECT_EQ((i * i).to_string(), "[2; 0; 0; 0]");
    EXPECT_EQ((j * j).to_string(), "[-3; 0; 0; 0]");
    EXPECT_EQ((k * k).to_string(), "[6; 0; 0; 0]");
    Stream rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto r = [&] { return sample(RationalField{}, rng); };
        const auto x = make_quaternion(h, r(), r(), r(), r());
        const auto y = make_quaternion(h, r(), r(), r(), r());
        const auto z = make_quaternion(h, r(), r(), r(), r());
        EXPECT_EQ(((x * y) * z).to_string(), (x * (y * z)).to_string());
        EXPECT_EQ(reduced_norm(x * y), reduced_norm(x) * reduced_norm(y));
        EXPECT_EQ((x * conjugate(x)).to_string(), make_quaternion(h, reduced_norm(x), Rational(0), Rational(0), Rational(0)).to_string());
    }
}

TEST(Quaternion, InvertibleIffNormNonzero) {
    const QuaternionAlgebra<RationalField> split(RationalField{}, Rational(1), Rational(1));
    const RationalField q;
    auto left_matrix = [&](const Quaternion<RationalField>& x) {
        Matrix<Rational> m(4, std::vector<Rational>(4));
        for (std::size_t j = 0; j < 4; ++j) {
            const auto col = x * quaternion_basis(x.algebra, j);
            for (std::size_t k = 0; k < 4; ++k) m[k][j] = col.c[k];
        }
        return m;
    };
    const auto zd = make_quaternion(split, Rational(1), Rational(1), Rational(0), Rational(0));
    EXPECT_TRUE(reduced_norm(zd).is_zero());
    EXPECT_FALSE(solve(q, left_matrix(zd), {Rational(1), Rational(0), Rational(0), Rational(0)}).has_value());
    const auto inv = make_quaternion(split, Rational(2), Rational(1), Rational(0), Rational(0));
    EXPECT_TRUE(solve(q, left_matrix(inv), {Rational(1), Rational(0), Rational(0), Rational(0)}).has_value());
}

TEST(Biquaternion, Structure) {
    const auto [d1, d2] = standard_biquaternion_factors(F);
    const auto b = tensor_product(d1, d2);
    EXPECT_EQ(b.constants().n(), 16U);
    EXPECT_TRUE(is_associative_unital(b.constants()));
    const auto i1 = b.unit(4), i2 = b.unit(1);  // i⊗1, 1⊗i'
    EXPECT_TRUE(vectors_equal_to_precision(b.mul(i1, i2), b.mul(i2, i1)));
    EXPECT_TRUE(vectors_equal_to_precision(b.mul(b.one(), i1), i1));
    Matrix<Series<SeriesField<RationalField>>> basis;
    for (std::size_t k = 0; k < 16; ++k) basis.push_back(b.unit(k));
    EXPECT_EQ(rank(F, basis), 16U);
}

TEST(Albert, Form) {
    const auto [d1, d2] = standard_biquaternion_factors(F);
    const auto phi = albert_form(d1, d2);
    EXPECT_EQ(phi.to_string(), "((X), (-1), (X), (X), (-1)*Y, (-X)*Y)");
    auto e = [&](std::size_t k) {
        std::array<Series<SeriesField<RationalField>>, 6> a{F.zero(), F.zero(), F.zero(), F.zero(), F.zero(), F.zero()};
        a[k] = F.one();
        return a;
    };
    EXPECT_EQ(phi.evaluate(e(0)).to_string(), "(X)");
    EXPECT_EQ(phi.evaluate(e(1)).to_string(), "(-1)");
}

TEST(Albert, SampledAnisotropy) {
    const auto [d1, d2] = standard_biquaternion_factors(F);
    const auto phi = albert_form(d1, d2);
    Stream rng(0);
    const SeriesShape shape{-1, 1, 3, std::nullopt, 0.7};
    EXPECT_TRUE(anisotropy_sample_test(phi, F, 200, rng, shape).passed());
    const QuadraticExtension<LaurentQ2> k(F, nonsquare_witness(F).element);
    const auto rk = anisotropy_sample_test(phi, k, 100, rng, shape);
    EXPECT_TRUE(rk.passed());
    EXPECT_FALSE(rk.extension.empty());
}

TEST(Albert, SquareParameterRejected) {
    EXPECT_THROW(QuadraticExtension<LaurentQ2>(F, parse_element(F, "(1 + 2*X + X^2)")), Error);
}

TEST(Sos, LeadingData) {
    auto e = [&](const char* s) { return parse_element(F, s); };
    const auto a = sos_leading_data({e("(1 + X)"), e("(X)")});
    EXPECT_EQ(a.v_y, Rational(0));
    EXPECT_EQ(a.ac_y, "1 + 2*X + 2*X^2");
    EXPECT_EQ(a.v_x, Rational(0));
    EXPECT_EQ(a.ac_x, Rational(1));
    EXPECT_TRUE(a.holds());
    EXPECT_EQ(sos_leading_data({e("Y")}).v_y, Rational(2));
    const auto c = sos_leading_data({e("X*Y"), e("Y")});
    EXPECT_EQ(c.v_y, Rational(2));
    EXPECT_EQ(c.ac_y, "1 + X^2");
    EXPECT_TRUE(c.holds());
    EXPECT_THROW((void)sos_leading_data({F.zero()}), Error);
}

TEST(Ordering, Signs) {
    auto e = [&](const char* s) { return parse_element(F, s); };
    EXPECT_EQ(sign_q2(e("(-X)*Y + 5")), 1);
    EXPECT_EQ(sign_q2(e("(X - 1)")), -1);
    EXPECT_EQ(sign_q2(F.zero()), 0);
}

TEST(Nonsquare, Witness) {
    const auto w = nonsquare_witness(F);
    EXPECT_EQ(w.element.to_string(), "(2 + 2*X^2)");
    EXPECT_TRUE(w.expansion_checked);
    EXPECT_FALSE(w.is_square);
    EXPECT_TRUE(is_square_in_tower(parse_element(laurent_q(), "1 + X")));
}

}  // namespace
}  // namespace cda
