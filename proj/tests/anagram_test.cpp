#include <gtest/gtest.h>

#include <random>

#include "cda/anagram.hpp"

namespace cda::anagram {
namespace {

TEST(TildeSigma, Examples) {
    EXPECT_EQ(tilde_sigma({0, 1, 2}, 3), 2U);
    EXPECT_EQ(tilde_sigma({1, 1}, 2), 1U);
    EXPECT_EQ(tilde_sigma({0, 0, 0, 0, 0}, 5), 0U);
    EXPECT_THROW((void)tilde_sigma({0, 3, 1}, 3), Error);
    EXPECT_THROW((void)tilde_sigma({0, 1}, 3), Error);
}

TEST(ClassOf, Examples) {
    const auto a = class_of({2, 1, 0}, 3);
    EXPECT_EQ(a.rep, (Tuple{0, 1, 2}));
    EXPECT_EQ(a.class_size, 6);
    EXPECT_EQ(a.level_counts, (std::vector<long long>{0, 3, 3}));

    const auto b = class_of({0, 0, 1}, 3);
    EXPECT_EQ(b.class_size, 3);
    EXPECT_EQ(b.level_counts, (std::vector<long long>{1, 1, 1}));

    const auto c = class_of({1, 1}, 2);
    EXPECT_EQ(c.class_size, 1);
    EXPECT_EQ(c.level_counts, (std::vector<long long>{0, 1}));
}

TEST(Coefficient, Examples) {
    EXPECT_EQ(coefficient_f(class_of({0, 1, 2}, 3)), -3);
    EXPECT_EQ(coefficient_f(class_of({1, 1, 1}, 3)), 1);
    EXPECT_EQ(coefficient_f(class_of({1, 1}, 2)), -1);
    EXPECT_EQ(coefficient_f(class_of({0, 1, 2}, 3), Convention::ClassSizeTimesLevelDifference), -18);
}

TEST(C0, Enumeration) {
    std::vector<Tuple> reps;
    for (const auto& c : c0_classes(3)) reps.push_back(c.rep);
    EXPECT_EQ(reps, (std::vector<Tuple>{{0, 0, 0}, {0, 1, 2}, {1, 1, 1}, {2, 2, 2}}));
    EXPECT_EQ(all_classes(3).size(), 10U);
    EXPECT_EQ(c0_classes(2).size(), 2U);
    for (const auto& c : c0_classes(5)) {
        EXPECT_EQ(coordinate_sum(c.rep) % 5, 0U);
        EXPECT_NE(c.coefficient(), 0);
    }
    EXPECT_THROW((void)c0_classes(11), Error);
}

TEST(LevelCounts, Exhaustive) {
    for (unsigned q : {2U, 3U, 5U, 7U}) {
        const auto report = verify_lemma_combin(q);
        EXPECT_EQ(report.statement_failures(), 0U) << "q=" << q;
        for (const auto& c : report.classes) {
            EXPECT_TRUE(c.level_size) << tuple_to_string(c.cls.rep);
            EXPECT_TRUE(c.shift_divisibility) << tuple_to_string(c.cls.rep);
        }
    }
    EXPECT_TRUE(verify_lemma_combin(2).passed());
    EXPECT_TRUE(verify_lemma_combin(3).passed());
    EXPECT_EQ(verify_lemma_combin(3).classes.size(), 10U);
    const auto c = class_of({0, 1, 2}, 3);
    EXPECT_EQ(c.level_counts[0] % 6, 0);
}

// q(q-1) | N_0 fails from q = 5 on; counts from an independent enumeration.
TEST(LevelCounts, FullDivisibilityCounterexamples) {
    const auto r5 = verify_lemma_combin(5);
    EXPECT_EQ(r5.count_failures(), 10U);
    const auto c = class_of({0, 0, 1, 1, 3}, 5);
    EXPECT_EQ(c.level_counts, (std::vector<long long>{10, 5, 5, 5, 5}));
    EXPECT_EQ(verify_lemma_combin(7).count_failures(), 63U);
    EXPECT_EQ(class_of({0, 0, 0, 0, 1, 1, 5}, 7).level_counts[0], 21);
}

TEST(Orbits, ReindexAndShift) {
    std::mt19937_64 rng(1);
    for (unsigned q : {3U, 5U, 7U}) {
        std::uniform_int_distribution<unsigned> entry(0, q - 1);
        for (int trial = 0; trial < 200; ++trial) {
            Tuple d(q);
            for (auto& x : d) x = entry(rng);
            const unsigned lambda = tilde_sigma(d, q);
            for (unsigned nu = 1; nu < q; ++nu) {
                // level λ goes to ν^{-1}λ
                unsigned nu_inv = 1;
                while ((nu_inv * nu) % q != 1) ++nu_inv;
                EXPECT_EQ(tilde_sigma(reindex_multiplicative(d, nu, q), q), (nu_inv * lambda) % q);
            }
            const unsigned sum = coordinate_sum(d) % q;
            EXPECT_EQ(tilde_sigma(cyclic_shift(d), q), (lambda + q - sum) % q);
        }
    }
}

TEST(ClosedForm, Degrees2And3) {
    EXPECT_EQ(closed_form_text(norm_closed_form(2)), "b0^2 - t*b1^2");
    EXPECT_EQ(closed_form_text(norm_closed_form(3)), "b0^3 - 3*t*b0*b1*b2 + t*b1^3 + t^2*b2^3");
    const auto five = norm_closed_form(5);
    EXPECT_EQ(five.front(), (NormMonomial{{5, 0, 0, 0, 0}, 0, 1}));
}

}  // namespace
}  // namespace cda::anagram
