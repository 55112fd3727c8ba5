#include <gtest/gtest.h>

#include <set>
#include <thread>

#include "umbracomb/umbracomb.hpp"

using namespace umbracomb;

namespace {

GradedPoly a(unsigned i) { return GradedPoly::generator(Family::a, i); }
GradedPoly g(unsigned i) { return GradedPoly::generator(Family::g, i); }

// E[(alpha' + ... + alpha^{(n)})^k] over n fresh uncorrelated copies.
GradedPoly sum_of_copies_moment(unsigned n, unsigned k, unsigned order) {
    UmbraRegistry reg;
    UmbralExpr sum(0);
    for (unsigned c = 0; c < n; ++c)
        sum += UmbralExpr(reg.new_umbra(MomentSeq::generic(Family::a, order)));
    return eval(pow(sum, k));
}

}  // namespace

TEST(Umbral, EvaluationIsMultiplicativeOverDistinctLabels) {
    UmbraRegistry reg;
    auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, 4));
    auto gamma = reg.new_umbra(MomentSeq::generic(Family::g, 4));
    EXPECT_EQ(eval(pow(UmbralExpr(alpha), 2) * pow(UmbralExpr(gamma), 3)), a(2) * g(3));
    EXPECT_EQ(eval(pow(UmbralExpr(alpha) + UmbralExpr(gamma), 2)), a(2) + 2 * (a(1) * g(1)) + g(2));
    // same label: powers add, they do not multiply
    EXPECT_EQ(eval(UmbralExpr(alpha) * UmbralExpr(alpha)), a(2));
}

TEST(Umbral, SimilarUmbraeAreNotEqual) {
    UmbraRegistry reg;
    auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, 3));
    auto copy = reg.new_umbra(MomentSeq::generic(Family::a, 3));
    EXPECT_EQ(*alpha.moments, *copy.moments);
    EXPECT_EQ(eval(UmbralExpr(alpha) * UmbralExpr(copy)), a(1) * a(1));
    EXPECT_TRUE(umbral_equiv(UmbralExpr(alpha), UmbralExpr(copy)));
}

TEST(Umbral, DotProductExamples) {
    UmbraRegistry reg;
    auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, 4));
    EXPECT_EQ(eval(pow(UmbralExpr(reg.dot(2, alpha)), 2)), 2 * a(2) + 2 * (a(1) * a(1)));
    EXPECT_EQ(eval(pow(UmbralExpr(reg.dot(-1, alpha)), 2)), 2 * (a(1) * a(1)) - a(2));
    EXPECT_EQ(eval(pow(UmbralExpr(reg.dot(0, alpha)), 3)), GradedPoly(0));
    EXPECT_EQ(*reg.dot(1, alpha).moments, *alpha.moments);
}

TEST(Umbral, DotMatchesSumOfUncorrelatedCopies) {
    const unsigned order = 5;
    UmbraRegistry reg;
    auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, order));
    for (unsigned n = 1; n <= 4; ++n) {
        auto dotted = reg.dot(static_cast<int>(n), alpha);
        for (unsigned k = 1; k <= order; ++k)
            EXPECT_EQ(dotted.moments->moment(k), sum_of_copies_moment(n, k, order)) << n << " " << k;
    }
}

TEST(Umbral, NegativeDotInvertsTheGeneratingFunction) {
    const unsigned order = 8;
    UmbraRegistry reg;
    auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, order));
    auto inverse = reg.dot(-1, alpha);
    // alpha + (-1.alpha) has vanishing moments
    for (unsigned k = 1; k <= order; ++k)
        EXPECT_TRUE(eval(pow(UmbralExpr(alpha) + UmbralExpr(inverse), k)).is_zero()) << k;
    auto product = umbra_to_genfun(alpha) * umbra_to_genfun(inverse);
    EXPECT_EQ(product, (TruncSeries<GradedPoly>::constant(order, GradedPoly(1))));
    // -2.alpha = -1.(2.alpha)
    EXPECT_EQ(*reg.dot(-2, alpha).moments, *reg.dot(-1, reg.dot(2, alpha)).moments);
}

TEST(Umbral, NestedDotsMultiply) {
    UmbraRegistry reg;
    auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, 5));
    EXPECT_EQ(*reg.dot(2, reg.dot(3, alpha)).moments, *reg.dot(6, alpha).moments);
}

TEST(Umbral, NegationFlipsOddMoments) {
    UmbraRegistry reg;
    auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, 6));
    auto neg = reg.negate(alpha);
    auto f = umbra_to_genfun(alpha);
    auto fneg = umbra_to_genfun(neg);
    for (unsigned i = 0; i <= 6; ++i)
        EXPECT_EQ(fneg[i], i % 2 == 0 ? f[i] : -f[i]);
}

TEST(Umbral, DerivativeUmbra) {
    const unsigned order = 8;
    UmbraRegistry reg;
    auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, order));
    auto expected = shift_up(umbra_to_genfun(alpha));
    expected[0] = GradedPoly(1);
    EXPECT_EQ(umbra_to_genfun(reg.derivative(alpha)), expected);
    EXPECT_EQ(reg.derivative(alpha).moments->moment(3), 3 * a(2));
    auto short_umbra = reg.new_umbra(MomentSeq::generic(Family::a, 1));
    EXPECT_THROW(reg.derivative(short_umbra), std::invalid_argument);
}

TEST(Umbral, CompositionalInverseUmbra) {
    UmbraRegistry reg;
    auto alpha = reg.new_umbra(MomentSeq::from_rationals({1, 2, 0, 0}));
    auto inv = reg.comp_inverse(alpha);
    std::vector<Rational> expected{1, -2, 12, -120};
    for (unsigned i = 1; i <= 4; ++i)
        EXPECT_EQ(inv.moments->moment(i), GradedPoly(expected[i - 1])) << i;

    auto generic = reg.new_umbra(MomentSeq::from_rationals({3, -1, 2, 5, 7, 1}));
    EXPECT_EQ(*reg.comp_inverse(reg.comp_inverse(generic)).moments, *generic.moments);
    auto singular = reg.new_umbra(MomentSeq::from_rationals({0, 1, 1}));
    EXPECT_THROW(reg.comp_inverse(singular), inversion_error);
}

TEST(Umbral, BellMomentsCountSetPartitions) {
    UmbraRegistry reg;
    auto beta = reg.special(SpecialUmbra::bell, 8);
    for (unsigned i = 1; i <= 8; ++i)
        EXPECT_EQ(beta.moments->moment(i), GradedPoly(Rational(enumerate_set_partitions(Ground::positive, i).size())));
    std::vector<int> first{1, 2, 5, 15, 52, 203};
    for (unsigned i = 1; i <= 6; ++i)
        EXPECT_EQ(bell_numbers(6)[i - 1], first[i - 1]);
}

TEST(Umbral, ElementaryUmbrae) {
    UmbraRegistry reg;
    auto chi = umbra_to_genfun(reg.special(SpecialUmbra::singleton, 6));
    auto one_plus_t = TruncSeries<GradedPoly>::identity(6);
    one_plus_t[0] = GradedPoly(1);
    EXPECT_EQ(chi, one_plus_t);
    auto eps = reg.special(SpecialUmbra::augmentation, 4);
    auto u = reg.special(SpecialUmbra::unity, 4);
    for (unsigned i = 1; i <= 4; ++i) {
        EXPECT_TRUE(eps.moments->moment(i).is_zero());
        EXPECT_EQ(u.moments->moment(i), GradedPoly(1));
    }
    // f(beta, t) = exp(e^t - 1) gives B_{n+1} = sum_k binom(n, k) B_k.
    auto beta = reg.special(SpecialUmbra::bell, 10);
    for (unsigned n = 0; n < 10; ++n) {
        GradedPoly acc(0);
        for (unsigned k = 0; k <= n; ++k)
            acc += beta.moments->moment(k) * Rational(binomial(n, k));
        EXPECT_EQ(beta.moments->moment(n + 1), acc) << n;
    }
    EXPECT_EQ(reg.special(SpecialUmbra::bell, 4).label, reg.special(SpecialUmbra::bell, 4).label);
}

TEST(Umbral, EpsBarInVariables) {
    const unsigned m = 3;
    UmbraRegistry reg;
    auto in_x = reg.special(SpecialUmbra::eps_bar, 5, m);
    auto in_h = reg.special(SpecialUmbra::eps_bar, 5);
    for (unsigned i = 1; i <= 5; ++i) {
        GradedPoly expected = elementary(i, m) * Rational(factorial(i));
        EXPECT_EQ(in_x.moments->moment(i), expected) << i;
        if (i <= m) {
            EXPECT_EQ(expand_in_variables(SymFunc(in_h.moments->moment(i)), m), expected) << i;
        }
    }
    EXPECT_TRUE(in_x.moments->moment(4).is_zero());
}

TEST(Umbral, ThetaBarIsMinusOneDotMinusEpsBar) {
    const unsigned order = 8;
    UmbraRegistry reg;
    auto theta = reg.special(SpecialUmbra::theta_bar, order);
    auto built = reg.dot(-1, reg.negate(reg.special(SpecialUmbra::eps_bar, order)));
    EXPECT_EQ(*theta.moments, *built.moments);
    EXPECT_EQ(theta.moments->moment(2), GradedPoly(2) * GradedPoly::generator(Family::h, 2));
}

TEST(Umbral, TruncationIsReported) {
    UmbraRegistry reg;
    auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, 2));
    EXPECT_THROW(eval(pow(UmbralExpr(alpha), 3)), truncation_error);
    EXPECT_THROW(volume_umbral(3, VolumeKind::A, *alpha.moments), truncation_error);
}

TEST(Umbral, GeneratingFunctionRoundTrip) {
    auto m = MomentSeq::generic(Family::a, 6);
    EXPECT_EQ(MomentSeq::from_genfun(m.genfun()), m);
    TruncSeries<GradedPoly> bad(3);
    EXPECT_THROW(MomentSeq::from_genfun(bad), std::invalid_argument);
}

TEST(Umbral, RegistryMemoizesAcrossThreads) {
    UmbraRegistry reg;
    auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, 6));
    std::vector<std::uint64_t> labels(8);
    {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < labels.size(); ++i)
            pool.emplace_back([&, i] { labels[i] = reg.dot(3, alpha).label.value; });
    }
    EXPECT_EQ(std::set<std::uint64_t>(labels.begin(), labels.end()).size(), 1u);
    EXPECT_NE(reg.dot(3, alpha).label, reg.dot(2, alpha).label);
    EXPECT_NE(reg.new_umbra(MomentSeq::generic(Family::a, 6)).label, alpha.label);
}
