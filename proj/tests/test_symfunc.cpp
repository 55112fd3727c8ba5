#include <gtest/gtest.h>

#include <random>

#include "umbracomb/umbracomb.hpp"

using namespace umbracomb;

namespace {

SymFunc h(unsigned i) { return SymFunc::h(i); }

// e_k(x_1..x_m) by subsets, h_k(x_1..x_m) by multisets, built from bit patterns.
GradedPoly brute_elementary(unsigned k, unsigned m) {
    GradedPoly out(Family::x);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (static_cast<unsigned>(std::popcount(mask)) != k)
            continue;
        std::vector<unsigned> idx;
        for (unsigned i = 0; i < m; ++i)
            if (mask & (1u << i))
                idx.push_back(i + 1);
        out.add_term(Monomial(idx), Rational(1));
    }
    return k == 0 ? GradedPoly(1) : out;
}

GradedPoly brute_complete(unsigned k, unsigned m) {
    GradedPoly out(Family::x);
    std::vector<unsigned> word(k, 1);
    if (k == 0)
        return GradedPoly(1);
    while (true) {
        if (std::is_sorted(word.begin(), word.end()))
            out.add_term(Monomial(word), Rational(1));
        unsigned pos = 0;
        while (pos < k && word[pos] == m)
            word[pos++] = 1;
        if (pos == k)
            break;
        ++word[pos];
    }
    return out;
}

SymFunc random_symfunc(std::mt19937& rng, unsigned max_degree) {
    std::uniform_int_distribution<int> num(-4, 4);
    SymFunc out;
    for (unsigned d = 1; d <= max_degree; ++d)
        for (const auto& mu : enumerate_partitions(d))
            out += h_mu(mu) * Rational(num(rng));
    return out;
}

// sum_mu c_mu n!/mu!: the dimension of the module with Frobenius image f.
Integer dimension(const SymFunc& f, unsigned n) {
    Rational acc = 0;
    for (const auto& mu : enumerate_partitions(n))
        acc += f.poly().coefficient(monomial_of(mu)) * Rational(factorial(n) / mu.parts_factorial());
    EXPECT_EQ(denominator(acc), 1);
    return numerator(acc);
}

Integer ipow(unsigned b, unsigned e) {
    Integer out = 1;
    for (unsigned i = 0; i < e; ++i)
        out *= b;
    return out;
}

}  // namespace

TEST(SymFunc, VariableExpansionsMatchBruteForce) {
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned k = 1; k <= 4; ++k) {
            EXPECT_EQ(complete_homogeneous(k, m), brute_complete(k, m)) << k << " " << m;
            EXPECT_EQ(elementary(k, m), brute_elementary(k, m)) << k << " " << m;
            if (m >= k) {
                EXPECT_EQ(expand_in_variables(e_in_h(k), m), brute_elementary(k, m)) << k << " " << m;
            }
        }
}

TEST(SymFunc, ElementaryInHCoordinates) {
    EXPECT_EQ(to_string(e_in_h(2)), "-h2 + h1^2");
    EXPECT_EQ(e_in_h(3), h(3) - Rational(2) * h(2) * h(1) + h(1) * h(1) * h(1));
    EXPECT_EQ(e_mu(Partition({2, 1})), e_in_h(2) * h(1));
}

TEST(SymFunc, OmegaIsAnInvolution) {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        SymFunc f = random_symfunc(rng, 5);
        EXPECT_EQ(omega(omega(f)), f);
    }
    for (unsigned n = 1; n <= 6; ++n)
        EXPECT_EQ(omega(h(n)), e_in_h(n));
}

TEST(SymFunc, IdentifySymmetricRecoversExpansions) {
    std::mt19937 rng(31);
    for (unsigned n = 1; n <= 5; ++n) {
        SymFunc f;
        for (const auto& mu : enumerate_partitions(n))
            f += h_mu(mu) * Rational(static_cast<int>(rng() % 9) - 4);
        EXPECT_EQ(identify_symmetric(expand_in_variables(f, n), n, n), f);
        EXPECT_EQ(identify_symmetric(expand_in_variables(f, n + 1), n + 1, n), f);
    }
}

TEST(SymFunc, IdentifySymmetricErrors) {
    GradedPoly x1 = GradedPoly::generator(Family::x, 1);
    GradedPoly x2 = GradedPoly::generator(Family::x, 2);
    EXPECT_THROW(identify_symmetric(x1 * x1 + x1 * x2, 2, 2), symmetry_error);
    EXPECT_THROW(identify_symmetric(x1 + x2, 1, 2), faithfulness_error);
    EXPECT_THROW(identify_symmetric(x1 * x1 + x2, 2, 2), symmetry_error);
    EXPECT_THROW(identify_symmetric(h(2).poly(), 2, 2), family_error);
    EXPECT_THROW(expand_in_variables(h(3), 2), faithfulness_error);
}

TEST(SymFunc, ParkingSymmetricFunctions) {
    EXPECT_EQ(to_string(pf(1)), "h1");
    EXPECT_EQ(to_string(pf(2)), "h2 + h1^2");
    EXPECT_EQ(to_string(pf(3)), "h3 + 3·h2*h1 + h1^3");
    for (unsigned n = 1; n <= 7; ++n)
        EXPECT_EQ(dimension(pf(n), n), ipow(n + 1, n - 1)) << n;
}

TEST(SymFunc, KParkingSymmetricFunctions) {
    EXPECT_EQ(pf_k(1, 2), Rational(2) * h(1));
    EXPECT_EQ(pf_k(2, 2), Rational(2) * h(2) + Rational(5) * h(1) * h(1));
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned n = 1; n <= 5; ++n)
            EXPECT_EQ(dimension(pf_k(n, k), n), ipow(k, n) * ipow(n + 1, n - 1)) << n << " " << k;
    for (unsigned n = 1; n <= 5; ++n)
        EXPECT_EQ(pf_k(n, 1), pf(n));
}

TEST(SymFunc, TypeBParkingSymmetricFunctions) {
    EXPECT_EQ(pf_typeB(2), Rational(2) * h(2) + h(1) * h(1));
    EXPECT_EQ(pf_typeB(3), Rational(3) * h(3) + Rational(6) * h(2) * h(1) + h(1) * h(1) * h(1));
    for (unsigned n = 1; n <= 6; ++n)
        EXPECT_EQ(dimension(pf_typeB(n), n), ipow(n, n)) << n;
}

TEST(SymFunc, MacdonaldHStar) {
    EXPECT_EQ(hstar(1, HstarMethod::lagrange_formula), -h(1));
    EXPECT_EQ(hstar(2, HstarMethod::series_inversion), Rational(2) * h(1) * h(1) - h(2));
    for (unsigned n = 1; n <= 6; ++n) {
        EXPECT_EQ(hstar(n, HstarMethod::lagrange_formula), hstar(n, HstarMethod::series_inversion)) << n;
        SymFunc signed_omega = omega(hstar(n, HstarMethod::series_inversion));
        EXPECT_EQ(n % 2 == 0 ? signed_omega : -signed_omega, pf(n)) << n;
    }
}

TEST(SymFunc, JsonRoundTrip) {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        SymFunc f = random_symfunc(rng, 4);
        EXPECT_EQ(symfunc_from_json(Json::parse(to_json(f).dump())), f);
    }
    EXPECT_EQ(to_json(pf(2)).dump(), R"({"h2":"1","h1^2":"1"})");
    EXPECT_THROW(symfunc_from_json(Json{{"a1", "1"}}), family_error);
}

TEST(SymFunc, RejectsOtherFamilies) {
    EXPECT_THROW(SymFunc(GradedPoly::generator(Family::a, 1)), family_error);
    EXPECT_EQ(SymFunc(GradedPoly(3)), SymFunc(3));
}
