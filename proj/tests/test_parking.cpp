#include <gtest/gtest.h>

#include <set>

#include "umbracomb/umbracomb.hpp"

using namespace umbracomb;

namespace {

// Car i prefers spot p_i and takes the first free spot at or after it.
bool cars_all_park(const std::vector<unsigned>& p, unsigned spots) {
    std::vector<bool> taken(spots + 1, false);
    for (unsigned pref : p) {
        unsigned s = pref;
        while (s <= spots && taken[s])
            ++s;
        if (s > spots)
            return false;
        taken[s] = true;
    }
    return true;
}

// All words in [max]^n.
std::vector<std::vector<unsigned>> words(unsigned n, unsigned max) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> w(n, 1);
    while (true) {
        out.push_back(w);
        unsigned pos = 0;
        while (pos < n && w[pos] == max)
            w[pos++] = 1;
        if (pos == n)
            break;
        ++w[pos];
    }
    return out;
}

// For every j, at least j entries are at most kj.
bool k_parking_by_counts(const std::vector<unsigned>& p, unsigned k) {
    const unsigned n = static_cast<unsigned>(p.size());
    for (unsigned j = 1; j <= n; ++j) {
        unsigned at_most = 0;
        for (unsigned v : p)
            at_most += v <= k * j;
        if (at_most < j)
            return false;
    }
    return true;
}

Integer ipow(unsigned b, unsigned e) {
    Integer out = 1;
    for (unsigned i = 0; i < e; ++i)
        out *= b;
    return out;
}

TypeAggregate brute_volume(unsigned n, bool type_b) {
    TypeAggregate out;
    for (const auto& w : words(n, n))
        if (type_b || cars_all_park(w, n))
            out.add(detail::content_type(w), Rational(Integer(1), factorial(n)));
    return out;
}

TypeAggregate agg(std::initializer_list<std::pair<const char*, Rational>> entries) {
    TypeAggregate out;
    for (const auto& [mu, c] : entries)
        out.add(parse_partition(mu), c);
    return out;
}

}  // namespace

TEST(Parking, Membership) {
    std::vector<unsigned> ok{3, 1, 1}, bad{3, 3, 1}, zero{0, 1};
    EXPECT_TRUE(is_parking(ok, ParkingKind::classical()));
    EXPECT_FALSE(is_parking(bad, ParkingKind::classical()));
    EXPECT_FALSE(is_parking(zero, ParkingKind::classical()));
    EXPECT_TRUE(is_parking(bad, ParkingKind::type_B()));
    std::vector<unsigned> k2{4, 1};
    EXPECT_TRUE(is_parking(k2, ParkingKind::k_parking(2)));
    EXPECT_FALSE(is_parking(k2, ParkingKind::classical()));
    EXPECT_THROW(is_parking(std::vector<unsigned>{}, ParkingKind::classical()), arity_error);
}

TEST(Parking, EnumerationMatchesCarSimulation) {
    for (unsigned n = 1; n <= 6; ++n) {
        std::set<std::vector<unsigned>> expected;
        for (const auto& w : words(n, n))
            if (cars_all_park(w, n))
                expected.insert(w);
        std::set<std::vector<unsigned>> got;
        auto all = enumerate_parking(n, ParkingKind::classical());
        for (const auto& p : all)
            got.insert(p.entries);
        EXPECT_EQ(got.size(), all.size()) << "duplicates at n=" << n;
        EXPECT_EQ(got, expected) << n;
        EXPECT_EQ(Integer(all.size()), ipow(n + 1, n - 1));
    }
}

TEST(Parking, KParkingMatchesCountingCriterion) {
    for (unsigned k = 2; k <= 3; ++k)
        for (unsigned n = 1; n <= 4; ++n) {
            std::set<std::vector<unsigned>> expected;
            for (const auto& w : words(n, k * n))
                if (k_parking_by_counts(w, k))
                    expected.insert(w);
            std::set<std::vector<unsigned>> got;
            for (const auto& p : enumerate_parking(n, ParkingKind::k_parking(k)))
                got.insert(p.entries);
            EXPECT_EQ(got, expected) << n << " " << k;
            EXPECT_EQ(Integer(got.size()), ipow(k, n) * ipow(n + 1, n - 1));
        }
}

TEST(Parking, TypeBIsEveryWord) {
    for (unsigned n = 1; n <= 5; ++n)
        EXPECT_EQ(Integer(enumerate_parking(n, ParkingKind::type_B()).size()), ipow(n, n));
}

TEST(Parking, OrbitCounts) {
    std::vector<int> catalan{1, 1, 2, 5, 14, 42, 132, 429};
    for (unsigned n = 1; n <= 7; ++n) {
        auto reps = orbit_representatives(n);
        EXPECT_EQ(static_cast<int>(reps.size()), catalan[n]);
        for (const auto& r : reps)
            EXPECT_TRUE(std::is_sorted(r.entries.begin(), r.entries.end()));
    }
}

TEST(Parking, Frobenius) {
    for (unsigned n = 1; n <= 6; ++n) {
        EXPECT_EQ(frobenius_from_orbits(n, ParkingKind::classical()), pf(n)) << n;
        EXPECT_EQ(frobenius_from_orbits(n, ParkingKind::type_B()), pf_typeB(n)) << n;
    }
    for (unsigned k = 2; k <= 3; ++k)
        for (unsigned n = 1; n <= 4; ++n)
            EXPECT_EQ(frobenius_from_orbits(n, ParkingKind::k_parking(k)), pf_k(n, k)) << n << " " << k;
    // orbits (1,1) and (2,2) give h2; the other five orbits give h1^2
    EXPECT_EQ(to_string(frobenius_from_orbits(2, ParkingKind::k_parking(2))), "2·h2 + 5·h1^2");
}

TEST(Parking, VolumeExamples) {
    EXPECT_EQ(volume_poly(2, VolumeKind::A, VolumeMethod::closed_form), agg({{"2", Rational(1, 2)}, {"1,1", 1}}));
    EXPECT_EQ(volume_poly(3, VolumeKind::A, VolumeMethod::closed_form),
              agg({{"3", Rational(1, 6)}, {"2,1", Rational(3, 2)}, {"1,1,1", 1}}));
    EXPECT_EQ(volume_poly(2, VolumeKind::B, VolumeMethod::closed_form), agg({{"2", 1}, {"1,1", 1}}));
}

TEST(Parking, VolumeMethodsMatchBruteForce) {
    for (unsigned n = 1; n <= 6; ++n)
        for (bool type_b : {false, true}) {
            VolumeKind kind = type_b ? VolumeKind::B : VolumeKind::A;
            TypeAggregate expected = brute_volume(n, type_b);
            EXPECT_EQ(volume_poly(n, kind, VolumeMethod::definition), expected) << n;
            EXPECT_EQ(volume_poly(n, kind, VolumeMethod::closed_form), expected) << n;
        }
}

TEST(Parking, GenericMomentAbelIdentities) {
    for (unsigned n = 1; n <= 5; ++n) {
        UmbraRegistry reg;
        auto alpha = reg.new_umbra(MomentSeq::generic(Family::a, n));
        Rational nf(factorial(n));
        GradedPoly va = volume_umbral(n, VolumeKind::A, *alpha.moments) * nf;
        EXPECT_EQ(va, eval(abel_poly(reg, n, alpha, reg.dot(-1, alpha), VolumeKind::A))) << n;
        GradedPoly vb = volume_umbral(n, VolumeKind::B, *alpha.moments) * nf;
        EXPECT_EQ(vb, eval(pow(UmbralExpr(reg.dot(static_cast<int>(n), alpha)), n))) << n;
        auto neg = reg.dot(-1, alpha);
        EXPECT_EQ(vb, eval(abel_poly(reg, n, neg, neg, VolumeKind::B))) << n;
    }
}

TEST(Parking, ScalarVolumes) {
    for (Rational a : {Rational(1), Rational(-2, 3), Rational(5, 7)})
        for (unsigned n = 1; n <= 6; ++n) {
            Rational abel = a;
            Rational an = a;
            for (unsigned i = 1; i < n; ++i) {
                abel *= a + a * n;
                an *= a;
            }
            EXPECT_EQ(volume_scalar(n, VolumeKind::A, a) * factorial(n), abel);
            Rational nn(ipow(n, n));
            EXPECT_EQ(volume_scalar(n, VolumeKind::B, a) * factorial(n), nn * an);
        }
}

TEST(Parking, RemarkSubstitutionGivesPF) {
    for (unsigned n = 1; n <= 6; ++n)
        EXPECT_EQ(remark_substitution(volume_poly(n, VolumeKind::A, VolumeMethod::closed_form)), pf(n)) << n;
}

TEST(Parking, ThetaBarVolumes) {
    for (unsigned n = 1; n <= 5; ++n) {
        UmbraRegistry reg;
        auto theta = reg.special(SpecialUmbra::theta_bar, n);
        EXPECT_EQ(SymFunc(volume_umbral(n, VolumeKind::A, *theta.moments)), pf(n));
        EXPECT_EQ(SymFunc(volume_umbral(n, VolumeKind::B, *theta.moments) * Rational(factorial(n))),
                  pf_typeB(n) * Rational(factorial(n)));
    }
    UmbraRegistry reg;
    auto theta = reg.special(SpecialUmbra::theta_bar, 3);
    EXPECT_EQ(to_string(SymFunc(eval(pow(UmbralExpr(reg.dot(3, theta)), 3)))), "18·h3 + 36·h2*h1 + 6·h1^3");
    auto neg = reg.dot(-1, reg.special(SpecialUmbra::theta_bar, 2));
    EXPECT_EQ(to_string(SymFunc(eval(abel_poly(reg, 2, neg, neg, VolumeKind::B)))), "4·h2 + 2·h1^2");
}

TEST(Parking, AggregateSerialization) {
    auto v = volume_poly(3, VolumeKind::A, VolumeMethod::closed_form);
    EXPECT_EQ(to_json(v).dump(), R"({"3":"1/6","2,1":"3/2","1,1,1":"1"})");
    EXPECT_EQ(type_aggregate_from_json(Json::parse(to_json(v).dump())), v);
    EXPECT_THROW(type_aggregate_from_json(Json{{"1,2", "1"}}), parse_error);
    EXPECT_THROW(type_aggregate_from_json(Json{{"2", 1}}), parse_error);
    EXPECT_THROW(aggregate(GradedPoly::generator(Family::h, 1)), family_error);
    EXPECT_EQ(to_string(ParkingFunction{{1, 3, 1}, ParkingKind::classical()}), "1,3,1");
}
