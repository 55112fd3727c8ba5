#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "umbracomb/coeffring.hpp"
#include "umbracomb/partitions.hpp"
#include "umbracomb/symfunc.hpp"
#include "umbracomb/umbral.hpp"

namespace umbracomb {

struct ParkingKind {
    enum class Type { classical, k_parking, type_B };
    Type type = Type::classical;
    unsigned k = 1;

    static ParkingKind classical() { return {Type::classical, 1}; }
    static ParkingKind k_parking(unsigned k) { return {Type::k_parking, k}; }
    static ParkingKind type_B() { return {Type::type_B, 1}; }

    friend bool operator==(const ParkingKind&, const ParkingKind&) = default;
};

struct ParkingFunction {
    std::vector<unsigned> entries;
    ParkingKind kind;

    friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;
};

namespace detail {

/// Largest value allowed at sorted position j (1-based).
inline unsigned parking_bound(const ParkingKind& kind, unsigned n, unsigned j) {
    switch (kind.type) {
        case ParkingKind::Type::classical: return j;
        case ParkingKind::Type::k_parking: return kind.k * j;
        case ParkingKind::Type::type_B: return n;
    }
    return 0;
}

inline void nondecreasing_rec(unsigned n, const ParkingKind& kind, std::vector<unsigned>& prefix,
                              std::vector<std::vector<unsigned>>& out) {
    if (prefix.size() == n) {
        out.push_back(prefix);
        return;
    }
    unsigned low = prefix.empty() ? 1u : prefix.back();
    unsigned high = parking_bound(kind, n, static_cast<unsigned>(prefix.size()) + 1);
    for (unsigned v = low; v <= high; ++v) {
        prefix.push_back(v);
        nondecreasing_rec(n, kind, prefix, out);
        prefix.pop_back();
    }
}

/// Sorted multiplicities of the values in a sequence.
inline Partition content_type(std::span<const unsigned> seq) {
    std::map<unsigned, unsigned> counts;
    for (unsigned v : seq)
        ++counts[v];
    std::vector<unsigned> parts;
    for (const auto& [v, c] : counts)
        parts.push_back(c);
    return Partition(std::move(parts));
}

}  // namespace detail

/// True iff the nondecreasing rearrangement satisfies the kind's bound:
/// p'_j <= j (classical), p'_j <= kj (k-parking), p_j in [n] (type B).
inline bool is_parking(std::span<const unsigned> seq, const ParkingKind& kind) {
    if (seq.empty())
        throw arity_error("parking functions have positive length");
    std::vector<unsigned> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() == 0)
        return false;
    const auto n = static_cast<unsigned>(sorted.size());
    for (unsigned j = 1; j <= n; ++j)
        if (sorted[j - 1] > detail::parking_bound(kind, n, j))
            return false;
    return true;
}

/// The nondecreasing functions of the kind: one per orbit of the symmetric
/// group permuting entries.
inline std::vector<ParkingFunction> orbit_representatives(unsigned n, const ParkingKind& kind = ParkingKind::classical()) {
    if (n == 0)
        throw std::invalid_argument("parking functions need n >= 1");
    std::vector<std::vector<unsigned>> seqs;
    std::vector<unsigned> prefix;
    detail::nondecreasing_rec(n, kind, prefix, seqs);
    std::vector<ParkingFunction> out;
    out.reserve(seqs.size());
    for (auto& s : seqs)
        out.push_back({std::move(s), kind});
    return out;
}

/// Every function of the kind, each once: all rearrangements of each orbit
/// representative.
inline std::vector<ParkingFunction> enumerate_parking(unsigned n, const ParkingKind& kind) {
    std::vector<ParkingFunction> out;
    for (auto& rep : orbit_representatives(n, kind)) {
        std::vector<unsigned> p = rep.entries;
        do {
            out.push_back({p, kind});
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

/// Frobenius characteristic of the permutation action on the functions of a
/// kind: the orbit of a sequence with content type mu contributes h_mu.
inline SymFunc frobenius_from_orbits(unsigned n, const ParkingKind& kind) {
    SymFunc out;
    for (const auto& rep : orbit_representatives(n, kind))
        out += h_mu(detail::content_type(rep.entries));
    return out;
}

/// Partition-indexed coefficients c_mu: the total coefficient of all
/// monomials whose sorted exponent vector is mu.
class TypeAggregate {
public:
    using Map = std::map<Partition, Rational, std::greater<>>;

    void add(const Partition& mu, const Rational& c) {
        if (c == 0)
            return;
        auto [it, inserted] = entries_.try_emplace(mu, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                entries_.erase(it);
        }
    }

    Rational coefficient(const Partition& mu) const {
        auto it = entries_.find(mu);
        return it == entries_.end() ? Rational(0) : it->second;
    }

    Rational total() const {
        Rational out = 0;
        for (const auto& [mu, c] : entries_)
            out += c;
        return out;
    }

    const Map& entries() const { return entries_; }

    friend bool operator==(const TypeAggregate&, const TypeAggregate&) = default;

private:
    Map entries_;
};

/// {"2,1": "3/2", ...} in lexicographically decreasing partition order.
inline Json to_json(const TypeAggregate& agg) {
    Json out = Json::object();
    for (const auto& [mu, c] : agg.entries())
        out[to_string(mu)] = to_string(c);
    return out;
}

inline std::string to_string(const TypeAggregate& agg) {
    if (agg.entries().empty())
        return "0";
    std::string out;
    for (const auto& [mu, c] : agg.entries()) {
        if (!out.empty())
            out += " + ";
        out += to_string(c) + "·x^(" + to_string(mu) + ")";
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const TypeAggregate& agg) { return os << to_string(agg); }

inline TypeAggregate type_aggregate_from_json(const Json& j) {
    if (!j.is_object())
        throw parse_error("type aggregate JSON must be an object");
    TypeAggregate out;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string())
            throw parse_error("coefficient of '" + key + "' must be a string");
        out.add(parse_partition(key), parse_rational(value.get<std::string>()));
    }
    return out;
}

/// Collapses a polynomial in x to the exponent-multiset level.
inline TypeAggregate aggregate(const GradedPoly& p) {
    if (p.family() != Family::x && !p.is_constant())
        throw family_error("aggregate expects a polynomial in x");
    TypeAggregate out;
    for (const auto& [mono, c] : p.terms())
        out.add(detail::content_type(mono.indices()), c);
    return out;
}

enum class VolumeKind { A, B };
enum class VolumeMethod { definition, closed_form };

inline ParkingKind parking_kind_of(VolumeKind kind) {
    return kind == VolumeKind::A ? ParkingKind::classical() : ParkingKind::type_B();
}

/// (1/n!) sum_p x_{p_1} ... x_{p_n} as a polynomial in x.
inline GradedPoly volume_raw(unsigned n, VolumeKind kind) {
    GradedPoly out(Family::x);
    for (const auto& p : enumerate_parking(n, parking_kind_of(kind)))
        out.add_term(Monomial(p.entries), Rational(1));
    return out * Rational(Integer(1), factorial(n));
}

/// c_mu = (n)_{l(mu)-1} / (m(mu)! mu!) for A, (n)_{l(mu)} / (m(mu)! mu!) for B.
inline TypeAggregate volume_closed_form(unsigned n, VolumeKind kind) {
    TypeAggregate out;
    for (const auto& mu : enumerate_partitions(n)) {
        unsigned len = kind == VolumeKind::A ? mu.length() - 1 : mu.length();
        out.add(mu, Rational(falling_factorial(n, len), mu.multiplicity_factorial() * mu.parts_factorial()));
    }
    return out;
}

inline TypeAggregate volume_poly(unsigned n, VolumeKind kind, VolumeMethod method) {
    if (n == 0)
        throw std::invalid_argument("volume polynomial needs n >= 1");
    return method == VolumeMethod::definition ? aggregate(volume_raw(n, kind)) : volume_closed_form(n, kind);
}

/// sum_mu c_mu a_mu: the value of the polynomial at uncorrelated umbrae
/// similar to an umbra with the given moments.
inline GradedPoly evaluate_aggregate(const TypeAggregate& agg, const MomentSeq& moments) {
    GradedPoly out;
    for (const auto& [mu, c] : agg.entries())
        out += moments.moment_product(mu) * c;
    return out;
}

/// E[V_n(alpha_1, ..., alpha_n)] (or V_n^B) for alpha_i similar to `moments`.
inline GradedPoly volume_umbral(unsigned n, VolumeKind kind, const MomentSeq& moments) {
    if (moments.order() < n)
        throw truncation_error("volume polynomial of degree " + std::to_string(n) + " needs " + std::to_string(n) +
                               " moments, umbra has " + std::to_string(moments.order()));
    return evaluate_aggregate(volume_closed_form(n, kind), moments);
}

/// V_n(a, ..., a).
inline Rational volume_scalar(unsigned n, VolumeKind kind, const Rational& a) {
    Rational power = 1;
    for (unsigned i = 0; i < n; ++i)
        power *= a;
    return volume_closed_form(n, kind).total() * power;
}

/// x^mu -> x_mu, then x_i -> i! h_i.
inline SymFunc remark_substitution(const TypeAggregate& agg) {
    SymFunc out;
    for (const auto& [mu, c] : agg.entries()) {
        SymFunc term = h_mu(mu) * Rational(mu.parts_factorial());
        out += term * c;
    }
    return out;
}

/// Kind A: x (x - n.alpha)^{n-1}.  Kind B of degree n: (x - (n+1).alpha)^n.
/// Subtracting an umbra gamma means adding -1.gamma.
inline UmbralExpr abel_poly(UmbraRegistry& registry, unsigned n, const UmbraRef& x, const UmbraRef& alpha,
                            VolumeKind kind) {
    if (n == 0)
        throw std::invalid_argument("Abel polynomials need n >= 1");
    if (kind == VolumeKind::A) {
        UmbraRef shifted = registry.dot(-1, registry.dot(static_cast<int>(n), alpha));
        return UmbralExpr(x) * pow(UmbralExpr(x) + UmbralExpr(shifted), n - 1);
    }
    UmbraRef shifted = registry.dot(-1, registry.dot(static_cast<int>(n) + 1, alpha));
    return pow(UmbralExpr(x) + UmbralExpr(shifted), n);
}

inline std::string to_string(const ParkingFunction& p) {
    std::string out;
    for (unsigned v : p.entries) {
        if (!out.empty())
            out += ',';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace umbracomb
