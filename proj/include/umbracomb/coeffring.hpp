#pragma once

// Exact scalars and graded multivariate polynomials over the rationals.
//
// Every other module computes in GradedPoly: moments a_i, symmetric-function
// generators h_i and plain variables x_i are all generators of one of the
// families below.  Generators of the families a, g, h have weight i; x_i has
// weight 1.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "umbracomb/errors.hpp"

namespace umbracomb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Json = nlohmann::ordered_json;

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) {
    return r.str();
}

inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) -> Integer {
        if (s.empty())
            throw parse_error("empty integer in rational '" + std::string(text) + "'");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size() ||
            !std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw parse_error("bad integer in rational '" + std::string(text) + "'");
        return Integer(std::string(s));
    };
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw parse_error("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

inline bool is_unit(const Rational& r) {
    return r != 0;
}

inline Rational unit_inverse(const Rational& r) {
    if (r == 0)
        throw unit_error("zero has no inverse");
    return Rational(1) / r;
}

enum class Family : std::uint8_t { a, g, h, x };

inline char family_symbol(Family f) {
    switch (f) {
        case Family::a: return 'a';
        case Family::g: return 'g';
        case Family::h: return 'h';
        case Family::x: return 'x';
    }
    return '?';
}

inline Family family_from_symbol(char c) {
    switch (c) {
        case 'a': return Family::a;
        case 'g': return Family::g;
        case 'h': return Family::h;
        case 'x': return Family::x;
        default: throw parse_error(std::string("unknown generator family '") + c + "'");
    }
}

/// Generators g_i are a second set of moment indeterminates inside the `a`
/// ring, stored as index i | kSecondMoment so that a_i g_j is a monomial.
inline constexpr unsigned kSecondMoment = 1u << 24;

inline unsigned generator_weight(unsigned index) { return index & ~kSecondMoment; }

/// A monomial in the generators of one family, stored as the multiset of
/// generator indices in weakly decreasing order: h2*h1^2 is {2,1,1}.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<unsigned> indices) : indices_(std::move(indices)) {
        std::sort(indices_.begin(), indices_.end(), std::greater<>());
        if (!indices_.empty() && indices_.back() == 0)
            throw std::invalid_argument("generator indices start at 1");
        for (unsigned i : indices_)
            index_sum_ += generator_weight(i);
    }

    static Monomial generator(unsigned index, unsigned exponent = 1) {
        return Monomial(std::vector<unsigned>(exponent, index));
    }

    const std::vector<unsigned>& indices() const { return indices_; }
    bool is_one() const { return indices_.empty(); }
    unsigned length() const { return static_cast<unsigned>(indices_.size()); }
    unsigned index_sum() const { return index_sum_; }
    unsigned weight(Family f) const { return f == Family::x ? length() : index_sum_; }

    /// (index, exponent) pairs, decreasing index.
    std::vector<std::pair<unsigned, unsigned>> exponents() const {
        std::vector<std::pair<unsigned, unsigned>> out;
        for (unsigned i : indices_) {
            if (!out.empty() && out.back().first == i)
                ++out.back().second;
            else
                out.emplace_back(i, 1u);
        }
        return out;
    }

    friend Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
        Monomial out;
        out.indices_.resize(lhs.indices_.size() + rhs.indices_.size());
        std::merge(lhs.indices_.begin(), lhs.indices_.end(), rhs.indices_.begin(),
                   rhs.indices_.end(), out.indices_.begin(), std::greater<>());
        out.index_sum_ = lhs.index_sum_ + rhs.index_sum_;
        return out;
    }

    friend bool operator==(const Monomial& lhs, const Monomial& rhs) {
        return lhs.indices_ == rhs.indices_;
    }

    std::string to_string(Family f) const {
        if (indices_.empty())
            return "1";
        auto exps = exponents();
        if (f == Family::x)
            std::reverse(exps.begin(), exps.end());
        std::stable_partition(exps.begin(), exps.end(), [](const auto& e) { return !(e.first & kSecondMoment); });
        std::string out;
        for (const auto& [index, exponent] : exps) {
            if (!out.empty())
                out += '*';
            out += (index & kSecondMoment) ? 'g' : family_symbol(f);
            out += std::to_string(generator_weight(index));
            if (exponent > 1)
                out += '^' + std::to_string(exponent);
        }
        return out;
    }

private:
    std::vector<unsigned> indices_;
    unsigned index_sum_ = 0;
};

/// Graded lexicographic order: weighted degree first, then the index multiset.
struct GradedOrder {
    Family family = Family::a;

    bool operator()(const Monomial& lhs, const Monomial& rhs) const {
        unsigned wl = lhs.weight(family);
        unsigned wr = rhs.weight(family);
        if (wl != wr)
            return wl < wr;
        return lhs.indices() < rhs.indices();
    }
};

/// Polynomial with exact rational coefficients in the generators of one
/// family.  Zero coefficients are never stored.  A polynomial whose terms are
/// all constant is compatible with every family.
class GradedPoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedOrder>;

    GradedPoly() : GradedPoly(Family::a) {}
    explicit GradedPoly(Family family) : family_(family), terms_(GradedOrder{family}) {}

    GradedPoly(const Rational& constant, Family family = Family::a) : GradedPoly(family) {
        add_term(Monomial{}, constant);
    }
    GradedPoly(int constant) : GradedPoly(Rational(constant)) {}

    /// g_i lands in family a; see kSecondMoment.
    static GradedPoly generator(Family family, unsigned index) {
        if (index == 0 || index >= kSecondMoment)
            throw std::invalid_argument("generator index out of range");
        if (family == Family::g) {
            family = Family::a;
            index |= kSecondMoment;
        }
        GradedPoly p(family);
        p.add_term(Monomial::generator(index), Rational(1));
        return p;
    }

    static GradedPoly term(Family family, const Monomial& m, const Rational& c) {
        GradedPoly p(family);
        p.add_term(m, c);
        return p;
    }

    Family family() const { return family_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rational constant_term() const { return coefficient(Monomial{}); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Highest weighted degree of a term; 0 for the zero polynomial.
    unsigned degree() const {
        return terms_.empty() ? 0u : terms_.rbegin()->first.weight(family_);
    }

    bool is_homogeneous() const {
        if (terms_.empty())
            return true;
        return terms_.begin()->first.weight(family_) == terms_.rbegin()->first.weight(family_);
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    GradedPoly& operator+=(const GradedPoly& rhs) {
        adopt_family(rhs);
        for (const auto& [m, c] : rhs.terms_)
            add_term(m, c);
        return *this;
    }

    GradedPoly& operator-=(const GradedPoly& rhs) {
        adopt_family(rhs);
        for (const auto& [m, c] : rhs.terms_)
            add_term(m, -c);
        return *this;
    }

    GradedPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    friend GradedPoly operator+(GradedPoly lhs, const GradedPoly& rhs) { return lhs += rhs; }
    friend GradedPoly operator-(GradedPoly lhs, const GradedPoly& rhs) { return lhs -= rhs; }

    friend GradedPoly operator-(GradedPoly p) {
        for (auto& [m, c] : p.terms_)
            c = -c;
        return p;
    }

    friend GradedPoly operator*(const GradedPoly& lhs, const GradedPoly& rhs) {
        GradedPoly out(resolve_family(lhs, rhs));
        for (const auto& [ml, cl] : lhs.terms_)
            for (const auto& [mr, cr] : rhs.terms_)
                out.add_term(ml * mr, cl * cr);
        return out;
    }

    GradedPoly& operator*=(const GradedPoly& rhs) { return *this = *this * rhs; }

    friend GradedPoly operator*(GradedPoly p, const Rational& s) { return p *= s; }
    friend GradedPoly operator*(const Rational& s, GradedPoly p) { return p *= s; }
    friend GradedPoly operator*(GradedPoly p, int s) { return p *= Rational(s); }
    friend GradedPoly operator*(int s, GradedPoly p) { return p *= Rational(s); }

    friend bool operator==(const GradedPoly& lhs, const GradedPoly& rhs) {
        if (lhs.family_ != rhs.family_ && !lhs.is_constant() && !rhs.is_constant())
            return false;
        if (lhs.terms_.size() != rhs.terms_.size())
            return false;
        return std::equal(lhs.terms_.begin(), lhs.terms_.end(), rhs.terms_.begin(),
                          [](const auto& l, const auto& r) {
                              return l.first == r.first && l.second == r.second;
                          });
    }

    /// Same terms, relabelled into another family.
    GradedPoly with_family(Family family) const {
        GradedPoly out(family);
        for (const auto& [m, c] : terms_)
            out.add_term(m, c);
        return out;
    }

private:
    static Family resolve_family(const GradedPoly& lhs, const GradedPoly& rhs) {
        if (lhs.family_ == rhs.family_ || rhs.is_constant())
            return lhs.family_;
        if (lhs.is_constant())
            return rhs.family_;
        throw family_error(std::string("generator family mismatch: ") +
                           family_symbol(lhs.family_) + " vs " + family_symbol(rhs.family_));
    }

    void adopt_family(const GradedPoly& rhs) {
        Family f = resolve_family(*this, rhs);
        if (f != family_)
            *this = with_family(f);
    }

    Family family_;
    TermMap terms_;
};

inline GradedPoly pow(const GradedPoly& p, unsigned k) {
    GradedPoly result(Rational(1), p.family());
    GradedPoly base = p;
    while (k > 0) {
        if (k & 1u)
            result *= base;
        k >>= 1u;
        if (k > 0)
            base *= base;
    }
    return result;
}

/// Drops every term of weighted degree greater than d.
inline GradedPoly graded_truncate(const GradedPoly& p, unsigned d) {
    GradedPoly out(p.family());
    for (const auto& [m, c] : p.terms()) {
        if (m.weight(p.family()) > d)
            break;
        out.add_term(m, c);
    }
    return out;
}

inline bool is_unit(const GradedPoly& p) {
    return p.is_constant() && !p.is_zero();
}

inline GradedPoly unit_inverse(const GradedPoly& p) {
    if (!is_unit(p))
        throw unit_error("polynomial is not a nonzero constant");
    return GradedPoly(Rational(1) / p.constant_term(), p.family());
}

/// Ring homomorphism fixing the rationals and sending generator i to image(i).
inline GradedPoly substitute(const GradedPoly& p, Family target,
                             const std::function<GradedPoly(unsigned)>& image) {
    std::map<unsigned, GradedPoly> cache;
    auto image_of = [&](unsigned i) -> const GradedPoly& {
        auto it = cache.find(i);
        if (it == cache.end())
            it = cache.emplace(i, image(i)).first;
        return it->second;
    };
    GradedPoly out(target);
    for (const auto& [m, c] : p.terms()) {
        GradedPoly t(c, target);
        for (const auto& [index, exponent] : m.exponents())
            t *= pow(image_of(index), exponent);
        out += t;
    }
    return out;
}

/// Human-readable form, highest degree first: "h3 + 3·h2*h1 + h1^3".
inline std::string to_string(const GradedPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        bool negative = c < 0;
        Rational magnitude = negative ? Rational(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (m.is_one())
            out += to_string(magnitude);
        else if (magnitude == 1)
            out += m.to_string(p.family());
        else
            out += to_string(magnitude) + "·" + m.to_string(p.family());
    }
    return out;
}

/// {"h2*h1^2": "3/2", ...}, highest degree first.
inline Json to_json(const GradedPoly& p) {
    Json out = Json::object();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out[it->first.to_string(p.family())] = to_string(it->second);
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const GradedPoly& p) { return os << to_string(p); }

/// Parses "h2*h1^2" into its family and monomial; "1" is the unit monomial.
inline std::pair<std::optional<Family>, Monomial> parse_monomial(std::string_view text) {
    if (text == "1")
        return {std::nullopt, Monomial{}};
    std::optional<Family> family;
    std::vector<unsigned> indices;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('*', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view factor = text.substr(pos, end - pos);
        if (factor.size() < 2)
            throw parse_error("bad monomial factor '" + std::string(factor) + "'");
        Family f = family_from_symbol(factor[0]);
        unsigned flag = 0;
        if (f == Family::g) {
            f = Family::a;
            flag = kSecondMoment;
        }
        if (family && *family != f)
            throw parse_error("mixed families in monomial '" + std::string(text) + "'");
        family = f;
        std::size_t caret = factor.find('^');
        auto to_uint = [&](std::string_view s) {
            if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw parse_error("bad number in monomial '" + std::string(text) + "'");
            return static_cast<unsigned>(std::stoul(std::string(s)));
        };
        unsigned index = to_uint(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
        unsigned exponent = caret == std::string_view::npos ? 1u : to_uint(factor.substr(caret + 1));
        if (index == 0 || index >= kSecondMoment)
            throw parse_error("generator index out of range in '" + std::string(text) + "'");
        indices.insert(indices.end(), exponent, index | flag);
        pos = end + 1;
    }
    return {family, Monomial(std::move(indices))};
}

/// Inverse of to_json.  `fallback` is the family used when every key is "1".
inline GradedPoly graded_poly_from_json(const Json& j, Family fallback = Family::a) {
    if (!j.is_object())
        throw parse_error("polynomial JSON must be an object");
    std::optional<Family> family;
    std::vector<std::pair<Monomial, Rational>> terms;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string())
            throw parse_error("coefficient of '" + key + "' must be a string");
        auto [f, m] = parse_monomial(key);
        if (f) {
            if (family && *family != *f)
                throw parse_error("mixed families in polynomial JSON");
            family = f;
        }
        terms.emplace_back(std::move(m), parse_rational(value.get<std::string>()));
    }
    GradedPoly out(family.value_or(fallback));
    for (const auto& [m, c] : terms)
        out.add_term(m, c);
    return out;
}

}  // namespace umbracomb
