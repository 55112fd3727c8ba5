#pragma once

// Classical umbral calculus.  An umbra is a label bound to a truncated moment
// sequence (1, a_1, ..., a_N); expressions are polynomials in labelled umbrae
// and the evaluation functional E multiplies moments across distinct labels.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "umbracomb/coeffring.hpp"
#include "umbracomb/partitions.hpp"
#include "umbracomb/series.hpp"
#include "umbracomb/symfunc.hpp"

namespace umbracomb {

/// Moments a_0 = 1, a_1, ..., a_N.
class MomentSeq {
public:
    /// moments[i-1] = a_i.
    explicit MomentSeq(std::vector<GradedPoly> moments) {
        moments_.reserve(moments.size() + 1);
        Family f = moments.empty() ? Family::a : moments.front().family();
        moments_.emplace_back(Rational(1), f);
        for (auto& m : moments)
            moments_.push_back(std::move(m));
    }

    /// a_i = the indeterminate `family`_i, for i = 1..order.
    static MomentSeq generic(Family family, unsigned order) {
        std::vector<GradedPoly> m;
        for (unsigned i = 1; i <= order; ++i)
            m.push_back(GradedPoly::generator(family, i));
        return MomentSeq(std::move(m));
    }

    static MomentSeq from_rationals(const std::vector<Rational>& values) {
        std::vector<GradedPoly> m(values.begin(), values.end());
        return MomentSeq(std::move(m));
    }

    /// a_i = i! [t^i] f; the constant term of f must be 1.
    static MomentSeq from_genfun(const TruncSeries<GradedPoly>& f) {
        if (!(f[0] == GradedPoly(1)))
            throw std::invalid_argument("generating function of an umbra must start with 1");
        std::vector<GradedPoly> m;
        for (unsigned i = 1; i <= f.order(); ++i)
            m.push_back(f[i] * Rational(factorial(i)));
        return MomentSeq(std::move(m));
    }

    unsigned order() const { return static_cast<unsigned>(moments_.size() - 1); }

    const GradedPoly& moment(unsigned i) const {
        if (i > order())
            throw truncation_error("moment " + std::to_string(i) + " requested from an umbra of order " +
                                   std::to_string(order()));
        return moments_[i];
    }

    /// a_mu = a_{mu_1} ... a_{mu_l}.
    GradedPoly moment_product(const Partition& mu) const {
        GradedPoly out(Rational(1), moments_[0].family());
        for (unsigned p : mu.parts())
            out *= moment(p);
        return out;
    }

    /// f(alpha, t) = sum a_i t^i / i!.
    TruncSeries<GradedPoly> genfun() const {
        TruncSeries<GradedPoly> s(order());
        for (unsigned i = 0; i <= order(); ++i)
            s[i] = moments_[i] * Rational(Integer(1), factorial(i));
        return s;
    }

    friend bool operator==(const MomentSeq& lhs, const MomentSeq& rhs) { return lhs.moments_ == rhs.moments_; }

private:
    std::vector<GradedPoly> moments_;
};

/// Moments of n.alpha.  For n >= 0 this is the partition sum
/// sum_{lambda |- k} d_lambda (n)_{l(lambda)} a_lambda; for n < 0 the
/// generating function f(alpha, t)^n.
inline MomentSeq dot_moments(int n, const MomentSeq& alpha) {
    if (n < 0)
        return MomentSeq::from_genfun(pow(alpha.genfun(), n));
    std::vector<GradedPoly> m;
    for (unsigned k = 1; k <= alpha.order(); ++k) {
        GradedPoly acc;
        for (const auto& lambda : enumerate_partitions(k)) {
            Integer scalar = lambda.set_partition_count() * falling_factorial(n, lambda.length());
            if (scalar != 0)
                acc += alpha.moment_product(lambda) * Rational(scalar);
        }
        m.push_back(std::move(acc));
    }
    return MomentSeq(std::move(m));
}

/// Moments (-1)^i a_i of -alpha.
inline MomentSeq negate_moments(const MomentSeq& alpha) {
    std::vector<GradedPoly> m;
    for (unsigned i = 1; i <= alpha.order(); ++i)
        m.push_back(i % 2 == 0 ? alpha.moment(i) : -alpha.moment(i));
    return MomentSeq(std::move(m));
}

/// Moments i a_{i-1} of the alpha-derivative umbra.
inline MomentSeq derivative_moments(const MomentSeq& alpha) {
    std::vector<GradedPoly> m;
    for (unsigned i = 1; i <= alpha.order(); ++i)
        m.push_back(alpha.moment(i - 1) * Rational(i));
    return MomentSeq(std::move(m));
}

/// Moments of alpha^{<-1>}: f(alpha^{<-1>}, t) - 1 = [f(alpha, t) - 1]^{<-1>}.
inline MomentSeq comp_inverse_moments(const MomentSeq& alpha) {
    auto g = alpha.genfun();
    g[0] = GradedPoly(0);
    if (alpha.order() >= 1 && !is_unit(g[1]))
        throw inversion_error("first moment is not invertible");
    auto inv = comp_inverse(g);
    inv[0] = GradedPoly(Rational(1), alpha.moment(0).family());
    return MomentSeq::from_genfun(inv);
}

/// Bell numbers B_1..B_order via the Bell triangle.
inline std::vector<Integer> bell_numbers(unsigned order) {
    std::vector<Integer> out;
    std::vector<Integer> row{1};
    for (unsigned i = 1; i <= order; ++i) {
        out.push_back(row.back());
        std::vector<Integer> next{row.back()};
        for (const auto& x : row)
            next.push_back(next.back() + x);
        row = std::move(next);
    }
    return out;
}

struct UmbraLabel {
    std::uint64_t value = 0;
    friend auto operator<=>(const UmbraLabel&, const UmbraLabel&) = default;
};

/// A labelled umbra.  Distinct labels are uncorrelated even when they share
/// a moment sequence.
struct UmbraRef {
    UmbraLabel label;
    std::shared_ptr<const MomentSeq> moments;

    unsigned order() const { return moments->order(); }
};

/// Polynomial in labelled umbrae with GradedPoly coefficients.
class UmbralExpr {
public:
    /// Sorted (label, exponent) pairs; empty is the unit monomial.
    using Monomial = std::vector<std::pair<UmbraLabel, unsigned>>;

    UmbralExpr() = default;
    UmbralExpr(const GradedPoly& constant) { add_term({}, constant); }
    UmbralExpr(int constant) : UmbralExpr(GradedPoly(constant)) {}

    UmbralExpr(const UmbraRef& u) {
        umbrae_.emplace(u.label, u.moments);
        add_term({{u.label, 1u}}, GradedPoly(1));
    }

    const std::map<Monomial, GradedPoly>& terms() const { return terms_; }
    const std::map<UmbraLabel, std::shared_ptr<const MomentSeq>>& umbrae() const { return umbrae_; }

    UmbralExpr& operator+=(const UmbralExpr& rhs) {
        merge_umbrae(rhs);
        for (const auto& [m, c] : rhs.terms_)
            add_term(m, c);
        return *this;
    }

    UmbralExpr& operator-=(const UmbralExpr& rhs) {
        merge_umbrae(rhs);
        for (const auto& [m, c] : rhs.terms_)
            add_term(m, -c);
        return *this;
    }

    friend UmbralExpr operator+(UmbralExpr lhs, const UmbralExpr& rhs) { return lhs += rhs; }
    friend UmbralExpr operator-(UmbralExpr lhs, const UmbralExpr& rhs) { return lhs -= rhs; }

    friend UmbralExpr operator*(const UmbralExpr& lhs, const UmbralExpr& rhs) {
        UmbralExpr out;
        out.umbrae_ = lhs.umbrae_;
        out.merge_umbrae(rhs);
        for (const auto& [ml, cl] : lhs.terms_)
            for (const auto& [mr, cr] : rhs.terms_)
                out.add_term(multiply(ml, mr), cl * cr);
        return out;
    }

    UmbralExpr& operator*=(const UmbralExpr& rhs) { return *this = *this * rhs; }

private:
    static Monomial multiply(const Monomial& lhs, const Monomial& rhs) {
        std::map<UmbraLabel, unsigned> exps(lhs.begin(), lhs.end());
        for (const auto& [label, e] : rhs)
            exps[label] += e;
        return Monomial(exps.begin(), exps.end());
    }

    void add_term(const Monomial& m, const GradedPoly& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    void merge_umbrae(const UmbralExpr& rhs) {
        for (const auto& [label, moments] : rhs.umbrae_)
            umbrae_.emplace(label, moments);
    }

    std::map<Monomial, GradedPoly> terms_;
    std::map<UmbraLabel, std::shared_ptr<const MomentSeq>> umbrae_;
};

inline UmbralExpr pow(const UmbralExpr& e, unsigned k) {
    UmbralExpr out(1);
    for (unsigned i = 0; i < k; ++i)
        out *= e;
    return out;
}

/// E[expr]: each monomial prod label_j^{k_j} becomes prod a^{(j)}_{k_j}.
inline GradedPoly eval(const UmbralExpr& expr) {
    GradedPoly out;
    for (const auto& [mono, coeff] : expr.terms()) {
        GradedPoly value = coeff;
        for (const auto& [label, exponent] : mono)
            value *= expr.umbrae().at(label)->moment(exponent);
        out += value;
    }
    return out;
}

/// p ≃ q.
inline bool umbral_equiv(const UmbralExpr& p, const UmbralExpr& q) {
    return eval(p) == eval(q);
}

inline TruncSeries<GradedPoly> umbra_to_genfun(const UmbraRef& u) {
    return u.moments->genfun();
}

enum class SpecialUmbra { augmentation, unity, singleton, bell, eps_bar, theta_bar };

/// Hands out fresh labels and memoizes auxiliary umbrae, so every mention of
/// n.alpha for the same alpha and n denotes one umbra.  Safe to share between
/// threads.
class UmbraRegistry {
public:
    UmbraRef new_umbra(MomentSeq moments) {
        if (moments.order() < 1)
            throw std::invalid_argument("an umbra needs at least one moment");
        std::lock_guard lock(mutex_);
        return {UmbraLabel{next_label_++}, std::make_shared<const MomentSeq>(std::move(moments))};
    }

    /// eps_bar: moments i! e_i in h-coordinates, or, when n_vars is given, the
    /// polynomials i! e_i(x_1, ..., x_{n_vars}).  theta_bar: i! h_i.
    UmbraRef special(SpecialUmbra kind, unsigned order, std::optional<unsigned> n_vars = std::nullopt) {
        if (order < 1)
            throw std::invalid_argument("special umbra needs order >= 1");
        return memoized({Op::special, static_cast<std::uint64_t>(kind), static_cast<std::int64_t>(order),
                         n_vars ? static_cast<std::int64_t>(*n_vars) : -1},
                        [&] { return special_moments(kind, order, n_vars); });
    }

    /// n.alpha; n may be zero or negative.
    UmbraRef dot(int n, const UmbraRef& alpha) {
        return memoized({Op::dot, alpha.label.value, n, 0}, [&] { return dot_moments(n, *alpha.moments); });
    }

    /// -alpha.
    UmbraRef negate(const UmbraRef& alpha) {
        return memoized({Op::negate, alpha.label.value, 0, 0}, [&] { return negate_moments(*alpha.moments); });
    }

    /// alpha_D.
    UmbraRef derivative(const UmbraRef& alpha) {
        if (alpha.order() < 2)
            throw std::invalid_argument("derivative umbra needs order >= 2");
        return memoized({Op::derivative, alpha.label.value, 0, 0},
                        [&] { return derivative_moments(*alpha.moments); });
    }

    /// alpha^{<-1>}.
    UmbraRef comp_inverse(const UmbraRef& alpha) {
        return memoized({Op::comp_inverse, alpha.label.value, 0, 0},
                        [&] { return comp_inverse_moments(*alpha.moments); });
    }

private:
    enum class Op { special, dot, negate, derivative, comp_inverse };
    using Key = std::tuple<Op, std::uint64_t, std::int64_t, std::int64_t>;

    template <class Make>
    UmbraRef memoized(const Key& key, Make&& make) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end())
                return it->second;
        }
        // Computed outside the lock; a racing thread may compute the same
        // moments, but only the first insertion wins.
        auto moments = std::make_shared<const MomentSeq>(make());
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        UmbraRef ref{UmbraLabel{next_label_++}, std::move(moments)};
        memo_.emplace(key, ref);
        return ref;
    }

    static MomentSeq special_moments(SpecialUmbra kind, unsigned order, std::optional<unsigned> n_vars) {
        std::vector<GradedPoly> m;
        switch (kind) {
            case SpecialUmbra::augmentation:
                return MomentSeq::from_rationals(std::vector<Rational>(order, Rational(0)));
            case SpecialUmbra::unity:
                return MomentSeq::from_rationals(std::vector<Rational>(order, Rational(1)));
            case SpecialUmbra::singleton: {
                std::vector<Rational> v(order, Rational(0));
                v[0] = 1;
                return MomentSeq::from_rationals(v);
            }
            case SpecialUmbra::bell: {
                std::vector<Rational> v;
                for (const auto& b : bell_numbers(order))
                    v.emplace_back(b);
                return MomentSeq::from_rationals(v);
            }
            case SpecialUmbra::eps_bar:
                if (n_vars) {
                    // Moments past n_vars vanish.
                    for (unsigned i = 1; i <= order; ++i)
                        m.push_back(elementary(i, *n_vars) * Rational(factorial(i)));
                } else {
                    auto e = elementary_table(order);
                    for (unsigned i = 1; i <= order; ++i)
                        m.push_back(e[i].poly() * Rational(factorial(i)));
                }
                return MomentSeq(std::move(m));
            case SpecialUmbra::theta_bar:
                for (unsigned i = 1; i <= order; ++i)
                    m.push_back(GradedPoly::generator(Family::h, i) * Rational(factorial(i)));
                return MomentSeq(std::move(m));
        }
        throw std::invalid_argument("unknown special umbra");
    }

    std::mutex mutex_;
    std::uint64_t next_label_ = 1;
    std::map<Key, UmbraRef> memo_;
};

}  // namespace umbracomb
