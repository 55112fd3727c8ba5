#pragma once

// Symmetric functions as polynomials in the algebraically independent
// complete homogeneous generators h_1, h_2, ...  The e- and monomial bases are
// conversions, never storage.

#include <ostream>
#include <string>
#include <vector>

#include "umbracomb/coeffring.hpp"
#include "umbracomb/partitions.hpp"
#include "umbracomb/series.hpp"

namespace umbracomb {

class SymFunc {
public:
    SymFunc() : poly_(Family::h) {}
    SymFunc(int c) : poly_(Rational(c), Family::h) {}
    SymFunc(const Rational& c) : poly_(c, Family::h) {}

    explicit SymFunc(const GradedPoly& p) : poly_(p.with_family(Family::h)) {
        if (p.family() != Family::h && !p.is_constant())
            throw family_error(std::string("symmetric functions live in family h, got ") + family_symbol(p.family()));
    }

    static SymFunc h(unsigned i) { return i == 0 ? SymFunc(1) : SymFunc(GradedPoly::generator(Family::h, i)); }

    const GradedPoly& poly() const { return poly_; }
    unsigned degree() const { return poly_.degree(); }
    bool is_homogeneous() const { return poly_.is_homogeneous(); }

    SymFunc& operator+=(const SymFunc& rhs) { poly_ += rhs.poly_; return *this; }
    SymFunc& operator-=(const SymFunc& rhs) { poly_ -= rhs.poly_; return *this; }
    SymFunc& operator*=(const SymFunc& rhs) { poly_ *= rhs.poly_; return *this; }
    SymFunc& operator*=(const Rational& s) { poly_ *= s; return *this; }

    friend SymFunc operator+(SymFunc lhs, const SymFunc& rhs) { return lhs += rhs; }
    friend SymFunc operator-(SymFunc lhs, const SymFunc& rhs) { return lhs -= rhs; }
    friend SymFunc operator*(SymFunc lhs, const SymFunc& rhs) { return lhs *= rhs; }
    friend SymFunc operator*(SymFunc f, const Rational& s) { return f *= s; }
    friend SymFunc operator*(const Rational& s, SymFunc f) { return f *= s; }
    friend SymFunc operator-(SymFunc f) { f.poly_ = -f.poly_; return f; }
    friend bool operator==(const SymFunc& lhs, const SymFunc& rhs) { return lhs.poly_ == rhs.poly_; }

private:
    GradedPoly poly_;
};

inline std::string to_string(const SymFunc& f) { return to_string(f.poly()); }
inline Json to_json(const SymFunc& f) { return to_json(f.poly()); }
inline std::ostream& operator<<(std::ostream& os, const SymFunc& f) { return os << to_string(f); }

inline SymFunc symfunc_from_json(const Json& j) {
    return SymFunc(graded_poly_from_json(j, Family::h));
}

inline SymFunc h_mu(const Partition& mu) {
    return SymFunc(GradedPoly::term(Family::h, monomial_of(mu), Rational(1)));
}

/// e_0, ..., e_n in h-coordinates, from H(t)E(-t) = 1:
/// e_k = sum_{i=1}^{k} (-1)^{i-1} h_i e_{k-i}.
inline std::vector<SymFunc> elementary_table(unsigned n) {
    std::vector<SymFunc> e{SymFunc(1)};
    for (unsigned k = 1; k <= n; ++k) {
        SymFunc acc;
        for (unsigned i = 1; i <= k; ++i) {
            SymFunc term = SymFunc::h(i) * e[k - i];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        e.push_back(acc);
    }
    return e;
}

inline SymFunc e_in_h(unsigned n) {
    if (n == 0)
        return SymFunc(1);
    return elementary_table(n)[n];
}

inline SymFunc e_mu(const Partition& mu) {
    auto e = elementary_table(mu.empty() ? 0 : mu.parts().front());
    SymFunc out(1);
    for (unsigned p : mu.parts())
        out *= e[p];
    return out;
}

/// The involution h_n -> e_n.
inline SymFunc omega(const SymFunc& f) {
    auto e = elementary_table(f.degree());
    return SymFunc(substitute(f.poly(), Family::h, [&](unsigned i) { return e[i].poly(); }));
}

/// H(t) = 1 + h_1 t + ... + h_N t^N.
inline TruncSeries<GradedPoly> h_series(unsigned order) {
    TruncSeries<GradedPoly> s(order);
    s[0] = GradedPoly(Rational(1), Family::h);
    for (unsigned i = 1; i <= order; ++i)
        s[i] = GradedPoly::generator(Family::h, i);
    return s;
}

namespace detail {

inline void multisets_rec(unsigned size, unsigned smallest, unsigned m, std::vector<unsigned>& prefix,
                          bool strict, GradedPoly& out) {
    if (prefix.size() == size) {
        out.add_term(Monomial(prefix), Rational(1));
        return;
    }
    for (unsigned v = smallest; v <= m; ++v) {
        prefix.push_back(v);
        multisets_rec(size, strict ? v + 1 : v, m, prefix, strict, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// h_i(x_1, ..., x_m).
inline GradedPoly complete_homogeneous(unsigned i, unsigned m) {
    GradedPoly out(Family::x);
    std::vector<unsigned> prefix;
    detail::multisets_rec(i, 1, m, prefix, false, out);
    return out;
}

/// e_i(x_1, ..., x_m).
inline GradedPoly elementary(unsigned i, unsigned m) {
    GradedPoly out(Family::x);
    std::vector<unsigned> prefix;
    detail::multisets_rec(i, 1, m, prefix, true, out);
    return out;
}

/// f(x_1, ..., x_m, 0, 0, ...); m must be at least the degree of f.
inline GradedPoly expand_in_variables(const SymFunc& f, unsigned m) {
    if (m < f.degree())
        throw faithfulness_error("expansion of a degree-" + std::to_string(f.degree()) + " function into " +
                                 std::to_string(m) + " variables loses information");
    return substitute(f.poly(), Family::x, [m](unsigned i) { return complete_homogeneous(i, m); });
}

namespace detail {

/// x_i <-> x_{i+1}.
inline GradedPoly swap_variables(const GradedPoly& p, unsigned i) {
    GradedPoly out(Family::x);
    for (const auto& [mono, c] : p.terms()) {
        std::vector<unsigned> idx = mono.indices();
        for (unsigned& v : idx) {
            if (v == i)
                v = i + 1;
            else if (v == i + 1)
                v = i;
        }
        out.add_term(Monomial(std::move(idx)), c);
    }
    return out;
}

/// x_1^{l_1} x_2^{l_2} ... for a partition l.
inline Monomial dominant_monomial(const Partition& lambda) {
    std::vector<unsigned> idx;
    for (unsigned j = 0; j < lambda.length(); ++j)
        idx.insert(idx.end(), lambda.parts()[j], j + 1);
    return Monomial(std::move(idx));
}

/// Solves A y = b exactly; throws internal_error when A is singular.
inline std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw internal_error("singular system while identifying a symmetric function");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0)
                continue;
            Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k)
                a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::vector<Rational> y(n);
    for (std::size_t i = 0; i < n; ++i)
        y[i] = b[i] / a[i][i];
    return y;
}

}  // namespace detail

/// The unique degree-n symmetric function whose expansion in m >= n
/// variables is p.
inline SymFunc identify_symmetric(const GradedPoly& p, unsigned m, unsigned n) {
    if (m < n)
        throw faithfulness_error("need at least " + std::to_string(n) + " variables, got " + std::to_string(m));
    if (p.is_zero())
        return SymFunc{};
    if (p.family() != Family::x && !p.is_constant())
        throw family_error("identify_symmetric expects a polynomial in x");
    for (const auto& [mono, c] : p.terms()) {
        if (mono.length() != n)
            throw symmetry_error("term " + mono.to_string(Family::x) + " is not of degree " + std::to_string(n));
        if (!mono.is_one() && mono.indices().front() > m)
            throw symmetry_error("term " + mono.to_string(Family::x) + " uses a variable beyond x" + std::to_string(m));
    }
    for (unsigned i = 1; i < m; ++i)
        if (!(detail::swap_variables(p, i) == p))
            throw symmetry_error("polynomial is not invariant under x" + std::to_string(i) + " <-> x" +
                                 std::to_string(i + 1));

    auto parts = enumerate_partitions(n);
    const std::size_t size = parts.size();
    std::vector<std::vector<Rational>> matrix(size, std::vector<Rational>(size));
    std::vector<Rational> rhs(size);
    for (std::size_t col = 0; col < size; ++col) {
        GradedPoly expansion = expand_in_variables(h_mu(parts[col]), m);
        for (std::size_t row = 0; row < size; ++row)
            matrix[row][col] = expansion.coefficient(detail::dominant_monomial(parts[row]));
    }
    for (std::size_t row = 0; row < size; ++row)
        rhs[row] = p.coefficient(detail::dominant_monomial(parts[row]));
    auto coeffs = detail::solve_exact(std::move(matrix), std::move(rhs));
    SymFunc out;
    for (std::size_t i = 0; i < size; ++i)
        out += h_mu(parts[i]) * coeffs[i];
    if (!(expand_in_variables(out, m) == p))
        throw internal_error("identified symmetric function does not reproduce its expansion");
    return out;
}

/// PF_n = sum_{mu |- n} (n)_{l(mu)-1} / m(mu)! h_mu.
inline SymFunc pf(unsigned n) {
    SymFunc out;
    for (const auto& mu : enumerate_partitions(n))
        out += h_mu(mu) * Rational(falling_factorial(n, mu.length() - 1), mu.multiplicity_factorial());
    return out;
}

/// [t^{n+1}] of [t / H(t)^k]^{<-1>}.
inline SymFunc pf_k(unsigned n, unsigned k) {
    if (n == 0 || k == 0)
        throw std::invalid_argument("pf_k needs n, k >= 1");
    auto g = shift_up(pow(h_series(n + 1), -static_cast<int>(k)));
    return SymFunc(series_coeff(comp_inverse(g), n + 1));
}

/// [t^n] H(t)^n.
inline SymFunc pf_typeB(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("pf_typeB needs n >= 1");
    return SymFunc(series_coeff(pow(h_series(n), static_cast<int>(n)), n));
}

enum class HstarMethod { lagrange_formula, series_inversion };

/// h_n^*, the image of h_n under Macdonald's involution, defined by
/// z H^*(z) = [z H(z)]^{<-1>}.
inline SymFunc hstar(unsigned n, HstarMethod method) {
    if (n == 0)
        throw std::invalid_argument("hstar needs n >= 1");
    if (method == HstarMethod::series_inversion) {
        auto g = shift_up(h_series(n + 1));
        return SymFunc(series_coeff(comp_inverse(g), n + 1));
    }
    SymFunc out;
    for (const auto& mu : enumerate_partitions(n))
        out += e_mu(mu) * Rational(falling_factorial(n, mu.length() - 1), mu.multiplicity_factorial());
    return n % 2 == 0 ? out : -out;
}

}  // namespace umbracomb
