#pragma once

// Truncated formal power series c_0 + c_1 t + ... + c_N t^N over a
// commutative coefficient ring (Rational or GradedPoly).  The order N is fixed
// at construction and binary operations insist on equal orders.

#include <string>
#include <vector>

#include "umbracomb/coeffring.hpp"

namespace umbracomb {

template <class Coeff>
class TruncSeries {
public:
    explicit TruncSeries(unsigned order) : coeffs_(order + 1, Coeff(0)) {}

    explicit TruncSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("series needs at least a constant term");
    }

    static TruncSeries constant(unsigned order, const Coeff& c) {
        TruncSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// The series t.
    static TruncSeries identity(unsigned order) {
        TruncSeries s(order);
        if (order >= 1)
            s.coeffs_[1] = Coeff(1);
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<Coeff>& coefficients() const { return coeffs_; }

    // Unchecked access; use coeff() for the checked form.
    const Coeff& operator[](unsigned k) const { return coeffs_[k]; }
    Coeff& operator[](unsigned k) { return coeffs_[k]; }

    const Coeff& coeff(unsigned k) const {
        if (k > order())
            throw range_error("coefficient t^" + std::to_string(k) + " beyond order " + std::to_string(order()));
        return coeffs_[k];
    }

    /// Same low coefficients at a smaller or larger order (new ones zero).
    TruncSeries with_order(unsigned order) const {
        TruncSeries s(order);
        for (unsigned k = 0; k <= std::min(order, this->order()); ++k)
            s.coeffs_[k] = coeffs_[k];
        return s;
    }

    TruncSeries& operator+=(const TruncSeries& rhs) {
        check_order(rhs);
        for (unsigned k = 0; k <= order(); ++k)
            coeffs_[k] += rhs.coeffs_[k];
        return *this;
    }

    TruncSeries& operator-=(const TruncSeries& rhs) {
        check_order(rhs);
        for (unsigned k = 0; k <= order(); ++k)
            coeffs_[k] -= rhs.coeffs_[k];
        return *this;
    }

    friend TruncSeries operator+(TruncSeries lhs, const TruncSeries& rhs) { return lhs += rhs; }
    friend TruncSeries operator-(TruncSeries lhs, const TruncSeries& rhs) { return lhs -= rhs; }

    friend TruncSeries operator-(TruncSeries s) {
        for (auto& c : s.coeffs_)
            c = -c;
        return s;
    }

    friend TruncSeries operator*(const TruncSeries& lhs, const TruncSeries& rhs) {
        lhs.check_order(rhs);
        TruncSeries out(lhs.order());
        for (unsigned i = 0; i <= lhs.order(); ++i) {
            if (lhs.coeffs_[i] == Coeff(0))
                continue;
            for (unsigned j = 0; i + j <= lhs.order(); ++j)
                out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
        return out;
    }

    TruncSeries& operator*=(const TruncSeries& rhs) { return *this = *this * rhs; }

    friend TruncSeries operator*(TruncSeries s, const Coeff& c) {
        for (auto& x : s.coeffs_)
            x = x * c;
        return s;
    }

    friend bool operator==(const TruncSeries& lhs, const TruncSeries& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }

private:
    void check_order(const TruncSeries& rhs) const {
        if (order() != rhs.order())
            throw order_error("series orders differ: " + std::to_string(order()) + " vs " +
                              std::to_string(rhs.order()));
    }

    std::vector<Coeff> coeffs_;
};

/// [t^n] f.
template <class Coeff>
const Coeff& series_coeff(const TruncSeries<Coeff>& f, unsigned n) {
    return f.coeff(n);
}

/// 1/f; the constant term must be a unit.
template <class Coeff>
TruncSeries<Coeff> reciprocal(const TruncSeries<Coeff>& f) {
    if (!is_unit(f[0]))
        throw unit_error("constant term is not invertible");
    Coeff inv = unit_inverse(f[0]);
    TruncSeries<Coeff> out(f.order());
    out[0] = inv;
    for (unsigned k = 1; k <= f.order(); ++k) {
        Coeff acc(0);
        for (unsigned j = 1; j <= k; ++j)
            acc += f[j] * out[k - j];
        out[k] = -(acc * inv);
    }
    return out;
}

/// f^k for any integer k; negative powers go through the reciprocal.
template <class Coeff>
TruncSeries<Coeff> pow(const TruncSeries<Coeff>& f, int k) {
    TruncSeries<Coeff> base = k < 0 ? reciprocal(f) : f;
    unsigned e = k < 0 ? static_cast<unsigned>(-k) : static_cast<unsigned>(k);
    auto result = TruncSeries<Coeff>::constant(f.order(), Coeff(1));
    while (e > 0) {
        if (e & 1u)
            result *= base;
        e >>= 1u;
        if (e > 0)
            base *= base;
    }
    return result;
}

/// t * f at the same order (the top coefficient of f falls off).
template <class Coeff>
TruncSeries<Coeff> shift_up(const TruncSeries<Coeff>& f) {
    TruncSeries<Coeff> out(f.order());
    for (unsigned k = 1; k <= f.order(); ++k)
        out[k] = f[k - 1];
    return out;
}

/// f(g(t)); g must have zero constant term.
template <class Coeff>
TruncSeries<Coeff> compose(const TruncSeries<Coeff>& f, const TruncSeries<Coeff>& g) {
    if (f.order() != g.order())
        throw order_error("series orders differ in composition");
    if (!(g[0] == Coeff(0)))
        throw composition_error("inner series has nonzero constant term");
    // Horner: c_0 + g (c_1 + g (c_2 + ...)).
    auto out = TruncSeries<Coeff>::constant(f.order(), f[f.order()]);
    for (unsigned k = f.order(); k-- > 0;) {
        out = out * g;
        out[0] += f[k];
    }
    return out;
}

/// g^{<-1>}, solved order by order: with b_1 = 1/g_1 and b_k the unique value
/// making [t^k] g(b_1 t + ... + b_k t^k) vanish.
template <class Coeff>
TruncSeries<Coeff> comp_inverse(const TruncSeries<Coeff>& g) {
    if (!(g[0] == Coeff(0)))
        throw inversion_error("series to invert has nonzero constant term");
    if (g.order() == 0)
        return g;
    if (!is_unit(g[1]))
        throw inversion_error("linear coefficient is not invertible");
    Coeff inv = unit_inverse(g[1]);
    TruncSeries<Coeff> out(g.order());
    out[1] = inv;
    for (unsigned k = 2; k <= g.order(); ++k) {
        // b_k contributes g_1 b_k to [t^k] and nothing below, so solve with b_k = 0.
        auto partial = compose(g.with_order(k), out.with_order(k));
        out[k] = -(partial[k] * inv);
    }
    return out;
}

}  // namespace umbracomb
