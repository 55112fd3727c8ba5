#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "umbracomb/coeffring.hpp"

namespace umbracomb {

inline Integer factorial(unsigned n) {
    Integer out = 1;
    for (unsigned i = 2; i <= n; ++i)
        out *= i;
    return out;
}

/// (n)_k = n(n-1)...(n-k+1); (n)_0 = 1.  n may be negative.
inline Integer falling_factorial(const Integer& n, unsigned k) {
    Integer out = 1;
    for (unsigned i = 0; i < k; ++i)
        out *= n - i;
    return out;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    return falling_factorial(n, k) / factorial(k);
}

/// Integer partition: weakly decreasing positive parts, with the statistics
/// the partition-indexed formulas use precomputed at construction.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        if (!parts_.empty() && parts_.back() == 0)
            throw std::invalid_argument("partition parts must be positive");
        compute_stats();
    }

    const std::vector<unsigned>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    unsigned size() const { return size_; }
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }

    /// m_i for i = 1..size(), at index i-1.
    std::vector<unsigned> multiplicities() const {
        std::vector<unsigned> m(size_, 0);
        for (unsigned p : parts_)
            ++m[p - 1];
        return m;
    }

    unsigned multiplicity(unsigned part) const {
        return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), part));
    }

    /// The parts each taken once, decreasing.
    std::vector<unsigned> distinct_parts() const {
        std::vector<unsigned> out;
        std::unique_copy(parts_.begin(), parts_.end(), std::back_inserter(out));
        return out;
    }

    /// mu! = mu_1! ... mu_l!
    const Integer& parts_factorial() const { return parts_factorial_; }
    /// m(mu)! = m_1! ... m_n!
    const Integer& multiplicity_factorial() const { return multiplicity_factorial_; }
    /// d_mu = |mu|! / (mu! m(mu)!): the number of set partitions of [|mu|] of type mu.
    const Integer& set_partition_count() const { return set_partition_count_; }

    friend bool operator==(const Partition& lhs, const Partition& rhs) { return lhs.parts_ == rhs.parts_; }
    friend auto operator<=>(const Partition& lhs, const Partition& rhs) { return lhs.parts_ <=> rhs.parts_; }

private:
    void compute_stats() {
        size_ = 0;
        parts_factorial_ = 1;
        for (unsigned p : parts_) {
            size_ += p;
            parts_factorial_ *= factorial(p);
        }
        multiplicity_factorial_ = 1;
        for (unsigned m : multiplicities())
            multiplicity_factorial_ *= factorial(m);
        set_partition_count_ = factorial(size_) / (parts_factorial_ * multiplicity_factorial_);
    }

    std::vector<unsigned> parts_;
    unsigned size_ = 0;
    Integer parts_factorial_ = 1;
    Integer multiplicity_factorial_ = 1;
    Integer set_partition_count_ = 1;
};

struct PartitionStats {
    unsigned length;
    Integer parts_factorial;
    Integer multiplicity_factorial;
    Integer d;
};

inline PartitionStats partition_stats(const Partition& mu) {
    return {mu.length(), mu.parts_factorial(), mu.multiplicity_factorial(), mu.set_partition_count()};
}

namespace detail {

inline void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All partitions of n in lexicographically decreasing order; n = 0 yields
/// the empty partition.
inline std::vector<Partition> enumerate_partitions(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> prefix;
    detail::partitions_rec(n, n, prefix, out);
    return out;
}

/// k ∪ lambda.
inline Partition add_part(unsigned k, const Partition& lambda) {
    if (k == 0)
        throw std::invalid_argument("added part must be positive");
    std::vector<unsigned> parts = lambda.parts();
    parts.push_back(k);
    return Partition(std::move(parts));
}

/// "2,1,1"; the empty partition is "".
inline std::string to_string(const Partition& mu) {
    std::string out;
    for (unsigned p : mu.parts()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(p);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& mu) { return os << '(' << to_string(mu) << ')'; }

inline Partition parse_partition(std::string_view text) {
    std::vector<unsigned> parts;
    if (text.empty())
        return Partition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view field = text.substr(pos, end - pos);
        if (field.empty() || !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw parse_error("bad partition '" + std::string(text) + "'");
        unsigned p = static_cast<unsigned>(std::stoul(std::string(field)));
        if (p == 0)
            throw parse_error("zero part in partition '" + std::string(text) + "'");
        parts.push_back(p);
        pos = end + 1;
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
        throw parse_error("partition parts must be weakly decreasing: '" + std::string(text) + "'");
    return Partition(std::move(parts));
}

/// The monomial x_{mu_1} ... x_{mu_l} (or h_mu, a_mu, ...) indexed by the parts.
inline Monomial monomial_of(const Partition& mu) {
    return Monomial(mu.parts());
}

}  // namespace umbracomb
