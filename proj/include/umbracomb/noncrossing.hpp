#pragma once

// Noncrossing partitions of [n] (type A), k-divisible ones, and the
// sign-invariant noncrossing partitions of [±n] (type B); the refinement
// lattices, their maximal chains, flag f/h-vectors and the chain symmetric
// function sum_S beta(S) Q_S.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "umbracomb/coeffring.hpp"
#include "umbracomb/symfunc.hpp"

namespace umbracomb {

enum class Ground { positive, signed_ };

/// A set partition of [n] or [±n].  Elements are addressed by their position
/// in the circular order 1, 2, ..., n (then -1, -2, ..., -n for signed
/// grounds); blocks are stored as a restricted growth string over positions,
/// which is canonical.
class SetPartition {
public:
    SetPartition() = default;

    /// Blocks of ground elements; must be disjoint and cover the ground set.
    SetPartition(Ground ground, unsigned n, const std::vector<std::vector<int>>& blocks)
        : ground_(ground), n_(n), block_of_(ground_size(ground, n), kUnassigned) {
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].empty())
                throw std::invalid_argument("empty block");
            for (int e : blocks[b]) {
                unsigned pos = position_of(e);
                if (block_of_[pos] != kUnassigned)
                    throw std::invalid_argument("element " + std::to_string(e) + " appears twice");
                block_of_[pos] = static_cast<unsigned>(b);
            }
        }
        if (std::find(block_of_.begin(), block_of_.end(), kUnassigned) != block_of_.end())
            throw std::invalid_argument("blocks do not cover the ground set");
        normalize();
    }

    /// From arbitrary block labels indexed by position.
    static SetPartition from_labels(Ground ground, unsigned n, std::vector<unsigned> labels) {
        if (labels.size() != ground_size(ground, n))
            throw std::invalid_argument("label vector has the wrong length");
        SetPartition p;
        p.ground_ = ground;
        p.n_ = n;
        p.block_of_ = std::move(labels);
        p.normalize();
        return p;
    }

    static SetPartition finest(Ground ground, unsigned n) {
        std::vector<unsigned> labels(ground_size(ground, n));
        for (unsigned i = 0; i < labels.size(); ++i)
            labels[i] = i;
        return from_labels(ground, n, std::move(labels));
    }

    static SetPartition coarsest(Ground ground, unsigned n) {
        return from_labels(ground, n, std::vector<unsigned>(ground_size(ground, n), 0));
    }

    static unsigned ground_size(Ground ground, unsigned n) { return ground == Ground::signed_ ? 2 * n : n; }

    Ground ground() const { return ground_; }
    unsigned n() const { return n_; }
    unsigned size() const { return static_cast<unsigned>(block_of_.size()); }
    const std::vector<unsigned>& labels() const { return block_of_; }
    unsigned block_count() const {
        return block_of_.empty() ? 0u : *std::max_element(block_of_.begin(), block_of_.end()) + 1;
    }

    unsigned position_of(int element) const {
        unsigned a = static_cast<unsigned>(element < 0 ? -element : element);
        if (element == 0 || a > n_ || (element < 0 && ground_ != Ground::signed_))
            throw std::invalid_argument("element " + std::to_string(element) + " is not in the ground set");
        return element > 0 ? a - 1 : n_ + a - 1;
    }

    int element_at(unsigned pos) const {
        return pos < n_ ? static_cast<int>(pos + 1) : -static_cast<int>(pos - n_ + 1);
    }

    /// Blocks with elements ascending, ordered by their minimum element.
    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out(block_count());
        for (unsigned pos = 0; pos < size(); ++pos)
            out[block_of_[pos]].push_back(element_at(pos));
        for (auto& b : out)
            std::sort(b.begin(), b.end());
        std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.front() < r.front(); });
        return out;
    }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition& lhs, const SetPartition& rhs) {
        return std::tie(lhs.ground_, lhs.n_, lhs.block_of_) <=> std::tie(rhs.ground_, rhs.n_, rhs.block_of_);
    }

private:
    static constexpr unsigned kUnassigned = ~0u;

    void normalize() {
        std::map<unsigned, unsigned> relabel;
        for (unsigned& b : block_of_) {
            auto [it, inserted] = relabel.try_emplace(b, static_cast<unsigned>(relabel.size()));
            b = it->second;
        }
    }

    Ground ground_ = Ground::positive;
    unsigned n_ = 0;
    std::vector<unsigned> block_of_;
};

/// "1,2|3|4,5"; signed elements carry a leading minus.
inline std::string to_string(const SetPartition& p) {
    std::string out;
    for (const auto& block : p.blocks()) {
        if (!out.empty())
            out += '|';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(block[i]);
        }
    }
    return out;
}

inline SetPartition parse_set_partition(std::string_view text, Ground ground, unsigned n) {
    std::vector<std::vector<int>> blocks(1);
    std::string number;
    auto flush = [&] {
        if (number.empty() || number == "-")
            throw parse_error("bad set partition '" + std::string(text) + "'");
        blocks.back().push_back(std::stoi(number));
        number.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else if (c == '|') {
            flush();
            blocks.emplace_back();
        } else if ((c >= '0' && c <= '9') || (c == '-' && number.empty())) {
            number += c;
        } else {
            throw parse_error("bad character in set partition '" + std::string(text) + "'");
        }
    }
    flush();
    try {
        return SetPartition(ground, n, blocks);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

/// No positions a < b < c < d with a, c in one block and b, d in another,
/// in the circular order of the ground set.
inline bool is_noncrossing(const SetPartition& p) {
    const auto& blk = p.labels();
    const unsigned size = p.size();
    for (unsigned a = 0; a < size; ++a)
        for (unsigned b = a + 1; b < size; ++b) {
            if (blk[b] == blk[a])
                continue;
            for (unsigned c = b + 1; c < size; ++c) {
                if (blk[c] != blk[a])
                    continue;
                for (unsigned d = c + 1; d < size; ++d)
                    if (blk[d] == blk[b])
                        return false;
            }
        }
    return true;
}

/// B is a block iff -B is.
inline bool is_sign_invariant(const SetPartition& p) {
    if (p.ground() != Ground::signed_)
        return false;
    const auto& blk = p.labels();
    const unsigned n = p.n();
    auto neg = [n](unsigned pos) { return pos < n ? pos + n : pos - n; };
    for (unsigned i = 0; i < p.size(); ++i)
        for (unsigned j = i + 1; j < p.size(); ++j)
            if ((blk[i] == blk[j]) != (blk[neg(i)] == blk[neg(j)]))
                return false;
    return true;
}

inline bool is_noncrossing_typeB(const SetPartition& p) {
    return is_sign_invariant(p) && is_noncrossing(p);
}

/// Every set partition of the ground set, in restricted-growth order.
inline std::vector<SetPartition> enumerate_set_partitions(Ground ground, unsigned n) {
    const unsigned size = SetPartition::ground_size(ground, n);
    std::vector<SetPartition> out;
    std::vector<unsigned> rgs(size, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned blocks) {
        if (pos == size) {
            out.push_back(SetPartition::from_labels(ground, n, rgs));
            return;
        }
        for (unsigned b = 0; b <= blocks; ++b) {
            rgs[pos] = b;
            rec(pos + 1, std::max(blocks, b + 1));
        }
    };
    if (size == 0)
        out.push_back(SetPartition::from_labels(ground, n, {}));
    else
        rec(0, 0);
    return out;
}

struct NCKind {
    enum class Type { A, k_divisible, B };
    Type type = Type::A;
    unsigned k = 1;

    static NCKind A() { return {Type::A, 1}; }
    static NCKind k_divisible(unsigned k) { return {Type::k_divisible, k}; }
    static NCKind B() { return {Type::B, 1}; }
};

/// NC_n, NC_n^{(k)} (inside NC_{kn}) or NC_n^B.
inline std::vector<SetPartition> enumerate_nc(unsigned n, const NCKind& kind) {
    std::vector<SetPartition> out;
    switch (kind.type) {
        case NCKind::Type::A:
            for (auto& p : enumerate_set_partitions(Ground::positive, n))
                if (is_noncrossing(p))
                    out.push_back(std::move(p));
            break;
        case NCKind::Type::k_divisible:
            if (kind.k == 0)
                throw std::invalid_argument("k-divisible partitions need k >= 1");
            for (auto& p : enumerate_set_partitions(Ground::positive, kind.k * n)) {
                if (!is_noncrossing(p))
                    continue;
                auto blocks = p.blocks();
                if (std::all_of(blocks.begin(), blocks.end(), [&](const auto& b) { return b.size() % kind.k == 0; }))
                    out.push_back(std::move(p));
            }
            break;
        case NCKind::Type::B:
            for (auto& p : enumerate_set_partitions(Ground::signed_, n))
                if (is_noncrossing_typeB(p))
                    out.push_back(std::move(p));
            break;
    }
    return out;
}

/// Every block of lhs lies inside a block of rhs.
inline bool refinement_leq(const SetPartition& lhs, const SetPartition& rhs) {
    if (lhs.ground() != rhs.ground() || lhs.n() != rhs.n())
        throw ground_error("set partitions over different ground sets");
    std::vector<unsigned> image(lhs.block_count(), ~0u);
    for (unsigned pos = 0; pos < lhs.size(); ++pos) {
        unsigned& target = image[lhs.labels()[pos]];
        if (target == ~0u)
            target = rhs.labels()[pos];
        else if (target != rhs.labels()[pos])
            return false;
    }
    return true;
}

/// Graded rank: n - #blocks on [n]; on [±n], n minus the number of pairs
/// {B, -B} of blocks with B != -B.
inline unsigned rank(const SetPartition& p) {
    if (p.ground() == Ground::positive)
        return p.n() - p.block_count();
    unsigned nonzero = 0;
    for (const auto& block : p.blocks()) {
        bool zero_block = std::find(block.begin(), block.end(), -block.front()) != block.end();
        if (!zero_block)
            ++nonzero;
    }
    return p.n() - nonzero / 2;
}

/// A chain bottom = pi_0 < pi_1 < ... < pi_s = top.
struct NCChain {
    std::vector<SetPartition> elements;

    std::vector<unsigned> rank_set() const {
        std::vector<unsigned> out;
        for (std::size_t i = 1; i + 1 < elements.size(); ++i)
            out.push_back(rank(elements[i]));
        return out;
    }
};

/// The lattice NC_n (kind A) or NC_n^B (kind B) under refinement.
class NCLattice {
public:
    NCLattice(unsigned n, NCKind kind) : n_(n) {
        if (kind.type == NCKind::Type::k_divisible)
            throw std::invalid_argument("k-divisible partitions do not form a bounded graded lattice");
        if (n == 0)
            throw std::invalid_argument("lattice needs n >= 1");
        elements_ = enumerate_nc(n, kind);
        std::stable_sort(elements_.begin(), elements_.end(),
                         [](const auto& l, const auto& r) { return rank(l) < rank(r); });
        const std::size_t size = elements_.size();
        ranks_.resize(size);
        for (std::size_t i = 0; i < size; ++i)
            ranks_[i] = rank(elements_[i]);
        leq_.assign(size * size, 0);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j)
                leq_[i * size + j] = ranks_[i] <= ranks_[j] && refinement_leq(elements_[i], elements_[j]);
        upper_covers_.resize(size);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j)
                if (ranks_[j] == ranks_[i] + 1 && leq(i, j))
                    upper_covers_[i].push_back(j);
    }

    std::size_t size() const { return elements_.size(); }
    const std::vector<SetPartition>& elements() const { return elements_; }
    unsigned rank_of(std::size_t i) const { return ranks_[i]; }
    bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j] != 0; }
    const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_covers_[i]; }
    std::size_t bottom() const { return 0; }
    std::size_t top() const { return size() - 1; }
    unsigned total_rank() const { return ranks_.back(); }

    std::vector<std::size_t> at_rank(unsigned r) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (ranks_[i] == r)
                out.push_back(i);
        return out;
    }

    /// Number of maximal chains, by summing over covers rank by rank.
    Integer count_maximal_chains() const {
        std::vector<Integer> ways(size(), 0);
        ways[bottom()] = 1;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j : upper_covers_[i])
                ways[j] += ways[i];
        return ways[top()];
    }

    void for_each_maximal_chain(const std::function<void(const NCChain&)>& visit) const {
        std::vector<std::size_t> path{bottom()};
        std::function<void()> rec = [&] {
            std::size_t last = path.back();
            if (last == top()) {
                NCChain chain;
                for (std::size_t i : path)
                    chain.elements.push_back(elements_[i]);
                visit(chain);
                return;
            }
            for (std::size_t j : upper_covers_[last]) {
                path.push_back(j);
                rec();
                path.pop_back();
            }
        };
        rec();
    }

    /// Chains bottom < pi_1 < ... < top whose intermediate ranks are exactly
    /// the bits of `rank_mask` (bit i-1 for rank i).
    Integer count_chains_with_ranks(std::uint32_t rank_mask) const {
        std::vector<Integer> ways(size(), 0);
        ways[bottom()] = 1;
        std::vector<std::size_t> frontier{bottom()};
        for (unsigned r = 1; r < total_rank(); ++r) {
            if (!(rank_mask & (1u << (r - 1))))
                continue;
            std::vector<std::size_t> next = at_rank(r);
            for (std::size_t j : next)
                for (std::size_t i : frontier)
                    if (leq(i, j))
                        ways[j] += ways[i];
            frontier = std::move(next);
        }
        Integer total = 0;
        for (std::size_t i : frontier)
            if (i != top())
                total += ways[i];
        return total;
    }

private:
    unsigned n_;
    std::vector<SetPartition> elements_;
    std::vector<unsigned> ranks_;
    std::vector<std::uint8_t> leq_;
    std::vector<std::vector<std::size_t>> upper_covers_;
};

enum class LatticeType { A, B };

inline Integer maximal_chains(unsigned n, LatticeType type) {
    return NCLattice(n, type == LatticeType::A ? NCKind::A() : NCKind::B()).count_maximal_chains();
}

/// Subsets of [n-1] as bitmasks: bit i-1 set iff i is in the set.
using RankMask = std::uint32_t;

inline std::vector<unsigned> mask_elements(RankMask mask) {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < 32; ++i)
        if (mask & (1u << i))
            out.push_back(i + 1);
    return out;
}

inline std::string mask_to_string(RankMask mask) {
    std::string out;
    for (unsigned i : mask_elements(mask)) {
        if (!out.empty())
            out += ',';
        out += std::to_string(i);
    }
    return out;
}

/// Flag f-vector alpha and flag h-vector beta of NC_{n+1}, indexed by S ⊆ [n-1].
struct FlagVectors {
    unsigned n = 0;
    std::map<RankMask, Integer> alpha;
    std::map<RankMask, Integer> beta;
};

inline FlagVectors flag_vectors(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("flag vectors need n >= 1");
    NCLattice lattice(n + 1, NCKind::A());
    FlagVectors out;
    out.n = n;
    const RankMask full = (RankMask{1} << (n - 1)) - 1;
    for (RankMask s = 0; s <= full; ++s)
        out.alpha[s] = lattice.count_chains_with_ranks(s);
    for (RankMask s = 0; s <= full; ++s) {
        Integer acc = 0;
        // beta(S) = sum_{T ⊆ S} (-1)^{|S - T|} alpha(T)
        for (RankMask t = s;; t = (t - 1) & s) {
            int sign = (std::popcount(s & ~t) % 2 == 0) ? 1 : -1;
            acc += sign * out.alpha[t];
            if (t == 0)
                break;
        }
        out.beta[s] = acc;
    }
    return out;
}

inline Json to_json(const FlagVectors& fv) {
    Json alpha = Json::object();
    Json beta = Json::object();
    for (const auto& [s, v] : fv.alpha)
        alpha[mask_to_string(s)] = v.str();
    for (const auto& [s, v] : fv.beta)
        beta[mask_to_string(s)] = v.str();
    return Json{{"n", fv.n}, {"alpha", alpha}, {"beta", beta}};
}

/// Gessel's fundamental quasisymmetric function Q_S in m variables: words
/// i_1 <= ... <= i_n from [m], with i_j < i_{j+1} whenever j is in S.
inline GradedPoly gessel_Q(RankMask s, unsigned n, unsigned m) {
    GradedPoly out(Family::x);
    std::vector<unsigned> word;
    std::function<void()> rec = [&] {
        if (word.size() == n) {
            out.add_term(Monomial(word), Rational(1));
            return;
        }
        unsigned j = static_cast<unsigned>(word.size());  // next position is j+1
        unsigned low = 1;
        if (j > 0)
            low = (s & (1u << (j - 1))) ? word.back() + 1 : word.back();
        for (unsigned v = low; v <= m; ++v) {
            word.push_back(v);
            rec();
            word.pop_back();
        }
    };
    rec();
    return out;
}

/// F_{NC_{n+1}} = sum_S beta(S) Q_S, identified in the h-basis.
inline SymFunc chain_symfunc(unsigned n) {
    auto fv = flag_vectors(n);
    GradedPoly total(Family::x);
    for (const auto& [s, b] : fv.beta)
        total += gessel_Q(s, n, n) * Rational(b);
    try {
        return identify_symmetric(total, n, n);
    } catch (const symmetry_error& e) {
        throw internal_error(std::string("chain symmetric function is not symmetric: ") + e.what());
    }
}

}  // namespace umbracomb
