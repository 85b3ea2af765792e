#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "signedperm/permutation.hpp"
#include "signedperm/triple.hpp"

namespace signedperm {

inline constexpr int kDefaultMaxN = 8;
inline constexpr int kDefaultMaxInterval = 10;

enum class Convention {
    Centered, ///< #{i <= -p | v(i) >= q}, -N <= p, q <= N
    Small,    ///< #{i <= p | v(i) > q},   1 <= p, q <= n
};

/// #{i >= p | w(i) <= -q} for 1 <= p <= n, -n <= q <= n.
int rank_B(const SignedPermutation& w, int p, int q);

/// Rank of an ordinary permutation; Centered expects the interval [-N, N],
/// Small expects [1, n].
int rank_A(const WindowPermutation& v, int p, int q, Convention convention = Convention::Centered);

/// Bruhat order on permutations of an interval: the operands are padded to the
/// union of their intervals and compared through #{i <= a | v(i) >= b}.
bool leq_A(const WindowPermutation& lhs, const WindowPermutation& rhs);

/// Bruhat order on W_n, defined through the embedding iota.
bool leq_B(const SignedPermutation& lhs, const SignedPermutation& rhs);

/// Table of rank_B(w, p, q) for fast repeated comparisons of elements of W_n.
class RankTable {
public:
    RankTable(const SignedPermutation& w, int n);
    int at(int p, int q) const { return cells_[(p - 1) * (2 * n_ + 1) + (q + n_)]; }
    int n() const noexcept { return n_; }
    /// Entrywise dominance; equivalent to leq_B for elements of W_n.
    bool dominated_by(const RankTable& other) const noexcept;

private:
    int n_;
    std::vector<int> cells_;
};

/// Calls fn on every element of W_n: underlying permutations of absolute
/// values in lexicographic order (outer), sign masks 0 .. 2^n - 1 (inner), bit
/// j of the mask negating position j + 1. Refuses n > max_n.
void for_each_W(int n, const std::function<void(const SignedPermutation&)>& fn, int max_n = kDefaultMaxN);
std::vector<SignedPermutation> enumerate_W(int n, int max_n = kDefaultMaxN);

/// All permutations of [lo, hi] in lexicographic order.
std::vector<WindowPermutation> enumerate_S(int lo, int hi, int max_size = kDefaultMaxInterval);

/// Finite poset given by an explicit comparability matrix.
class FinitePoset {
public:
    FinitePoset() = default;
    FinitePoset(std::size_t count, const std::function<bool(std::size_t, std::size_t)>& leq);

    std::size_t size() const noexcept { return count_; }
    bool leq(std::size_t a, std::size_t b) const noexcept { return leq_[a * count_ + b]; }
    bool less(std::size_t a, std::size_t b) const noexcept { return a != b && leq(a, b); }

    std::vector<std::size_t> minimal(const std::vector<std::size_t>& subset) const;
    std::vector<std::size_t> maximal(const std::vector<std::size_t>& subset) const;
    /// Elements above every member of subset.
    std::vector<std::size_t> upper_bounds(const std::vector<std::size_t>& subset) const;

private:
    std::size_t count_ = 0;
    std::vector<bool> leq_;
};

/// W_n with its Bruhat order materialized.
class SignedBruhatPoset {
public:
    explicit SignedBruhatPoset(int n, int max_n = kDefaultMaxN);

    int n() const noexcept { return n_; }
    const std::vector<SignedPermutation>& elements() const noexcept { return elements_; }
    const FinitePoset& order() const noexcept { return order_; }
    /// Index of an element of W_m, m <= n (padded first).
    std::size_t index_of(const SignedPermutation& w) const;

private:
    int n_;
    std::vector<SignedPermutation> elements_;
    std::map<SignedPermutation, std::size_t> index_;
    FinitePoset order_;
};

/// S_n on [1, n] with its Bruhat order materialized.
class SymmetricBruhatPoset {
public:
    explicit SymmetricBruhatPoset(int n, int max_size = kDefaultMaxInterval);

    int n() const noexcept { return n_; }
    const std::vector<WindowPermutation>& elements() const noexcept { return elements_; }
    const FinitePoset& order() const noexcept { return order_; }
    std::size_t index_of(const WindowPermutation& v) const;

private:
    int n_;
    std::vector<WindowPermutation> elements_;
    std::map<WindowPermutation, std::size_t> index_;
    FinitePoset order_;
};

struct SupremumResult {
    SignedPermutation value;
    std::size_t upper_bound_count = 0;
    /// Every minimal common upper bound found; a single entry certifies uniqueness.
    std::vector<SignedPermutation> minimal_upper_bounds;
};

/// Least common upper bound in W_n by brute force. The empty set has supremum
/// the identity. Throws NoSupremum when minimal upper bounds are not unique.
SupremumResult supremum(const std::vector<SignedPermutation>& elems, int n);
SupremumResult supremum(const SignedBruhatPoset& poset, const std::vector<SignedPermutation>& elems);

/// Bruhat-minimal elements of {t in W_n | t not <= w}, n = w.size().
std::vector<SignedPermutation> minimal_not_below(const SignedPermutation& w);
std::vector<SignedPermutation> minimal_not_below(const SignedBruhatPoset& poset, const SignedPermutation& w);
/// Same for S_n, v a permutation of [1, n].
std::vector<WindowPermutation> minimal_not_below(const WindowPermutation& v);
std::vector<WindowPermutation> minimal_not_below(const SymmetricBruhatPoset& poset, const WindowPermutation& v);

/// Unique maximum of {w in W_n | rank_B(w, p, q) < k}, by brute force.
/// Requires a type B basic triple with n >= n_min; throws NoSupremum if the
/// maximal elements are not unique.
SignedPermutation max_with_rank_below(const BasicTriple& t, int n);
SignedPermutation max_with_rank_below(const SignedBruhatPoset& poset, const BasicTriple& t);

/// Unique minimum of {w in W_n | rank_B(w, p, q) >= k}, by brute force.
SignedPermutation min_with_rank_at_least(const SignedBruhatPoset& poset, const BasicTriple& t);

} // namespace signedperm
