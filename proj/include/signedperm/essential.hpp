#pragma once

#include <string>
#include <vector>

#include "signedperm/bruhat.hpp"
#include "signedperm/diagram.hpp"
#include "signedperm/permutation.hpp"
#include "signedperm/triple.hpp"

namespace signedperm {

/// Triples sorted by (p, q).
using EssentialSet = std::vector<BasicTriple>;

/// (k, p, q) -> (k + p + q - 1, 1 - p, 1 - q), an involution on centered
/// type A triples.
BasicTriple reflect(const BasicTriple& t);

/// Basic permutation v(k, p, q). Centered triples give a permutation of
/// [-N, N] with N the smallest interval holding the placed block, or
/// `bound` when larger. Small triples give a permutation of [1, max(q + k, bound)].
WindowPermutation basic_perm_A(const BasicTriple& t, int bound = 0);

/// Basic signed permutation w(k, p, q): the Bruhat-minimal element with
/// rank_B(w, p, q) >= k.
SignedPermutation basic_signed(const BasicTriple& t);

int basic_length(const BasicTriple& t);
/// Triple of the inverse basic element, for every flavor.
///  B: (k, q, p) if q > 0, else (p + q + k - 1, 1 - q, 1 - p)
///  ACentered: (k + p + q - 1, 1 - q, 1 - p)
///  ASmall: (k + q - p, q, p)
BasicTriple basic_inverse(const BasicTriple& t);
/// Smallest n with w(k, p, q) in W_n: max(p + k - 1, q + k - 1).
int n_min(const BasicTriple& t);

/// All type B basic triples with n_min <= n; k outer, p middle, q inner.
std::vector<BasicTriple> enumerate_basic(int n);
/// (2n^3 + n) / 3.
long count_basic(int n);

/// Essential set of a permutation of a centered interval.
EssentialSet essential_set_A(const WindowPermutation& v);
/// Essential set of a permutation of [1, n] under the small convention:
/// (k, p, q) with (q, p) a SE corner and k = #{i <= p | v(i) > q}.
EssentialSet essential_set_A_small(const WindowPermutation& v);

EssentialSet essential_set_B(const SignedPermutation& w);
/// Same definition read off the type C board, with row -1 playing q - 1 when q = 1.
EssentialSet essential_set_C(const SignedPermutation& w);
EssentialSet essential_set(const SignedPermutation& w, BoardKind kind);

/// Basic elements of W_n with their Bruhat order, for repeated queries.
class BasicCatalog {
public:
    explicit BasicCatalog(int n);

    int n() const noexcept { return n_; }
    const std::vector<BasicTriple>& triples() const noexcept { return triples_; }
    const std::vector<SignedPermutation>& elements() const noexcept { return elements_; }
    const FinitePoset& order() const noexcept { return order_; }

    /// Indices of basic elements below w (w in W_m, m <= n).
    std::vector<std::size_t> below(const SignedPermutation& w) const;

private:
    int n_;
    std::vector<BasicTriple> triples_;
    std::vector<SignedPermutation> elements_;
    std::vector<RankTable> tables_;
    FinitePoset order_;
};

/// Triples t whose basic element is maximal among basic elements below w.
EssentialSet maximal_basic_below(const SignedPermutation& w);
EssentialSet maximal_basic_below(const BasicCatalog& catalog, const SignedPermutation& w);

/// Dissecting element u(k, p, q, n) = w(n + 2 - p - k, p, 1 - q) * w_0, with
/// the third argument replaced by 1 when q = 1.
SignedPermutation dissecting_u(const BasicTriple& t, int n);

/// t(k, p, q, n) = v(n + 1 - q - k, n - p, q) * w_0 in S_n.
WindowPermutation dissecting_t_A(const BasicTriple& t, int n);

/// { u(t, n) * w_0 : t in Ess(w * w_0) }, n = w.size().
std::vector<SignedPermutation> rwy_via_bijection(const SignedPermutation& w);
/// { t(t, n) * w_0 : t in Ess(v * w_0) } for v a permutation of [1, n].
std::vector<WindowPermutation> rwy_via_bijection(const WindowPermutation& v);

/// w(t) <= w(t') decided in type A: v(t) is below v(t'), or below
/// v(k' + q', p', 1 - q') when -k' < q' < 0 < q, or below reflect(v(t')) when
/// q' > 0 > q. Without those side conditions the first two comparisons also
/// accept pairs that are not comparable in W.
bool basic_leq_via_typeA(const BasicTriple& t, const BasicTriple& tp);

enum class LemmaCase { None, CaseI, CaseII, Unexplained };
std::string lemma_case_name(LemmaCase c);

/// For w(t) <= w(t') with v(t) not <= v(t'): which comparison explains it.
/// None when the type B and type A comparisons agree.
LemmaCase classify_exception(const BasicTriple& t, const BasicTriple& tp);

/// Join-irreducible elements of W_n: elements minimal outside some lower interval.
std::vector<SignedPermutation> base_of(int n, int max_n = kDefaultMaxN);
std::vector<SignedPermutation> base_of(const SignedBruhatPoset& poset);

/// {"w": [...], "type": "B"|"C", "essential": [{"k":..,"p":..,"q":..}, ...]}
std::string essential_json(const SignedPermutation& w, BoardKind kind);

} // namespace signedperm
