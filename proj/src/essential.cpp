#include "signedperm/essential.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "json.hpp"
#include "signedperm/errors.hpp"

namespace signedperm {

namespace {

void append_range(std::vector<int>& out, int from, int to) {
    for (int x = from; x <= to; ++x) out.push_back(x);
}

// Case table for w(k, p, q). Accepts p = 1 with q < 0, which the dissecting
// element formula produces.
SignedPermutation signed_from_table(int k, int p, int q) {
    std::vector<int> w;
    if (q >= p) {
        append_range(w, 1, p - 1);
        for (int x = q + k - 1; x >= q; --x) w.push_back(-x);
        append_range(w, p, q - 1);
    } else if (q > 0) {
        append_range(w, 1, q - 1);
        append_range(w, q + k, p + k - 1);
        for (int x = q + k - 1; x >= q; --x) w.push_back(-x);
    } else if (k > -q) {
        append_range(w, k + 1, p + k - 1);
        append_range(w, -k, q - 1);
        append_range(w, 1, -q);
    } else {
        append_range(w, 1, -q - k);
        append_range(w, -q + 1, p + k - 1);
        append_range(w, -q - k + 1, -q);
    }
    return SignedPermutation(std::move(w));
}

EssentialSet sorted(EssentialSet s) {
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

BasicTriple reflect(const BasicTriple& t) {
    return BasicTriple{t.k + t.p + t.q - 1, 1 - t.p, 1 - t.q, Flavor::ACentered};
}

WindowPermutation basic_perm_A(const BasicTriple& t, int bound) {
    t.require_valid();
    if (t.flavor == Flavor::ASmall) {
        const int n = std::max(t.q + t.k, bound);
        std::vector<int> v;
        append_range(v, 1, t.p - t.k);
        append_range(v, t.q + 1, t.q + t.k);
        append_range(v, t.p - t.k + 1, t.q);
        append_range(v, t.q + t.k + 1, n);
        return WindowPermutation(1, std::move(v));
    }
    // Block of positions -p-k+1 .. -p holds q .. q+k-1; the rest increase.
    const int first = -t.p - t.k + 1;
    const int last = -t.p;
    int N = std::max({std::abs(first), std::abs(last), std::abs(t.q), std::abs(t.q + t.k - 1), bound});
    std::vector<int> values(2 * N + 1, 0);
    std::vector<bool> used(2 * N + 1, false);
    for (int j = 0; j < t.k; ++j) {
        values[first + j + N] = t.q + j;
        used[t.q + j + N] = true;
    }
    int next = -N;
    for (int pos = -N; pos <= N; ++pos) {
        if (pos >= first && pos <= last) continue;
        while (used[next + N]) ++next;
        values[pos + N] = next;
        used[next + N] = true;
    }
    return WindowPermutation(-N, std::move(values));
}

SignedPermutation basic_signed(const BasicTriple& t) {
    if (t.flavor != Flavor::B) throw InvalidTriple("basic_signed needs a type B triple, got " + t.str());
    t.require_valid();
    return signed_from_table(t.k, t.p, t.q);
}

int basic_length(const BasicTriple& t) {
    if (t.flavor != Flavor::B) throw InvalidTriple("basic_length needs a type B triple");
    t.require_valid();
    const int k = t.k, p = t.p, q = t.q;
    auto choose2 = [](int m) { return m * (m - 1) / 2; };
    if (q > 0) return (p + q - 1) * k + choose2(k);
    if (k > -q) return p * k + choose2(k) - choose2(-q + 1);
    return (p + q + k - 1) * k;
}

BasicTriple basic_inverse(const BasicTriple& t) {
    t.require_valid();
    if (t.flavor == Flavor::ASmall) return triple_small(t.k + t.q - t.p, t.q, t.p);
    if (t.flavor == Flavor::ACentered) return triple_a(t.k + t.p + t.q - 1, 1 - t.q, 1 - t.p);
    if (t.q > 0) return triple_b(t.k, t.q, t.p);
    return triple_b(t.p + t.q + t.k - 1, 1 - t.q, 1 - t.p);
}

int n_min(const BasicTriple& t) {
    t.require_valid();
    return std::max(t.p + t.k - 1, t.q + t.k - 1);
}

std::vector<BasicTriple> enumerate_basic(int n) {
    if (n < 1) throw RangeError("n must be positive");
    std::vector<BasicTriple> out;
    for (int k = 1; k <= n; ++k)
        for (int p = 1; p + k - 1 <= n; ++p)
            for (int q = -n; q + k - 1 <= n; ++q) {
                BasicTriple t = triple_b(k, p, q);
                if (t.valid()) out.push_back(t);
            }
    return out;
}

long count_basic(int n) { return (2L * n * n * n + n) / 3; }

EssentialSet essential_set_A(const WindowPermutation& v) {
    const Board b(v);
    EssentialSet out;
    for (const auto& corner : se_corners(b)) {
        const int p = -corner.col;
        const int q = corner.row + 1;
        // q may reach hi + 1 only for corners on the last row, which cannot occur.
        out.push_back(BasicTriple{rank_A(v, p, q, Convention::Centered), p, q, Flavor::ACentered});
    }
    return sorted(std::move(out));
}

EssentialSet essential_set_A_small(const WindowPermutation& v) {
    if (v.lo() != 1) throw RangeError("small convention expects a permutation of [1, n]");
    const Board b(v);
    EssentialSet out;
    for (const auto& corner : se_corners(b)) {
        const int p = corner.col;
        const int q = corner.row;
        out.push_back(BasicTriple{rank_A(v, p, q, Convention::Small), p, q, Flavor::ASmall});
    }
    return sorted(std::move(out));
}

namespace {

EssentialSet essential_from_board(const SignedPermutation& w, const Board& b) {
    const BoxSet corners = se_corners(b);
    auto is_corner = [&](int row, int col) { return std::binary_search(corners.begin(), corners.end(), Cell{row, col}); };
    const bool type_c = b.kind() == BoardKind::C;
    EssentialSet out;
    for (const auto& corner : corners) {
        const int p = -corner.col;
        const int q = (type_c && corner.row == -1) ? 1 : corner.row + 1;
        const int k = rank_B(w, p, q);
        // (i) rightmost column, strictly above the center row
        if (p == 1 && q < 0) continue;
        // (ii) a distinct SE corner in the opposite row whose rank exceeds this one by q - 1
        if (p > 1 && q > 0) {
            const int opposite = -q;
            if (opposite != corner.row && is_corner(opposite, corner.col) && k == rank_B(w, p, 1 - q) - (q - 1))
                continue;
        }
        out.push_back(triple_b(k, p, q));
    }
    return sorted(std::move(out));
}

} // namespace

EssentialSet essential_set_B(const SignedPermutation& w) { return essential_from_board(w, Board(w, BoardKind::B)); }

EssentialSet essential_set_C(const SignedPermutation& w) { return essential_from_board(w, Board(w, BoardKind::C)); }

EssentialSet essential_set(const SignedPermutation& w, BoardKind kind) {
    if (kind == BoardKind::A) throw std::invalid_argument("use essential_set_A(iota(w)) for kind A");
    return kind == BoardKind::B ? essential_set_B(w) : essential_set_C(w);
}

// ---------------------------------------------------------------------------

BasicCatalog::BasicCatalog(int n) : n_(n), triples_(enumerate_basic(n)) {
    for (const auto& t : triples_) {
        elements_.push_back(basic_signed(t).padded(n));
        tables_.emplace_back(elements_.back(), n);
    }
    order_ = FinitePoset(triples_.size(), [&](std::size_t a, std::size_t b) { return tables_[a].dominated_by(tables_[b]); });
}

std::vector<std::size_t> BasicCatalog::below(const SignedPermutation& w) const {
    const RankTable top(w, n_);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < tables_.size(); ++i)
        if (tables_[i].dominated_by(top)) out.push_back(i);
    return out;
}

EssentialSet maximal_basic_below(const BasicCatalog& catalog, const SignedPermutation& w) {
    EssentialSet out;
    for (std::size_t i : catalog.order().maximal(catalog.below(w))) out.push_back(catalog.triples()[i]);
    return sorted(std::move(out));
}

EssentialSet maximal_basic_below(const SignedPermutation& w) { return maximal_basic_below(BasicCatalog(w.size()), w); }

SignedPermutation dissecting_u(const BasicTriple& t, int n) {
    if (t.flavor != Flavor::B) throw InvalidTriple("dissecting_u needs a type B triple");
    if (n < n_min(t)) throw RangeError("n = " + std::to_string(n) + " is below n_min of " + t.str());
    const int k2 = n + 2 - t.p - t.k;
    const int q2 = t.q == 1 ? 1 : 1 - t.q;
    const SignedPermutation base = signed_from_table(k2, t.p, q2);
    if (base.size() > n) throw InvariantViolation("dissecting element of " + t.str() + " leaves W_" + std::to_string(n));
    return compose(base, SignedPermutation::longest(n));
}

WindowPermutation dissecting_t_A(const BasicTriple& t, int n) {
    if (t.flavor != Flavor::ASmall) throw InvalidTriple("dissecting_t_A needs a small-convention triple");
    t.require_valid();
    if (n < t.q + t.k) throw RangeError("n = " + std::to_string(n) + " is below q + k for " + t.str());
    const BasicTriple inner = triple_small(n + 1 - t.q - t.k, n - t.p, t.q);
    return compose(basic_perm_A(inner, n), WindowPermutation::longest(1, n));
}

std::vector<SignedPermutation> rwy_via_bijection(const SignedPermutation& w) {
    const int n = w.size();
    const SignedPermutation w0 = SignedPermutation::longest(n);
    std::vector<SignedPermutation> out;
    for (const auto& t : essential_set_B(compose(w, w0))) out.push_back(compose(dissecting_u(t, n), w0));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WindowPermutation> rwy_via_bijection(const WindowPermutation& v) {
    if (v.lo() != 1) throw RangeError("rwy_via_bijection expects a permutation of [1, n]");
    const int n = v.hi();
    const WindowPermutation w0 = WindowPermutation::longest(1, n);
    std::vector<WindowPermutation> out;
    for (const auto& t : essential_set_A_small(compose(v, w0))) out.push_back(compose(dissecting_t_A(t, n), w0));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

namespace {

BasicTriple as_centered(const BasicTriple& t) { return BasicTriple{t.k, t.p, t.q, Flavor::ACentered}; }

bool typeA_leq(const BasicTriple& lower, const BasicTriple& upper) {
    if (!upper.valid()) return false;
    return leq_A(basic_perm_A(as_centered(lower)), basic_perm_A(upper));
}

BasicTriple case_i_witness(const BasicTriple& tp) {
    return BasicTriple{tp.k + tp.q, tp.p, 1 - tp.q, Flavor::ACentered};
}

} // namespace

bool basic_leq_via_typeA(const BasicTriple& t, const BasicTriple& tp) {
    t.require_valid();
    tp.require_valid();
    const bool case_i = -tp.k < tp.q && tp.q < 0 && 0 < t.q;
    const bool case_ii = tp.q > 0 && 0 > t.q;
    return (case_i && typeA_leq(t, case_i_witness(tp))) || (case_ii && typeA_leq(t, reflect(as_centered(tp)))) ||
           typeA_leq(t, as_centered(tp));
}

std::string lemma_case_name(LemmaCase c) {
    switch (c) {
    case LemmaCase::None: return "none";
    case LemmaCase::CaseI: return "case-i";
    case LemmaCase::CaseII: return "case-ii";
    case LemmaCase::Unexplained: return "unexplained";
    }
    return "?";
}

LemmaCase classify_exception(const BasicTriple& t, const BasicTriple& tp) {
    t.require_valid();
    tp.require_valid();
    if (!leq_B(basic_signed(t), basic_signed(tp))) return LemmaCase::None;
    if (typeA_leq(t, as_centered(tp))) return LemmaCase::None;
    if (-tp.k < tp.q && tp.q < 0 && 0 < t.q && typeA_leq(t, case_i_witness(tp))) return LemmaCase::CaseI;
    if (tp.q > 0 && 0 > t.q && typeA_leq(t, reflect(as_centered(tp)))) return LemmaCase::CaseII;
    return LemmaCase::Unexplained;
}

std::vector<SignedPermutation> base_of(const SignedBruhatPoset& poset) {
    std::set<SignedPermutation> base;
    for (const auto& u : poset.elements())
        for (auto& x : minimal_not_below(poset, u)) base.insert(std::move(x));
    return {base.begin(), base.end()};
}

std::vector<SignedPermutation> base_of(int n, int max_n) { return base_of(SignedBruhatPoset(n, max_n)); }

std::string essential_json(const SignedPermutation& w, BoardKind kind) {
    nlohmann::ordered_json j;
    j["w"] = std::vector<int>(w.window().begin(), w.window().end());
    j["type"] = board_kind_name(kind);
    auto arr = nlohmann::ordered_json::array();
    for (const auto& t : essential_set(w, kind)) {
        nlohmann::ordered_json e;
        e["k"] = t.k;
        e["p"] = t.p;
        e["q"] = t.q;
        arr.push_back(e);
    }
    j["essential"] = arr;
    return j.dump();
}

} // namespace signedperm
