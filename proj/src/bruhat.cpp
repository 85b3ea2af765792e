#include "signedperm/bruhat.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "signedperm/errors.hpp"

namespace signedperm {

namespace {

// cnt[(a - lo) * size + (b - lo)] = #{i <= a | v(i) >= b} for a, b in [lo, hi].
std::vector<int> dominance_counts(const WindowPermutation& v, int lo, int hi) {
    const int size = hi - lo + 1;
    std::vector<int> cnt(static_cast<std::size_t>(size) * size, 0);
    std::vector<int> column(size, 0); // column[b - lo] = #{i <= a | v(i) >= b}, updated row by row
    for (int a = lo; a <= hi; ++a) {
        int value = v(a);
        for (int b = lo; b <= value; ++b) ++column[b - lo];
        std::copy(column.begin(), column.end(), cnt.begin() + static_cast<std::ptrdiff_t>(a - lo) * size);
    }
    return cnt;
}

std::string budget_message(int n, int max_n) {
    return "n = " + std::to_string(n) + " exceeds the enumeration budget " + std::to_string(max_n) +
           " (raise max_n to override)";
}

int n_min_of(const BasicTriple& t) { return std::max(t.p + t.k - 1, t.q + t.k - 1); }

} // namespace

int rank_B(const SignedPermutation& w, int p, int q) {
    const int n = w.size();
    if (p < 1 || p > n || q < -n || q > n)
        throw RangeError("rank_B(p=" + std::to_string(p) + ", q=" + std::to_string(q) + ") outside 1<=p<=" +
                         std::to_string(n) + ", |q|<=" + std::to_string(n));
    int r = 0;
    for (int i = p; i <= n; ++i)
        if (w(i) <= -q) ++r;
    return r;
}

int rank_A(const WindowPermutation& v, int p, int q, Convention convention) {
    if (convention == Convention::Small) {
        if (v.lo() != 1) throw RangeError("small convention needs a permutation of [1, n]");
        const int n = v.hi();
        if (p < 1 || p > n || q < 1 || q > n)
            throw RangeError("rank_A small (p=" + std::to_string(p) + ", q=" + std::to_string(q) + ") out of range");
        int r = 0;
        for (int i = 1; i <= p; ++i)
            if (v(i) > q) ++r;
        return r;
    }
    if (-p < v.lo() || -p > v.hi() || q < v.lo() || q > v.hi())
        throw RangeError("rank_A centered (p=" + std::to_string(p) + ", q=" + std::to_string(q) + ") out of range");
    int r = 0;
    for (int i = v.lo(); i <= -p; ++i)
        if (v(i) >= q) ++r;
    return r;
}

bool leq_A(const WindowPermutation& lhs, const WindowPermutation& rhs) {
    const int lo = std::min(lhs.lo(), rhs.lo());
    const int hi = std::max(lhs.hi(), rhs.hi());
    auto a = dominance_counts(lhs, lo, hi);
    auto b = dominance_counts(rhs, lo, hi);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool leq_B(const SignedPermutation& lhs, const SignedPermutation& rhs) {
    const int n = std::max(lhs.size(), rhs.size());
    return leq_A(iota(lhs.padded(n)), iota(rhs.padded(n)));
}

RankTable::RankTable(const SignedPermutation& w, int n) : n_(n), cells_(static_cast<std::size_t>(n) * (2 * n + 1)) {
    const SignedPermutation x = w.padded(n);
    for (int p = n; p >= 1; --p) {
        for (int q = -n; q <= n; ++q) {
            int above = p < n ? cells_[p * (2 * n + 1) + (q + n)] : 0;
            cells_[(p - 1) * (2 * n + 1) + (q + n)] = above + (x(p) <= -q ? 1 : 0);
        }
    }
}

bool RankTable::dominated_by(const RankTable& other) const noexcept {
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i] > other.cells_[i]) return false;
    return true;
}

void for_each_W(int n, const std::function<void(const SignedPermutation&)>& fn, int max_n) {
    if (n < 1) throw RangeError("n must be positive");
    if (n > max_n) throw BudgetExceeded(budget_message(n, max_n));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> window(n);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            for (int j = 0; j < n; ++j) window[j] = (mask >> j) & 1u ? -perm[j] : perm[j];
            fn(SignedPermutation(window));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<SignedPermutation> enumerate_W(int n, int max_n) {
    std::vector<SignedPermutation> out;
    for_each_W(n, [&](const SignedPermutation& w) { out.push_back(w); }, max_n);
    return out;
}

std::vector<WindowPermutation> enumerate_S(int lo, int hi, int max_size) {
    if (hi < lo) throw RangeError("empty interval");
    if (hi - lo + 1 > max_size) throw BudgetExceeded(budget_message(hi - lo + 1, max_size));
    std::vector<int> values(hi - lo + 1);
    std::iota(values.begin(), values.end(), lo);
    std::vector<WindowPermutation> out;
    do {
        out.emplace_back(lo, values);
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

// ---------------------------------------------------------------------------

FinitePoset::FinitePoset(std::size_t count, const std::function<bool(std::size_t, std::size_t)>& leq)
    : count_(count), leq_(count * count) {
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b) leq_[a * count + b] = (a == b) || leq(a, b);
}

std::vector<std::size_t> FinitePoset::minimal(const std::vector<std::size_t>& subset) const {
    std::vector<std::size_t> out;
    for (std::size_t x : subset) {
        bool is_min = std::none_of(subset.begin(), subset.end(), [&](std::size_t y) { return less(y, x); });
        if (is_min) out.push_back(x);
    }
    return out;
}

std::vector<std::size_t> FinitePoset::maximal(const std::vector<std::size_t>& subset) const {
    std::vector<std::size_t> out;
    for (std::size_t x : subset) {
        bool is_max = std::none_of(subset.begin(), subset.end(), [&](std::size_t y) { return less(x, y); });
        if (is_max) out.push_back(x);
    }
    return out;
}

std::vector<std::size_t> FinitePoset::upper_bounds(const std::vector<std::size_t>& subset) const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < count_; ++x) {
        bool above = std::all_of(subset.begin(), subset.end(), [&](std::size_t y) { return leq(y, x); });
        if (above) out.push_back(x);
    }
    return out;
}

SignedBruhatPoset::SignedBruhatPoset(int n, int max_n) : n_(n), elements_(enumerate_W(n, max_n)) {
    std::vector<RankTable> tables;
    tables.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        index_.emplace(elements_[i], i);
        tables.emplace_back(elements_[i], n);
    }
    order_ = FinitePoset(elements_.size(), [&](std::size_t a, std::size_t b) { return tables[a].dominated_by(tables[b]); });
}

std::size_t SignedBruhatPoset::index_of(const SignedPermutation& w) const {
    if (w.size() > n_) throw RangeError("element " + w.str() + " is not in W_" + std::to_string(n_));
    return index_.at(w.padded(n_));
}

SymmetricBruhatPoset::SymmetricBruhatPoset(int n, int max_size) : n_(n), elements_(enumerate_S(1, n, max_size)) {
    std::vector<std::vector<int>> tables;
    tables.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        index_.emplace(elements_[i], i);
        tables.push_back(dominance_counts(elements_[i], 1, n));
    }
    order_ = FinitePoset(elements_.size(), [&](std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < tables[a].size(); ++c)
            if (tables[a][c] > tables[b][c]) return false;
        return true;
    });
}

std::size_t SymmetricBruhatPoset::index_of(const WindowPermutation& v) const {
    if (v.lo() < 1 || v.hi() > n_) throw RangeError("element " + v.str() + " is not in S_" + std::to_string(n_));
    return index_.at(v.padded(1, n_));
}

// ---------------------------------------------------------------------------

SupremumResult supremum(const SignedBruhatPoset& poset, const std::vector<SignedPermutation>& elems) {
    std::vector<std::size_t> members;
    for (const auto& y : elems) members.push_back(poset.index_of(y));
    auto bounds = poset.order().upper_bounds(members);
    auto minimal = poset.order().minimal(bounds);
    SupremumResult result;
    result.upper_bound_count = bounds.size();
    for (std::size_t i : minimal) result.minimal_upper_bounds.push_back(poset.elements()[i]);
    if (minimal.size() != 1) {
        std::string msg = "no supremum: " + std::to_string(minimal.size()) + " minimal upper bounds";
        for (const auto& m : result.minimal_upper_bounds) msg += " [" + m.str() + "]";
        throw NoSupremum(msg);
    }
    result.value = poset.elements()[minimal.front()];
    return result;
}

SupremumResult supremum(const std::vector<SignedPermutation>& elems, int n) {
    for (const auto& y : elems)
        if (y.size() > n) throw RangeError("element " + y.str() + " is not in W_" + std::to_string(n));
    return supremum(SignedBruhatPoset(n), elems);
}

std::vector<SignedPermutation> minimal_not_below(const SignedBruhatPoset& poset, const SignedPermutation& w) {
    const std::size_t top = poset.index_of(w);
    std::vector<std::size_t> outside;
    for (std::size_t i = 0; i < poset.elements().size(); ++i)
        if (!poset.order().leq(i, top)) outside.push_back(i);
    std::vector<SignedPermutation> out;
    for (std::size_t i : poset.order().minimal(outside)) out.push_back(poset.elements()[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SignedPermutation> minimal_not_below(const SignedPermutation& w) {
    return minimal_not_below(SignedBruhatPoset(w.size()), w);
}

std::vector<WindowPermutation> minimal_not_below(const SymmetricBruhatPoset& poset, const WindowPermutation& v) {
    const std::size_t top = poset.index_of(v);
    std::vector<std::size_t> outside;
    for (std::size_t i = 0; i < poset.elements().size(); ++i)
        if (!poset.order().leq(i, top)) outside.push_back(i);
    std::vector<WindowPermutation> out;
    for (std::size_t i : poset.order().minimal(outside)) out.push_back(poset.elements()[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WindowPermutation> minimal_not_below(const WindowPermutation& v) {
    if (v.lo() != 1) throw RangeError("minimal_not_below expects a permutation of [1, n]");
    return minimal_not_below(SymmetricBruhatPoset(v.hi()), v);
}

SignedPermutation max_with_rank_below(const SignedBruhatPoset& poset, const BasicTriple& t) {
    t.require_valid();
    if (t.flavor != Flavor::B) throw InvalidTriple("max_with_rank_below needs a type B triple");
    if (poset.n() < n_min_of(t)) throw RangeError("n smaller than n_min of " + t.str());
    std::vector<std::size_t> below;
    for (std::size_t i = 0; i < poset.elements().size(); ++i)
        if (rank_B(poset.elements()[i], t.p, t.q) < t.k) below.push_back(i);
    auto top = poset.order().maximal(below);
    if (top.size() != 1)
        throw NoSupremum("rank-below set of " + t.str() + " has " + std::to_string(top.size()) + " maximal elements");
    return poset.elements()[top.front()];
}

SignedPermutation max_with_rank_below(const BasicTriple& t, int n) {
    return max_with_rank_below(SignedBruhatPoset(n), t);
}

SignedPermutation min_with_rank_at_least(const SignedBruhatPoset& poset, const BasicTriple& t) {
    std::vector<std::size_t> above;
    for (std::size_t i = 0; i < poset.elements().size(); ++i)
        if (rank_B(poset.elements()[i], t.p, t.q) >= t.k) above.push_back(i);
    auto bottom = poset.order().minimal(above);
    if (bottom.size() != 1)
        throw NoSupremum("rank-above set of " + t.str() + " has " + std::to_string(bottom.size()) + " minimal elements");
    return poset.elements()[bottom.front()];
}

} // namespace signedperm
