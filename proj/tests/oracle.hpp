#pragma once

// Test-side oracles built from definitions only: signed permutations are plain
// vectors, Bruhat order is the transitive closure of length-increasing
// multiplication by reflections, and lengths come from inversion counts.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Signed = std::vector<int>;

inline int at(const Signed& w, int i) {
    if (i == 0) return 0;
    if (i > static_cast<int>(w.size())) return i;
    if (i < -static_cast<int>(w.size())) return i;
    return i > 0 ? w[i - 1] : -w[-i - 1];
}

/// (#inversions of i -> w(i) on {-n..n} - #negative entries) / 2.
inline int length(const Signed& w) {
    const int n = static_cast<int>(w.size());
    int inv = 0;
    for (int i = -n; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (at(w, i) > at(w, j)) ++inv;
    int neg = 0;
    for (int x : w)
        if (x < 0) ++neg;
    return (inv - neg) / 2;
}

inline std::vector<Signed> all_signed(int n) {
    std::vector<Signed> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            Signed w = perm;
            for (int j = 0; j < n; ++j)
                if (mask & (1 << j)) w[j] = -w[j];
            out.push_back(w);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Right multiplication by each reflection of W_n: (i j)(-i -j), (i -j)(-i j), (i -i).
inline std::vector<Signed> reflect_all(const Signed& w) {
    const int n = static_cast<int>(w.size());
    std::vector<Signed> out;
    for (int i = 0; i < n; ++i) {
        Signed x = w;
        x[i] = -x[i];
        out.push_back(x);
        for (int j = i + 1; j < n; ++j) {
            Signed a = w;
            std::swap(a[i], a[j]);
            out.push_back(a);
            Signed b = w;
            b[i] = -w[j];
            b[j] = -w[i];
            out.push_back(b);
        }
    }
    return out;
}

/// Bruhat order on W_n: below[x] is the set of elements <= x.
class SignedOrder {
public:
    explicit SignedOrder(int n) : elements_(all_signed(n)) {
        for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
        std::vector<std::size_t> by_length(elements_.size());
        std::iota(by_length.begin(), by_length.end(), 0);
        std::vector<int> len(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i) len[i] = length(elements_[i]);
        std::sort(by_length.begin(), by_length.end(), [&](auto a, auto b) { return len[a] < len[b]; });
        below_.assign(elements_.size(), std::vector<bool>(elements_.size(), false));
        for (std::size_t x : by_length) {
            below_[x][x] = true;
            for (const auto& y : reflect_all(elements_[x])) {
                const std::size_t iy = index_.at(y);
                if (len[iy] >= len[x]) continue;
                for (std::size_t z = 0; z < elements_.size(); ++z)
                    if (below_[iy][z]) below_[x][z] = true;
            }
        }
    }

    const std::vector<Signed>& elements() const { return elements_; }
    bool leq(const Signed& a, const Signed& b) const { return below_[index_.at(b)][index_.at(a)]; }

private:
    std::vector<Signed> elements_;
    std::map<Signed, std::size_t> index_;
    std::vector<std::vector<bool>> below_;
};

/// Bruhat order on S_n (one-line 1..n) by transpositions.
class SymmetricOrder {
public:
    explicit SymmetricOrder(int n) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do elements_.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
        for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
        auto inv = [](const std::vector<int>& v) {
            int c = 0;
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = i + 1; j < v.size(); ++j)
                    if (v[i] > v[j]) ++c;
            return c;
        };
        std::vector<std::size_t> order(elements_.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> len(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i) len[i] = inv(elements_[i]);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return len[a] < len[b]; });
        below_.assign(elements_.size(), std::vector<bool>(elements_.size(), false));
        for (std::size_t x : order) {
            below_[x][x] = true;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    auto y = elements_[x];
                    std::swap(y[i], y[j]);
                    const std::size_t iy = index_.at(y);
                    if (len[iy] >= len[x]) continue;
                    for (std::size_t z = 0; z < elements_.size(); ++z)
                        if (below_[iy][z]) below_[x][z] = true;
                }
        }
    }

    const std::vector<std::vector<int>>& elements() const { return elements_; }
    bool leq(const std::vector<int>& a, const std::vector<int>& b) const {
        return below_[index_.at(b)][index_.at(a)];
    }

private:
    std::vector<std::vector<int>> elements_;
    std::map<std::vector<int>, std::size_t> index_;
    std::vector<std::vector<bool>> below_;
};

/// r(p, q) = #{i >= p | w(i) <= -q}, counted straight from the definition.
inline int rank(const Signed& w, int p, int q) {
    int c = 0;
    for (int i = p; i <= static_cast<int>(w.size()); ++i)
        if (at(w, i) <= -q) ++c;
    return c;
}

inline bool is_grassmannian(const Signed& w) {
    // descents at 0..n-1 with w(0) = 0
    int d = 0;
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (at(w, i) > at(w, i + 1)) ++d;
    return d == 1;
}

inline Signed inverse(const Signed& w) {
    Signed out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int v = w[i];
        out[std::abs(v) - 1] = v > 0 ? static_cast<int>(i) + 1 : -static_cast<int>(i) - 1;
    }
    return out;
}

} // namespace oracle
