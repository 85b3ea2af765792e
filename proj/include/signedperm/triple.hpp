#pragma once

#include <compare>
#include <string>

namespace signedperm {

/// Which validity rule a triple (k, p, q) is held to.
///  - ACentered: k > max(0, 1 - p - q), positions and values on [-N, N].
///  - ASmall:    k, p, q > 0 and p >= k > p - q, permutations of 1..n.
///  - B:         ACentered rule plus p > 0, q != 0, and q > 0 whenever p = 1.
enum class Flavor { ACentered, ASmall, B };

struct BasicTriple {
    int k = 1;
    int p = 1;
    int q = 1;
    Flavor flavor = Flavor::B;

    bool valid() const noexcept;
    /// Throws InvalidTriple naming the violated rule.
    void require_valid() const;

    std::string str() const;

    friend bool operator==(const BasicTriple&, const BasicTriple&) = default;
    /// Canonical order: p, then q, then k.
    friend std::strong_ordering operator<=>(const BasicTriple& a, const BasicTriple& b) noexcept {
        if (auto c = a.p <=> b.p; c != 0) return c;
        if (auto c = a.q <=> b.q; c != 0) return c;
        if (auto c = a.k <=> b.k; c != 0) return c;
        return static_cast<int>(a.flavor) <=> static_cast<int>(b.flavor);
    }
};

inline BasicTriple triple_b(int k, int p, int q) { return {k, p, q, Flavor::B}; }
inline BasicTriple triple_a(int k, int p, int q) { return {k, p, q, Flavor::ACentered}; }
inline BasicTriple triple_small(int k, int p, int q) { return {k, p, q, Flavor::ASmall}; }

/// Parses "k,p,q" (commas or spaces).
BasicTriple parse_triple(const std::string& text, Flavor flavor);

} // namespace signedperm
