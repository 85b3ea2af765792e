#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace signedperm {

enum class BarStyle { Minus, Overbar };

/// Element of the hyperoctahedral group W_n, stored as its one-line window
/// w(1) ... w(n). Values off the window follow w(-i) = -w(i), w(0) = 0 and
/// w(m) = m for m > n, so a value is also an element of every W_m with m >= n.
class SignedPermutation {
public:
    /// Identity of W_1.
    SignedPermutation();

    /// Throws ParseError if the absolute values are not a permutation of 1..n.
    explicit SignedPermutation(std::vector<int> window);

    static SignedPermutation identity(int n);
    /// w_0 = -1 -2 ... -n.
    static SignedPermutation longest(int n);

    int size() const noexcept { return static_cast<int>(window_.size()); }
    std::span<const int> window() const noexcept { return window_; }

    /// Value at any integer position, honoring the implicit extension.
    int operator()(int i) const noexcept;

    /// Natural inclusion W_n -> W_m; m smaller than size() is an error.
    SignedPermutation padded(int m) const;

    SignedPermutation inverse() const;
    int length() const noexcept;
    int negative_count() const noexcept;
    bool is_identity() const noexcept;

    /// Space-separated decimal form; Overbar writes 2̄ instead of -2.
    std::string str(BarStyle style = BarStyle::Minus) const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> window_;
};

/// Ordinary permutation of the integer interval [lo, hi], identity outside it.
class WindowPermutation {
public:
    WindowPermutation();
    /// values[j] is the image of lo + j. Throws ParseError unless it is a
    /// bijection of [lo, lo + values.size() - 1].
    WindowPermutation(int lo, std::vector<int> values);

    static WindowPermutation identity(int lo, int hi);
    /// Reversal i -> lo + hi - i.
    static WindowPermutation longest(int lo, int hi);

    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return lo_ + static_cast<int>(values_.size()) - 1; }
    int size() const noexcept { return static_cast<int>(values_.size()); }
    std::span<const int> values() const noexcept { return values_; }

    int operator()(int i) const noexcept;

    /// Extend by fixed points to [lo, hi]; must contain the current interval.
    WindowPermutation padded(int lo, int hi) const;

    WindowPermutation inverse() const;
    long length() const noexcept;
    bool is_identity() const noexcept;

    std::string str() const;

    friend bool operator==(const WindowPermutation&, const WindowPermutation&) = default;
    friend auto operator<=>(const WindowPermutation&, const WindowPermutation&) = default;

private:
    int lo_;
    std::vector<int> values_;
};

/// Parses whitespace- or comma-separated signed integers.
SignedPermutation parse_signed(std::string_view text);
/// Parses a one-line permutation of [lo, lo + count - 1].
WindowPermutation parse_window(std::string_view text, int lo = 1);

/// (a * b)(i) = a(b(i)); the shorter operand is padded.
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
/// Same convention, on the union of the two intervals.
WindowPermutation compose(const WindowPermutation& a, const WindowPermutation& b);

inline SignedPermutation inverse(const SignedPermutation& w) { return w.inverse(); }
inline WindowPermutation inverse(const WindowPermutation& v) { return v.inverse(); }
inline int length(const SignedPermutation& w) noexcept { return w.length(); }
inline SignedPermutation longest_element(int n) { return SignedPermutation::longest(n); }

/// The embedding into permutations of [-n, n]:
/// -w(n) ... -w(1) 0 w(1) ... w(n).
WindowPermutation iota(const SignedPermutation& w);

/// The embedding into permutations of 2n letters that omits the fixed 0.
/// Signed letter x is relabelled x + n + 1 for x < 0 and x + n for x > 0, so
/// the result acts on [1, 2n].
WindowPermutation iota_prime(const SignedPermutation& w);
/// Inverse of the relabelling used by iota_prime.
int iota_prime_label(int slot, int n) noexcept;

/// Descent positions i >= 0 with w(i) > w(i+1); 0 is a descent iff w(1) < 0.
std::vector<int> descents(const SignedPermutation& w);
/// Descent positions of an ordinary permutation (any integer position).
std::vector<int> descents(const WindowPermutation& v);

bool is_grassmannian(const SignedPermutation& w);
bool is_bigrassmannian(const SignedPermutation& w);
bool is_grassmannian(const WindowPermutation& v);
bool is_bigrassmannian(const WindowPermutation& v);

} // namespace signedperm
