#include "signedperm/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "signedperm/errors.hpp"

namespace signedperm {

namespace {

std::vector<std::string_view> split_tokens(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) ++i;
        std::size_t start = i;
        while (i < text.size() && !is_sep(text[i])) ++i;
        if (i > start) tokens.push_back(text.substr(start, i - start));
    }
    return tokens;
}

int parse_int(std::string_view token) {
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        throw ParseError("not an integer: '" + std::string(token) + "'");
    return value;
}

} // namespace

// ---------------------------------------------------------------------------
// SignedPermutation

SignedPermutation::SignedPermutation() : window_{1} {}

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
    const int n = size();
    if (n == 0) throw ParseError("empty signed permutation");
    std::vector<bool> seen(n + 1, false);
    for (int v : window_) {
        if (v == 0) throw ParseError("zero entry '0' in signed permutation");
        int a = std::abs(v);
        if (a > n)
            throw ParseError("entry '" + std::to_string(v) + "' exceeds n = " + std::to_string(n));
        if (seen[a]) throw ParseError("duplicate absolute value " + std::to_string(a));
        seen[a] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    if (n < 1) throw RangeError("n must be positive");
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::longest(int n) {
    if (n < 1) throw RangeError("n must be positive");
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = -(i + 1);
    return SignedPermutation(std::move(w));
}

int SignedPermutation::operator()(int i) const noexcept {
    if (i == 0) return 0;
    int a = std::abs(i);
    if (a > size()) return i;
    int v = window_[a - 1];
    return i > 0 ? v : -v;
}

SignedPermutation SignedPermutation::padded(int m) const {
    if (m < size()) throw RangeError("cannot pad W_" + std::to_string(size()) + " down to W_" + std::to_string(m));
    std::vector<int> w(window_);
    for (int i = size() + 1; i <= m; ++i) w.push_back(i);
    return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> inv(window_.size());
    for (int i = 1; i <= size(); ++i) {
        int v = window_[i - 1];
        if (v > 0) inv[v - 1] = i;
        else inv[-v - 1] = -i;
    }
    return SignedPermutation(std::move(inv));
}

int SignedPermutation::length() const noexcept {
    const int n = size();
    int len = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (j > i && window_[i] > window_[j]) ++len;
            if (window_[i] + window_[j] < 0) ++len;
        }
    }
    return len;
}

int SignedPermutation::negative_count() const noexcept {
    return static_cast<int>(std::count_if(window_.begin(), window_.end(), [](int v) { return v < 0; }));
}

bool SignedPermutation::is_identity() const noexcept {
    for (int i = 0; i < size(); ++i)
        if (window_[i] != i + 1) return false;
    return true;
}

std::string SignedPermutation::str(BarStyle style) const {
    std::string out;
    for (std::size_t i = 0; i < window_.size(); ++i) {
        if (i) out += ' ';
        int v = window_[i];
        if (style == BarStyle::Overbar && v < 0) {
            // combining overline after each digit
            for (char c : std::to_string(-v)) {
                out += c;
                out += "̄";
            }
        } else {
            out += std::to_string(v);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// WindowPermutation

WindowPermutation::WindowPermutation() : lo_(1), values_{1} {}

WindowPermutation::WindowPermutation(int lo, std::vector<int> values) : lo_(lo), values_(std::move(values)) {
    if (values_.empty()) throw ParseError("empty permutation");
    std::vector<bool> seen(values_.size(), false);
    for (int v : values_) {
        if (v < lo_ || v > hi())
            throw ParseError("entry '" + std::to_string(v) + "' outside [" + std::to_string(lo_) + "," +
                             std::to_string(hi()) + "]");
        if (seen[v - lo_]) throw ParseError("duplicate entry " + std::to_string(v));
        seen[v - lo_] = true;
    }
}

WindowPermutation WindowPermutation::identity(int lo, int hi) {
    if (hi < lo) throw RangeError("empty interval");
    std::vector<int> v(hi - lo + 1);
    for (int i = lo; i <= hi; ++i) v[i - lo] = i;
    return WindowPermutation(lo, std::move(v));
}

WindowPermutation WindowPermutation::longest(int lo, int hi) {
    if (hi < lo) throw RangeError("empty interval");
    std::vector<int> v(hi - lo + 1);
    for (int i = lo; i <= hi; ++i) v[i - lo] = lo + hi - i;
    return WindowPermutation(lo, std::move(v));
}

int WindowPermutation::operator()(int i) const noexcept {
    if (i < lo_ || i > hi()) return i;
    return values_[i - lo_];
}

WindowPermutation WindowPermutation::padded(int lo, int hi) const {
    if (lo > lo_ || hi < this->hi()) throw RangeError("padding interval must contain the current one");
    std::vector<int> v(hi - lo + 1);
    for (int i = lo; i <= hi; ++i) v[i - lo] = (*this)(i);
    return WindowPermutation(lo, std::move(v));
}

WindowPermutation WindowPermutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (int i = lo_; i <= hi(); ++i) inv[values_[i - lo_] - lo_] = i;
    return WindowPermutation(lo_, std::move(inv));
}

long WindowPermutation::length() const noexcept {
    long len = 0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        for (std::size_t j = i + 1; j < values_.size(); ++j)
            if (values_[i] > values_[j]) ++len;
    return len;
}

bool WindowPermutation::is_identity() const noexcept {
    for (int i = lo_; i <= hi(); ++i)
        if (values_[i - lo_] != i) return false;
    return true;
}

std::string WindowPermutation::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ' ';
        os << values_[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------

SignedPermutation parse_signed(std::string_view text) {
    auto tokens = split_tokens(text);
    if (tokens.empty()) throw ParseError("empty signed permutation");
    const int n = static_cast<int>(tokens.size());
    std::vector<int> w;
    std::vector<bool> seen(n + 1, false);
    for (auto tok : tokens) {
        int v = parse_int(tok);
        if (v == 0) throw ParseError("zero entry '" + std::string(tok) + "'");
        int a = std::abs(v);
        if (a > n)
            throw ParseError("entry '" + std::string(tok) + "' exceeds n = " + std::to_string(n));
        if (seen[a]) throw ParseError("duplicate absolute value " + std::to_string(a) + " at '" + std::string(tok) + "'");
        seen[a] = true;
        w.push_back(v);
    }
    return SignedPermutation(std::move(w));
}

WindowPermutation parse_window(std::string_view text, int lo) {
    auto tokens = split_tokens(text);
    if (tokens.empty()) throw ParseError("empty permutation");
    std::vector<int> v;
    for (auto tok : tokens) v.push_back(parse_int(tok));
    return WindowPermutation(lo, std::move(v));
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
    const int n = std::max(a.size(), b.size());
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i) w[i - 1] = a(b(i));
    return SignedPermutation(std::move(w));
}

WindowPermutation compose(const WindowPermutation& a, const WindowPermutation& b) {
    const int lo = std::min(a.lo(), b.lo());
    const int hi = std::max(a.hi(), b.hi());
    std::vector<int> v(hi - lo + 1);
    for (int i = lo; i <= hi; ++i) v[i - lo] = a(b(i));
    return WindowPermutation(lo, std::move(v));
}

WindowPermutation iota(const SignedPermutation& w) {
    const int n = w.size();
    std::vector<int> v(2 * n + 1);
    for (int i = -n; i <= n; ++i) v[i + n] = w(i);
    return WindowPermutation(-n, std::move(v));
}

WindowPermutation iota_prime(const SignedPermutation& w) {
    const int n = w.size();
    auto slot = [n](int x) { return x < 0 ? x + n + 1 : x + n; };
    std::vector<int> v(2 * n);
    for (int i = -n; i <= n; ++i) {
        if (i == 0) continue;
        v[slot(i) - 1] = slot(w(i));
    }
    return WindowPermutation(1, std::move(v));
}

int iota_prime_label(int slot, int n) noexcept { return slot <= n ? slot - n - 1 : slot - n; }

std::vector<int> descents(const SignedPermutation& w) {
    std::vector<int> d;
    for (int i = 0; i < w.size(); ++i)
        if (w(i) > w(i + 1)) d.push_back(i);
    return d;
}

std::vector<int> descents(const WindowPermutation& v) {
    std::vector<int> d;
    for (int i = v.lo(); i < v.hi(); ++i)
        if (v(i) > v(i + 1)) d.push_back(i);
    return d;
}

bool is_grassmannian(const SignedPermutation& w) { return descents(w).size() == 1; }
bool is_bigrassmannian(const SignedPermutation& w) { return is_grassmannian(w) && is_grassmannian(w.inverse()); }
bool is_grassmannian(const WindowPermutation& v) { return descents(v).size() == 1; }
bool is_bigrassmannian(const WindowPermutation& v) { return is_grassmannian(v) && is_grassmannian(v.inverse()); }

} // namespace signedperm
