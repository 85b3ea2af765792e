#include "signedperm/triple.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "signedperm/errors.hpp"

namespace signedperm {

namespace {

const char* rule_violation(const BasicTriple& t) {
    switch (t.flavor) {
    case Flavor::ASmall:
        if (t.k <= 0 || t.p <= 0 || t.q <= 0) return "k, p, q must be positive";
        if (!(t.p >= t.k)) return "need p >= k";
        if (!(t.k > t.p - t.q)) return "need k > p - q";
        return nullptr;
    case Flavor::B:
        if (t.p <= 0) return "need p > 0";
        if (t.q == 0) return "need q != 0";
        if (t.p == 1 && t.q < 0) return "p = 1 requires q > 0";
        [[fallthrough]];
    case Flavor::ACentered:
        if (!(t.k > std::max(0, 1 - t.p - t.q))) return "need k > max(0, 1 - p - q)";
        return nullptr;
    }
    return "unknown flavor";
}

} // namespace

bool BasicTriple::valid() const noexcept { return rule_violation(*this) == nullptr; }

void BasicTriple::require_valid() const {
    if (const char* why = rule_violation(*this)) throw InvalidTriple("invalid triple " + str() + ": " + why);
}

std::string BasicTriple::str() const {
    std::ostringstream os;
    os << '(' << k << ',' << p << ',' << q << ')';
    return os.str();
}

BasicTriple parse_triple(const std::string& text, Flavor flavor) {
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ',' || text[i] == ' ' || text[i] == '(' || text[i] == ')')) ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] != ',' && text[i] != ' ' && text[i] != ')') ++i;
        if (i == start) continue;
        std::string_view tok(text.data() + start, i - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("not an integer: '" + std::string(tok) + "' in triple '" + text + "'");
        parts.push_back(value);
    }
    if (parts.size() != 3) throw ParseError("triple needs exactly three integers: '" + text + "'");
    return BasicTriple{parts[0], parts[1], parts[2], flavor};
}

} // namespace signedperm
