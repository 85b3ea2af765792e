#include "doctest.h"

#include <algorithm>
#include <array>
#include <tuple>
#include <cstdlib>
#include <set>

#include "oracle.hpp"
#include "signedperm/bruhat.hpp"
#include "signedperm/errors.hpp"
#include "signedperm/essential.hpp"

using namespace signedperm;

namespace {

SignedPermutation sp(std::vector<int> v) { return SignedPermutation(std::move(v)); }

EssentialSet sorted(EssentialSet s) {
    std::sort(s.begin(), s.end(), [](const BasicTriple& a, const BasicTriple& b) {
        return std::tie(a.p, a.q, a.k) < std::tie(b.p, b.q, b.k);
    });
    return s;
}

EssentialSet bs(std::initializer_list<std::array<int, 3>> xs, Flavor f = Flavor::B) {
    EssentialSet out;
    for (const auto& x : xs) out.push_back({x[0], x[1], x[2], f});
    return sorted(out);
}

// Placement recipe: k increasing entries from position p, ending at -q, where
// the run skips 0 and, for q < 0, the values q..-1; unused absolute values
// fill the remaining positions in increasing order.
oracle::Signed recipe(int k, int p, int q) {
    std::vector<int> run;
    for (int x = -q; static_cast<int>(run.size()) < k; --x) {
        if (x == 0 || (q < 0 && x >= q && x < 0)) continue;
        run.push_back(x);
    }
    std::reverse(run.begin(), run.end());
    int n = p + k - 1;
    std::set<int> used;
    for (int x : run) {
        used.insert(std::abs(x));
        n = std::max(n, std::abs(x));
    }
    std::vector<int> rest;
    for (int a = 1; a <= n; ++a)
        if (!used.count(a)) rest.push_back(a);
    oracle::Signed w(n);
    std::size_t r = 0;
    for (int i = 1; i <= n; ++i) w[i - 1] = (i >= p && i < p + k) ? run[i - p] : rest[r++];
    return w;
}

} // namespace

TEST_CASE("basic triple validity") {
    CHECK(triple_b(1, 1, 1).valid());
    CHECK_FALSE(triple_b(0, 1, 1).valid());
    CHECK_FALSE(triple_b(1, 1, -1).valid());
    CHECK_THROWS_AS(triple_b(1, 0, 1).require_valid(), InvalidTriple);
    CHECK(parse_triple("2,2,3", Flavor::B) == triple_b(2, 2, 3));
    CHECK(parse_triple("(3,2,-2)", Flavor::B) == triple_b(3, 2, -2));
    CHECK_THROWS_AS(parse_triple("1,2", Flavor::B), ParseError);
}

TEST_CASE("reflection of centered triples") {
    CHECK(reflect(triple_a(3, 4, 3)) == triple_a(9, -3, -2));
    CHECK(reflect(triple_a(1, 1, 1)) == triple_a(2, 0, 0));
    for (int k = 1; k <= 3; ++k)
        for (int p = -3; p <= 3; ++p)
            for (int q = -3; q <= 3; ++q) {
                const auto t = triple_a(k, p, q);
                if (t.valid()) CHECK(reflect(reflect(t)) == t);
            }
}

TEST_CASE("basic permutations of type A") {
    const auto v = basic_perm_A(triple_a(3, -1, 2));
    CHECK(v.str() == "-4 -3 -2 2 3 4 -1 0 1");
    CHECK(v.lo() == -4);
    const auto s = basic_perm_A(triple_small(3, 4, 2));
    CHECK(s.str() == "1 3 4 5 2");
    // (p + q - k, q, p) would give (3,2,4), which is not a valid triple
    CHECK_FALSE(triple_small(3, 2, 4).valid());
    CHECK(basic_inverse(triple_small(3, 4, 2)) == triple_small(1, 2, 4));
    CHECK(basic_perm_A(triple_small(1, 2, 4)).str() == "1 5 2 3 4");
    CHECK(s.inverse().str() == "1 5 2 3 4");
    CHECK(rank_A(s, 4, 2, Convention::Small) == 3);
}

TEST_CASE("small inverse formula") {
    for (int k = 1; k <= 5; ++k)
        for (int p = 1; p <= 6; ++p)
            for (int q = 1; q <= 6; ++q) {
                const auto t = triple_small(k, p, q);
                if (!t.valid()) continue;
                const auto inv = basic_inverse(t);
                REQUIRE(inv.valid());
                CHECK(basic_perm_A(inv, 12) == basic_perm_A(t, 12).inverse());
            }
}

TEST_CASE("centered inverse formula") {
    for (int k = 1; k <= 3; ++k)
        for (int p = -3; p <= 3; ++p)
            for (int q = -3; q <= 3; ++q) {
                const auto t = triple_a(k, p, q);
                if (!t.valid()) continue;
                const auto v = basic_perm_A(t, 8);
                CHECK(basic_perm_A(basic_inverse(t), 8) == v.inverse());
            }
}

TEST_CASE("basic signed permutations") {
    CHECK(basic_signed(triple_b(2, 2, 3)) == sp({1, -4, -3, 2}));
    CHECK(basic_length(triple_b(2, 2, 3)) == 9);
    CHECK(basic_signed(triple_b(3, 2, -2)) == sp({4, -3, 1, 2}));
    CHECK(basic_length(triple_b(3, 2, -2)) == 6);
    CHECK(basic_signed(triple_b(4, 2, -1)) == sp({5, -4, -3, -2, 1}));
    CHECK(basic_inverse(triple_b(3, 2, -2)) == triple_b(2, 3, -1));
    CHECK(basic_signed(triple_b(2, 3, -1)) == sp({3, 4, -2, 1}));
    CHECK(n_min(triple_b(2, 2, 3)) == 4);
    CHECK_THROWS_AS(basic_signed(triple_b(1, 1, -1)), InvalidTriple);
}

TEST_CASE("basic signed permutations follow the placement recipe") {
    for (const auto& t : enumerate_basic(6)) {
        const auto w = basic_signed(t);
        CHECK_MESSAGE(w.str() == sp(recipe(t.k, t.p, t.q)).str(), t.str());
        CHECK(w.length() == basic_length(t));
        CHECK(rank_B(w, t.p, t.q) == t.k);
        CHECK(basic_signed(basic_inverse(t)) == w.inverse().padded(std::max(w.size(), basic_signed(basic_inverse(t)).size())));
    }
}

TEST_CASE("basic signed permutations are rank minimal on W_4") {
    const oracle::SignedOrder order(4);
    for (const auto& t : enumerate_basic(4)) {
        std::vector<oracle::Signed> at_least;
        for (const auto& x : order.elements())
            if (oracle::rank(x, t.p, t.q) >= t.k) at_least.push_back(x);
        std::vector<oracle::Signed> minimal;
        for (const auto& x : at_least) {
            bool is_min = true;
            for (const auto& y : at_least)
                if (y != x && order.leq(y, x)) is_min = false;
            if (is_min) minimal.push_back(x);
        }
        REQUIRE(minimal.size() == 1);
        CHECK(basic_signed(t).padded(4) == sp(minimal[0]));
    }
}

TEST_CASE("basic triple counts") {
    CHECK(enumerate_basic(2) == std::vector<BasicTriple>{triple_b(1, 1, 1), triple_b(1, 1, 2), triple_b(1, 2, -1),
                                                         triple_b(1, 2, 1), triple_b(1, 2, 2), triple_b(2, 1, 1)});
    CHECK(count_basic(1) == 1);
    CHECK(count_basic(4) == 44);
    for (int n = 1; n <= 6; ++n) CHECK(static_cast<long>(enumerate_basic(n).size()) == count_basic(n));
}

TEST_CASE("type A essential sets") {
    CHECK(sorted(essential_set_A(iota(sp({-2, 3, 1})))) == bs({{1, 3, -1}, {1, 1, 2}, {3, 0, -1}, {2, -2, 2}}, Flavor::ACentered));
    CHECK(essential_set_A(WindowPermutation::identity(-3, 3)).empty());
    CHECK(sorted(essential_set_A_small(parse_window("3 6 1 5 2 4"))) ==
          bs({{1, 2, 5}, {2, 2, 2}, {2, 4, 4}, {3, 4, 2}}, Flavor::ASmall));
}

TEST_CASE("type B essential sets") {
    CHECK(sorted(essential_set_B(sp({-2, 3, 1}))) == bs({{1, 3, -1}, {1, 1, 2}}));
    CHECK(essential_set_B(sp({4, 5, -3, 1, 2})) == bs({{3, 3, -2}}));
    CHECK(sorted(essential_set_B(sp({1, 5, -4, -3, 2}))) == bs({{3, 3, -2}, {2, 3, 3}}));
    CHECK(sorted(essential_set_B(sp({-5, 6, 4, -3, -1, 2}))) ==
          bs({{2, 4, 1}, {3, 4, -2}, {4, 3, -4}, {1, 1, 5}, {2, 1, 3}, {3, 1, 1}}));
    CHECK(essential_set_B(SignedPermutation::identity(4)).empty());
    CHECK(essential_set(sp({-2, 3, 1}), BoardKind::B) == essential_set_B(sp({-2, 3, 1})));
}

TEST_CASE("type C essential sets of worked examples") {
    CHECK(sorted(essential_set_C(sp({1, 5, -4, -3, 2}))) == bs({{3, 3, -2}, {2, 3, 3}}));
    CHECK(essential_set_C(sp({-5, 6, 4, -3, -1, 2})).size() == 6);
}

TEST_CASE("essential set of a basic element is its triple") {
    for (const auto& t : enumerate_basic(4)) CHECK(essential_set_B(basic_signed(t)) == EssentialSet{t});
}

TEST_CASE("maximal basic elements below w") {
    CHECK(sorted(maximal_basic_below(sp({-2, 3, 1}))) == bs({{1, 3, -1}, {1, 1, 2}}));
    CHECK(maximal_basic_below(SignedPermutation::identity(3)).empty());
    CHECK(sorted(maximal_basic_below(sp({-5, 6, 4, -3, -1, 2}))) ==
          bs({{2, 4, 1}, {3, 4, -2}, {4, 3, -4}, {1, 1, 5}, {2, 1, 3}, {3, 1, 1}}));
    const BasicCatalog catalog(3);
    for (const auto& w : enumerate_W(3)) CHECK(sorted(maximal_basic_below(catalog, w)) == sorted(essential_set_B(w)));
}

TEST_CASE("dissecting elements") {
    CHECK(dissecting_u(triple_b(1, 1, 1), 2) == sp({2, 1}));
    CHECK_THROWS(dissecting_u(triple_b(2, 2, 3), 3));
    const oracle::SignedOrder order(3);
    for (const auto& t : enumerate_basic(3)) {
        const auto u = dissecting_u(t, 3);
        const auto w = basic_signed(t).padded(3);
        for (const auto& x : order.elements()) {
            const bool above = order.leq(oracle::Signed(w.window().begin(), w.window().end()), x);
            const bool below = order.leq(x, oracle::Signed(u.window().begin(), u.window().end()));
            CHECK(above != below);
        }
    }
    CHECK(dissecting_t_A(triple_small(1, 2, 5), 6).str() == "5 4 6 3 2 1");
    CHECK(dissecting_t_A(triple_small(2, 2, 2), 6).str() == "6 2 5 4 3 1");
    CHECK(dissecting_t_A(triple_small(2, 4, 4), 6).str() == "6 4 3 2 5 1");
    CHECK(dissecting_t_A(triple_small(3, 4, 2), 6).str() == "6 5 2 1 4 3");
}

TEST_CASE("minimal elements not below via dissecting elements") {
    const auto v = parse_window("4 2 5 1 6 3");
    auto image = rwy_via_bijection(v);
    std::sort(image.begin(), image.end());
    std::vector<std::string> strs;
    for (const auto& x : image) strs.push_back(x.str());
    CHECK(strs == std::vector<std::string>{"1 2 3 6 4 5", "1 3 4 5 2 6", "1 5 2 3 4 6", "3 4 1 2 5 6"});
    CHECK(image == minimal_not_below(v));
    for (const auto& w : enumerate_W(3)) {
        auto img = rwy_via_bijection(w);
        std::sort(img.begin(), img.end());
        CHECK(img == minimal_not_below(w));
    }
}

TEST_CASE("type A comparison of basic elements") {
    const auto t = triple_b(3, 2, 2);
    const auto tp = triple_b(4, 2, -1);
    CHECK(leq_B(basic_signed(t), basic_signed(tp)));
    CHECK(classify_exception(t, tp) == LemmaCase::CaseI);
    CHECK(lemma_case_name(LemmaCase::CaseI) == "case-i");
    const auto cat = enumerate_basic(4);
    for (const auto& a : cat)
        for (const auto& b : cat) {
            CHECK(basic_leq_via_typeA(a, b) == leq_B(basic_signed(a), basic_signed(b)));
            CHECK(classify_exception(a, b) != LemmaCase::Unexplained);
        }
}

TEST_CASE("base is the set of basic elements") {
    for (int n : {2, 3}) {
        auto base = base_of(n);
        std::vector<SignedPermutation> basics;
        for (const auto& t : enumerate_basic(n)) basics.push_back(basic_signed(t).padded(n));
        std::sort(base.begin(), base.end());
        std::sort(basics.begin(), basics.end());
        CHECK(base == basics);
    }
    CHECK(base_of(2).size() == 6);
    CHECK(base_of(3).size() == 19);
}

TEST_CASE("essential json") {
    CHECK(essential_json(sp({-2, 3, 1}), BoardKind::B) ==
          R"({"w":[-2,3,1],"type":"B","essential":[{"k":1,"p":1,"q":2},{"k":1,"p":3,"q":-1}]})");
    CHECK_THROWS(essential_json(sp({1}), BoardKind::A));
}
