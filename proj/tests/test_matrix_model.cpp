#include "doctest.h"

#include <random>
#include <stdexcept>

#include "signedperm/bruhat.hpp"
#include "signedperm/cell_matrix.hpp"
#include "signedperm/errors.hpp"
#include "signedperm/essential.hpp"
#include "signedperm/field.hpp"

using namespace signedperm;

namespace {

SignedPermutation sp(std::vector<int> v) { return SignedPermutation(std::move(v)); }

constexpr std::int64_t kP = 10007;

// Rank mod kP with plain 64-bit arithmetic, independent of PrimeField.
int rank_mod(std::vector<std::vector<std::int64_t>> m) {
    auto pw = [](std::int64_t a, std::int64_t e) {
        std::int64_t r = 1;
        a %= kP;
        for (; e; e >>= 1, a = a * a % kP)
            if (e & 1) r = r * a % kP;
        return r;
    };
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] % kP) piv = r;
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        const std::int64_t inv = pw(m[rank][c], kP - 2);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const std::int64_t f = m[r][c] * inv % kP;
            for (int j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - f * m[rank][j]) % kP + kP) % kP;
        }
        ++rank;
    }
    return rank;
}

int nullity_oracle(const CellMatrix& m, int p, int q) {
    std::vector<std::vector<std::int64_t>> sub;
    for (int r : m.rows()) {
        if (r >= q) continue;
        std::vector<std::int64_t> row;
        for (int c = -m.n(); c <= -p; ++c) row.push_back(m.at(r, c));
        sub.push_back(row);
    }
    const int cols = m.n() - p + 1;
    return cols - (sub.empty() ? 0 : rank_mod(sub));
}

// Form value computed from the entries: B symmetric, C alternating.
std::int64_t form_oracle(const CellMatrix& m, int a, int b) {
    std::int64_t s = 0;
    for (int i = 1; i <= m.n(); ++i) {
        const std::int64_t x = std::int64_t{m.at(-i, a)} * m.at(i, b) % kP;
        const std::int64_t y = std::int64_t{m.at(i, a)} * m.at(-i, b) % kP;
        s += m.kind() == BoardKind::B ? x + y : x - y;
    }
    if (m.kind() == BoardKind::B) s += std::int64_t{m.at(0, a)} * m.at(0, b) % kP;
    return ((s % kP) + kP) % kP;
}

} // namespace

TEST_CASE("prime field") {
    CHECK_THROWS_AS(PrimeField(2), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    const PrimeField f(7);
    CHECK(f.mul(3, f.inv(3)) == 1);
    CHECK(f.reduce(-1) == 6);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK(f.rank({1, 2, 2, 4}, 2, 2) == 1);
    CHECK(f.rank({1, 0, 0, 1}, 2, 2) == 2);
    CHECK(f.rank({}, 0, 3) == 0);
    CHECK(PrimeField(10007).pow(5, 10006) == 1);
}

TEST_CASE("echelon cell of the small example") {
    const PrimeField field(10007);
    const auto w = sp({-2, 3, 1});
    const std::vector<PrimeField::Elem> free = {5, 7, 11};
    const auto m = build_cell(w, BoardKind::B, field, free);
    CHECK(m.pivot_rows() == std::vector<int>{-1, -3, 2});
    CHECK(m.free_positions() == diagram(Board(w, BoardKind::B)));
    // forced entries: D+ minus D
    CHECK(m.forced_positions() == BoxSet{{-2, -1}, {1, -1}});
    for (std::size_t i = 0; i < free.size(); ++i)
        CHECK(m.at(m.free_positions()[i].row, m.free_positions()[i].col) == free[i]);
    for (int a = -3; a <= -1; ++a)
        for (int c = -3; c <= -1; ++c) {
            CHECK(m.pairing(a, c) == 0);
            CHECK(form_oracle(m, a, c) == 0);
        }
    CHECK_FALSE(m.str().empty());
}

TEST_CASE("echelon cells are isotropic and have length(w) free entries") {
    const PrimeField field(10007);
    std::mt19937_64 rng(3);
    for (BoardKind kind : {BoardKind::B, BoardKind::C})
        for (const auto& w : enumerate_W(3)) {
            const auto m = build_random_cell(w, kind, field, rng);
            CHECK(static_cast<int>(m.free_positions().size()) == w.length());
            for (int a = -3; a <= -1; ++a)
                for (int c = -3; c <= -1; ++c) CHECK(form_oracle(m, a, c) == 0);
        }
}

TEST_CASE("echelon cell edge cases") {
    const PrimeField field(10007);
    const auto id = build_cell(SignedPermutation::identity(3), BoardKind::B, field, {});
    CHECK(id.free_positions().empty());
    CHECK(id.forced_positions().empty());
    const auto w = sp({-2, 3, 1});
    const std::vector<PrimeField::Elem> zeros(3, 0);
    const auto z = build_cell(w, BoardKind::B, field, zeros);
    for (const auto& c : z.forced_positions()) CHECK(z.at(c.row, c.col) == 0);
    const std::vector<PrimeField::Elem> two(2, 1);
    CHECK_THROWS_AS(build_cell(w, BoardKind::B, field, two), std::invalid_argument);
    CHECK_THROWS(build_cell(w, BoardKind::A, field, zeros));
}

TEST_CASE("echelon nullities do not follow rank_B: smallest instance") {
    // n = 1, w = -1: one free entry above the pivot; generic value gives
    // nullity 0 at (1, 0) while rank_B is 1. The locus cell gets it right.
    const PrimeField field(10007);
    const auto w = sp({-1});
    const std::vector<PrimeField::Elem> one = {1};
    const auto echelon = build_cell(w, BoardKind::B, field, one);
    CHECK(corner_nullity(echelon, 1, 0) == 0);
    CHECK(rank_B(w, 1, 0) == 1);
    const auto locus = build_locus_cell(w, BoardKind::B, field, {});
    CHECK(corner_nullity(locus, 1, 0) == 1);
}

TEST_CASE("locus cell nullities equal rank_B") {
    const PrimeField field(10007);
    std::mt19937_64 rng(11);
    SUBCASE("worked examples") {
        const auto a = build_random_locus_cell(sp({-2, 3, 1}), BoardKind::B, field, rng);
        CHECK(corner_nullity(a, 3, -1) == 1);
        const auto b = build_random_locus_cell(sp({-5, 6, 4, -3, -1, 2}), BoardKind::B, field, rng);
        CHECK(corner_nullity(b, 4, 1) == 2);
        CHECK(corner_nullity(b, 3, -4) == 4);
        CHECK(corner_nullity(b, 1, -6) == 6);
    }
    SUBCASE("exhaustive on W_3") {
        for (BoardKind kind : {BoardKind::B, BoardKind::C})
            for (const auto& w : enumerate_W(3)) {
                const auto m = build_random_locus_cell(w, kind, field, rng);
                CHECK(static_cast<int>(m.free_positions().size()) == 9 - w.length());
                for (int p = 1; p <= 3; ++p)
                    for (int q = -3; q <= 3; ++q) {
                        if (kind == BoardKind::C && q == 0) continue;
                        const int expected = rank_B(w, p, q);
                        CHECK(corner_nullity(m, p, q) == expected);
                        CHECK(nullity_oracle(m, p, q) == expected);
                    }
                for (int a = -3; a <= -1; ++a)
                    for (int c = -3; c <= -1; ++c) CHECK(form_oracle(m, a, c) == 0);
            }
    }
}

TEST_CASE("rank function reports") {
    const PrimeField field(10007);
    const auto r = verify_rank_function(sp({-2, 3, 1}), BoardKind::B, field, 5, 42);
    CHECK(r.ok());
    CHECK(r.samples == 5);
    CHECK(r.checks > 0);
    CHECK(r.json_lines().find("\"violations\":0") != std::string::npos);
    const auto again = verify_rank_function(sp({-2, 3, 1}), BoardKind::B, field, 5, 42);
    CHECK(again.json_lines() == r.json_lines());
    CHECK(verify_rank_function(sp({2, -3, 1}), BoardKind::C, field, 5, 1).ok());
}

TEST_CASE("nullity verdicts match Bruhat order on small pairs") {
    const PrimeField field(10007);
    const auto w0 = SignedPermutation::longest(3);
    const auto id = SignedPermutation::identity(3);
    const auto w = sp({-2, 3, 1});
    CHECK(verify_theorem_A(w, w0, BoardKind::B, field, 3, 0).ok());
    CHECK(verify_theorem_A(w, id, BoardKind::B, field, 3, 0).ok());
    CHECK(verify_theorem_A(id, w, BoardKind::B, field, 3, 0).ok());
    CHECK(verify_theorem_A(w, w, BoardKind::B, field, 3, 0).ok());
    for (const auto& x : enumerate_W(2))
        for (const auto& y : enumerate_W(2)) CHECK(verify_theorem_A(x, y, BoardKind::B, field, 2, 7).ok());
}

TEST_CASE("minimality witnesses") {
    const PrimeField field(10007);
    CHECK(verify_minimality_witness(sp({-2, 3, 1}), BoardKind::B, field, 3, 0).ok());
    CHECK(verify_minimality_witness(sp({-5, 6, 4, -3, -1, 2}), BoardKind::B, field, 2, 0).ok());
}
