#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "signedperm/diagram.hpp"
#include "signedperm/field.hpp"
#include "signedperm/permutation.hpp"

namespace signedperm {

/// Matrix of an isotropic flag: column labels -n..-1, rows labelled like the
/// board of the same kind (B: -n..n, C: -n..-1, 1..n).
///
/// build_cell gives the echelon form: column b carries a pivot 1 in row w(b),
/// zeros below it and in the pivot rows of the columns to its left. Free
/// entries sit on the boxes of D(w); the remaining unstruck boxes (the crossed
/// ones) are solved so that the columns are isotropic and pairwise orthogonal:
///   B: <x, y> = sum_i x_i y_{-i}                     (symmetric)
///   C: <x, y> = sum_{i>0} x_{-i} y_i - x_i y_{-i}    (alternating)
class CellMatrix {
public:
    using Elem = PrimeField::Elem;

    BoardKind kind() const noexcept { return kind_; }
    int n() const noexcept { return n_; }
    const PrimeField& field() const noexcept { return field_; }
    const std::vector<int>& rows() const noexcept { return rows_; }
    const std::vector<int>& cols() const noexcept { return cols_; }

    Elem at(int row, int col) const;
    /// Pivot row of each column, left to right.
    const std::vector<int>& pivot_rows() const noexcept { return pivot_rows_; }
    /// Row-major; free_values passed to build_cell follow this order.
    const BoxSet& free_positions() const noexcept { return free_; }
    const BoxSet& forced_positions() const noexcept { return forced_; }

    /// Value of the bilinear form on two columns.
    Elem pairing(int col_a, int col_b) const;

    std::string str() const;

private:
    friend CellMatrix build_cell(const SignedPermutation&, BoardKind, const PrimeField&, std::span<const PrimeField::Elem>);
    friend CellMatrix build_locus_cell(const SignedPermutation&, BoardKind, const PrimeField&,
                                       std::span<const PrimeField::Elem>);

    CellMatrix(BoardKind kind, int n, PrimeField field);
    std::size_t offset(int row, int col) const;
    Elem& ref(int row, int col) { return entries_[offset(row, col)]; }
    int form(int a, int b) const noexcept;

    BoardKind kind_;
    int n_;
    PrimeField field_;
    std::vector<int> rows_;
    std::vector<int> cols_;
    std::vector<Elem> entries_;
    std::vector<int> pivot_rows_;
    BoxSet free_;
    BoxSet forced_;
};

/// Builds the cell representative column by column; forced entries are solved
/// bottom-up, each from a single linear equation whose unknown has a pivot
/// coefficient. Throws std::invalid_argument if free_values has the wrong size
/// and InvariantViolation if the finished columns are not isotropic.
CellMatrix build_cell(const SignedPermutation& w, BoardKind kind, const PrimeField& field,
                      std::span<const PrimeField::Elem> free_values);

/// Free values drawn uniformly from the field.
CellMatrix build_random_cell(const SignedPermutation& w, BoardKind kind, const PrimeField& field, std::mt19937_64& rng);

/// Point of the locus where every corner nullity equals rank_B(w, p, q): the
/// echelon cell of w0 * w with its rows reversed (row a becomes row -a). Pivots
/// sit in rows w(b) with zeros above them; there are n^2 - length(w) free
/// entries, consumed in the order of free_positions (the echelon order of
/// w0 * w, so not row-major).
CellMatrix build_locus_cell(const SignedPermutation& w, BoardKind kind, const PrimeField& field,
                            std::span<const PrimeField::Elem> free_values);
CellMatrix build_random_locus_cell(const SignedPermutation& w, BoardKind kind, const PrimeField& field,
                                   std::mt19937_64& rng);

/// Nullity of the submatrix on columns -n..-p and rows strictly above q
/// (rows -n..q-1; row 0 does not exist for kind C).
int corner_nullity(const CellMatrix& m, int p, int q);

struct RankViolation {
    SignedPermutation w;
    SignedPermutation wprime;
    std::uint64_t seed = 0;
    int p = 0;
    int q = 0;
    long expected = 0;
    long got = 0;
};

struct MatrixReport {
    std::string check;
    std::uint64_t seed = 0;
    long samples = 0;
    long checks = 0;
    std::vector<RankViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
    /// One JSON line per violation, then a summary record.
    std::string json_lines() const;
};

/// For each sample s (seed + s), the locus cell of w has corner_nullity equal
/// to rank_B at every (p, q). Also checks that the echelon cell has length(w)
/// free entries and the locus cell n^2 - length(w).
MatrixReport verify_rank_function(const SignedPermutation& w, BoardKind kind, const PrimeField& field, int samples,
                                  std::uint64_t seed);

/// For each sampled point A of the locus cell of wprime, the three verdicts
///   A meets Null >= k for every essential (k, p, q) of w,
///   A meets Null >= rank_B(w, p, q) for every (p, q),
///   w <= wprime,
/// coincide. A violation records expected = Bruhat verdict, got = essential
/// verdict (p, q of the first failed condition), or got = full verdict with
/// p = q = 0 when the two nullity verdicts disagree.
MatrixReport verify_theorem_A(const SignedPermutation& w, const SignedPermutation& wprime, BoardKind kind,
                              const PrimeField& field, int samples, std::uint64_t seed);

/// For every essential (k0, p0, q0) of w, sampled points of the cell of
/// dissecting_u((k0, p0, q0), n) (locus cells) fail that condition and meet all others.
MatrixReport verify_minimality_witness(const SignedPermutation& w, BoardKind kind, const PrimeField& field,
                                       int samples, std::uint64_t seed);

} // namespace signedperm
