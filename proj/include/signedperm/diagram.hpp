#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "signedperm/permutation.hpp"

namespace signedperm {

/// A: ordinary permutation on its own interval (rows = columns).
/// B: (2n+1) x n, rows -n..n, columns -n..-1, crosses at a = -w(i), i <= b.
/// C: 2n x n, rows -n..-1,1..n, columns -n..-1, crosses at a = -w(i), i < b.
enum class BoardKind { A, B, C };

struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    /// Row-major: row, then column.
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

using BoxSet = std::vector<Cell>;

struct CellFlags {
    bool dot = false;
    bool crossed = false;
    bool struck = false;
};

/// Dot matrix of a permutation with strike-out and cross markings.
class Board {
public:
    /// Kind A board of an ordinary permutation.
    explicit Board(const WindowPermutation& v);
    /// Kind B or C board of a signed permutation.
    Board(const SignedPermutation& w, BoardKind kind);

    BoardKind kind() const noexcept { return kind_; }
    /// n for kinds B and C; for kind A the largest row label.
    int n() const noexcept { return n_; }
    const std::vector<int>& rows() const noexcept { return rows_; }
    const std::vector<int>& cols() const noexcept { return cols_; }

    bool contains(int row, int col) const noexcept;
    CellFlags flags(int row, int col) const;

    /// Next row label downward, skipping 0 for kind C; nullopt past the edge.
    std::optional<int> row_below(int row) const noexcept;
    std::optional<int> col_right(int col) const noexcept;

    /// Unstruck cells (the diagram D for kind A, D+ for kinds B and C).
    bool in_extended(int row, int col) const noexcept;
    /// Unstruck, uncrossed cells.
    bool in_diagram(int row, int col) const noexcept;

    /// The permutation the board was built from.
    const std::optional<SignedPermutation>& signed_source() const noexcept { return signed_; }
    const std::optional<WindowPermutation>& window_source() const noexcept { return window_; }

private:
    std::size_t offset(int row, int col) const;
    void mark_struck();

    BoardKind kind_;
    int n_;
    std::vector<int> rows_;
    std::vector<int> cols_;
    std::vector<CellFlags> cells_;
    std::optional<SignedPermutation> signed_;
    std::optional<WindowPermutation> window_;
};

inline Board board(const WindowPermutation& v) { return Board(v); }
inline Board board(const SignedPermutation& w, BoardKind kind) { return Board(w, kind); }

/// D(w): unstruck and uncrossed boxes, row-major.
BoxSet diagram(const Board& b);
/// D+(w): unstruck boxes, row-major.
BoxSet extended_diagram(const Board& b);
/// SE corners of the extended diagram (of the diagram, for kind A).
BoxSet se_corners(const Board& b);

/// Numeric corner criterion for kind A: v^-1(a) > b, v(b) > a,
/// v^-1(a+1) <= b, v(b+1) <= a.
bool is_corner_numeric(const WindowPermutation& v, int a, int b);
/// Double-descent form: v(b) > a >= v(b+1) and v^-1(a) > b >= v^-1(a+1).
bool is_corner_descent(const WindowPermutation& v, int a, int b);

enum class RenderFormat { Ascii, Svg, Json };

/// Throws ParseError for unknown names.
RenderFormat parse_render_format(std::string_view name);
BoardKind parse_board_kind(std::string_view name);
std::string board_kind_name(BoardKind kind);

/// ascii legend: o dot, # box of D, + box of D+ \ D, x struck crossed cell,
/// . struck plain cell. Rows run top (smallest label) to bottom.
std::string render(const Board& b, RenderFormat format);

/// Reads a board previously rendered as json. Validates the schema, rebuilds
/// the board from its dots and checks every derived field; throws ParseError
/// on any mismatch.
Board board_from_json(std::string_view text);

} // namespace signedperm
