#include "signedperm/diagram.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "signedperm/errors.hpp"

namespace signedperm {

using ordered_json = nlohmann::ordered_json;

Board::Board(const WindowPermutation& v) : kind_(BoardKind::A), n_(v.hi()), window_(v) {
    for (int i = v.lo(); i <= v.hi(); ++i) {
        rows_.push_back(i);
        cols_.push_back(i);
    }
    cells_.assign(rows_.size() * cols_.size(), {});
    for (int b : cols_) cells_[offset(v(b), b)].dot = true;
    mark_struck();
}

Board::Board(const SignedPermutation& w, BoardKind kind) : kind_(kind), n_(w.size()), signed_(w) {
    if (kind == BoardKind::A) throw std::invalid_argument("kind A boards need an ordinary permutation; use iota(w)");
    for (int a = -n_; a <= n_; ++a)
        if (a != 0 || kind == BoardKind::B) rows_.push_back(a);
    for (int b = -n_; b <= -1; ++b) cols_.push_back(b);
    cells_.assign(rows_.size() * cols_.size(), {});
    for (int b : cols_) {
        cells_[offset(w(b), b)].dot = true;
        for (int i : cols_) {
            bool reaches = kind == BoardKind::B ? i <= b : i < b;
            if (reaches) cells_[offset(-w(i), b)].crossed = true;
        }
    }
    mark_struck();
}

std::size_t Board::offset(int row, int col) const {
    auto r = std::lower_bound(rows_.begin(), rows_.end(), row);
    auto c = std::lower_bound(cols_.begin(), cols_.end(), col);
    if (r == rows_.end() || *r != row || c == cols_.end() || *c != col)
        throw RangeError("cell (" + std::to_string(row) + "," + std::to_string(col) + ") is off the board");
    return static_cast<std::size_t>(r - rows_.begin()) * cols_.size() + static_cast<std::size_t>(c - cols_.begin());
}

void Board::mark_struck() {
    // A cell is struck when it lies weakly south of the dot in its column or
    // weakly east of a dot in its row.
    for (int b : cols_) {
        int dot_row = 0;
        for (int a : rows_)
            if (cells_[offset(a, b)].dot) dot_row = a;
        for (int a : rows_) {
            if (a < dot_row) continue;
            cells_[offset(a, b)].struck = true;
            if (a == dot_row)
                for (int c : cols_)
                    if (c >= b) cells_[offset(a, c)].struck = true;
        }
    }
}

bool Board::contains(int row, int col) const noexcept {
    return std::binary_search(rows_.begin(), rows_.end(), row) && std::binary_search(cols_.begin(), cols_.end(), col);
}

CellFlags Board::flags(int row, int col) const { return cells_[offset(row, col)]; }

std::optional<int> Board::row_below(int row) const noexcept {
    auto it = std::upper_bound(rows_.begin(), rows_.end(), row);
    if (it == rows_.end()) return std::nullopt;
    return *it;
}

std::optional<int> Board::col_right(int col) const noexcept {
    auto it = std::upper_bound(cols_.begin(), cols_.end(), col);
    if (it == cols_.end()) return std::nullopt;
    return *it;
}

bool Board::in_extended(int row, int col) const noexcept {
    if (!contains(row, col)) return false;
    return !cells_[offset(row, col)].struck;
}

bool Board::in_diagram(int row, int col) const noexcept {
    if (!contains(row, col)) return false;
    const auto& f = cells_[offset(row, col)];
    return !f.struck && !f.crossed;
}

BoxSet diagram(const Board& b) {
    BoxSet out;
    for (int r : b.rows())
        for (int c : b.cols())
            if (b.in_diagram(r, c)) out.push_back({r, c});
    return out;
}

BoxSet extended_diagram(const Board& b) {
    BoxSet out;
    for (int r : b.rows())
        for (int c : b.cols())
            if (b.in_extended(r, c)) out.push_back({r, c});
    return out;
}

BoxSet se_corners(const Board& b) {
    BoxSet out;
    for (int r : b.rows()) {
        for (int c : b.cols()) {
            if (!b.in_extended(r, c)) continue;
            auto below = b.row_below(r);
            auto right = b.col_right(c);
            if (below && b.in_extended(*below, c)) continue;
            if (right && b.in_extended(r, *right)) continue;
            out.push_back({r, c});
        }
    }
    return out;
}

bool is_corner_numeric(const WindowPermutation& v, int a, int b) {
    const auto inv = v.inverse();
    return inv(a) > b && v(b) > a && inv(a + 1) <= b && v(b + 1) <= a;
}

bool is_corner_descent(const WindowPermutation& v, int a, int b) {
    const auto inv = v.inverse();
    return v(b) > a && a >= v(b + 1) && inv(a) > b && b >= inv(a + 1);
}

RenderFormat parse_render_format(std::string_view name) {
    if (name == "ascii") return RenderFormat::Ascii;
    if (name == "svg") return RenderFormat::Svg;
    if (name == "json") return RenderFormat::Json;
    throw ParseError("unknown format '" + std::string(name) + "' (expected ascii, svg or json)");
}

BoardKind parse_board_kind(std::string_view name) {
    if (name == "a" || name == "A") return BoardKind::A;
    if (name == "b" || name == "B") return BoardKind::B;
    if (name == "c" || name == "C") return BoardKind::C;
    throw ParseError("unknown board kind '" + std::string(name) + "' (expected a, b or c)");
}

std::string board_kind_name(BoardKind kind) {
    switch (kind) {
    case BoardKind::A: return "A";
    case BoardKind::B: return "B";
    case BoardKind::C: return "C";
    }
    return "?";
}

namespace {

char ascii_symbol(const Board& b, int r, int c) {
    const auto f = b.flags(r, c);
    if (f.dot) return 'o';
    if (!f.struck) return f.crossed ? '+' : '#';
    return f.crossed ? 'x' : '.';
}

std::string render_ascii(const Board& b) {
    int width = 1;
    for (int r : b.rows()) width = std::max(width, static_cast<int>(std::to_string(r).size()));
    std::ostringstream os;
    os << std::string(width, ' ') << " |";
    for (int c : b.cols()) os << std::setw(3) << c;
    os << '\n';
    for (int r : b.rows()) {
        os << std::setw(width) << r << " |";
        for (int c : b.cols()) os << std::setw(3) << ascii_symbol(b, r, c);
        os << '\n';
    }
    return os.str();
}

ordered_json cells_json(const BoxSet& cells) {
    ordered_json arr = ordered_json::array();
    for (const auto& cell : cells) arr.push_back({cell.row, cell.col});
    return arr;
}

ordered_json board_json(const Board& b) {
    BoxSet dots;
    BoxSet crossed;
    for (int r : b.rows())
        for (int c : b.cols()) {
            auto f = b.flags(r, c);
            if (f.dot) dots.push_back({r, c});
            if (f.crossed) crossed.push_back({r, c});
        }
    ordered_json j;
    j["kind"] = board_kind_name(b.kind());
    j["n"] = b.n();
    j["dots"] = cells_json(dots);
    j["crossed"] = cells_json(crossed);
    j["diagram"] = cells_json(diagram(b));
    j["extended"] = cells_json(extended_diagram(b));
    j["corners"] = cells_json(se_corners(b));
    return j;
}

std::string render_svg(const Board& b) {
    constexpr int cell = 20;
    constexpr int margin = 30;
    const int width = margin + cell * static_cast<int>(b.cols().size()) + 10;
    const int height = margin + cell * static_cast<int>(b.rows().size()) + 10;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    for (std::size_t ci = 0; ci < b.cols().size(); ++ci)
        os << "  <text x=\"" << margin + cell * ci + cell / 2 << "\" y=\"" << margin - 8
           << "\" font-size=\"10\" text-anchor=\"middle\">" << b.cols()[ci] << "</text>\n";
    for (std::size_t ri = 0; ri < b.rows().size(); ++ri) {
        const int r = b.rows()[ri];
        const int y = margin + cell * static_cast<int>(ri);
        os << "  <text x=\"" << margin - 6 << "\" y=\"" << y + cell / 2 + 4
           << "\" font-size=\"10\" text-anchor=\"end\">" << r << "</text>\n";
        for (std::size_t ci = 0; ci < b.cols().size(); ++ci) {
            const int c = b.cols()[ci];
            const int x = margin + cell * static_cast<int>(ci);
            auto f = b.flags(r, c);
            os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
               << "\" fill=\"" << (f.struck ? "lightgray" : "white") << "\" stroke=\"black\"/>\n";
            if (f.dot)
                os << "  <circle cx=\"" << x + cell / 2 << "\" cy=\"" << y + cell / 2 << "\" r=\"3\"/>\n";
            if (f.crossed)
                os << "  <text x=\"" << x + 3 << "\" y=\"" << y + cell - 4 << "\" font-size=\"9\">&#215;</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

BoxSet cells_from_json(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("board json: missing array '") + key + "'");
    BoxSet out;
    for (const auto& e : j[key]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError(std::string("board json: '") + key + "' entries must be [row, col] integer pairs");
        out.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return out;
}

} // namespace

std::string render(const Board& b, RenderFormat format) {
    switch (format) {
    case RenderFormat::Ascii: return render_ascii(b);
    case RenderFormat::Svg: return render_svg(b);
    case RenderFormat::Json: return board_json(b).dump(2) + "\n";
    }
    throw ParseError("unknown render format");
}

Board board_from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("board json: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("board json: top level must be an object");
    if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("board json: missing string 'kind'");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("board json: missing integer 'n'");
    const BoardKind kind = parse_board_kind(j["kind"].get<std::string>());
    const BoxSet dots = cells_from_json(j, "dots");
    for (const char* key : {"crossed", "diagram", "extended", "corners"}) cells_from_json(j, key);
    if (dots.empty()) throw ParseError("board json: no dots");

    std::optional<Board> rebuilt;
    try {
        if (kind == BoardKind::A) {
            BoxSet by_col = dots;
            std::sort(by_col.begin(), by_col.end(), [](const Cell& x, const Cell& y) { return x.col < y.col; });
            std::vector<int> values;
            for (const auto& d : by_col) values.push_back(d.row);
            rebuilt.emplace(WindowPermutation(by_col.front().col, values));
        } else {
            const int n = j["n"].get<int>();
            if (static_cast<int>(dots.size()) != n) throw ParseError("board json: expected one dot per column");
            std::vector<int> window(n, 0);
            for (const auto& d : dots) {
                if (d.col >= 0 || d.col < -n) throw ParseError("board json: dot column out of range");
                window[-d.col - 1] = -d.row;
            }
            rebuilt.emplace(SignedPermutation(window), kind);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("board json: inconsistent dots: ") + e.what());
    }
    if (board_json(*rebuilt) != j) throw ParseError("board json: derived fields do not match the dots");
    return *rebuilt;
}

} // namespace signedperm
