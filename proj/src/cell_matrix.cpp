#include "signedperm/cell_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "signedperm/bruhat.hpp"
#include "signedperm/errors.hpp"
#include "signedperm/essential.hpp"

namespace signedperm {

CellMatrix::CellMatrix(BoardKind kind, int n, PrimeField field) : kind_(kind), n_(n), field_(field) {}

std::size_t CellMatrix::offset(int row, int col) const {
    auto r = std::lower_bound(rows_.begin(), rows_.end(), row);
    auto c = std::lower_bound(cols_.begin(), cols_.end(), col);
    if (r == rows_.end() || *r != row || c == cols_.end() || *c != col)
        throw RangeError("entry (" + std::to_string(row) + "," + std::to_string(col) + ") is off the matrix");
    return static_cast<std::size_t>(r - rows_.begin()) * cols_.size() + static_cast<std::size_t>(c - cols_.begin());
}

CellMatrix::Elem CellMatrix::at(int row, int col) const { return entries_[offset(row, col)]; }

int CellMatrix::form(int a, int b) const noexcept {
    if (a != -b) return 0;
    if (kind_ == BoardKind::B) return 1;
    if (a == 0) return 0;
    return a < 0 ? 1 : -1;
}

CellMatrix::Elem CellMatrix::pairing(int col_a, int col_b) const {
    Elem sum = 0;
    for (int i : rows_) {
        if (!std::binary_search(rows_.begin(), rows_.end(), -i)) continue;
        const int f = form(i, -i);
        if (f == 0) continue;
        const Elem term = field_.mul(at(i, col_a), at(-i, col_b));
        sum = f > 0 ? field_.add(sum, term) : field_.sub(sum, term);
    }
    return sum;
}

std::string CellMatrix::str() const {
    std::ostringstream os;
    for (int r : rows_) {
        os << r << ":";
        for (int c : cols_) os << ' ' << at(r, c);
        os << '\n';
    }
    return os.str();
}

CellMatrix build_cell(const SignedPermutation& w, BoardKind kind, const PrimeField& field,
                      std::span<const PrimeField::Elem> free_values) {
    if (kind == BoardKind::A) throw std::invalid_argument("cell matrices exist for kinds B and C only");
    const Board board(w, kind);
    CellMatrix m(kind, w.size(), field);
    m.rows_ = board.rows();
    m.cols_ = board.cols();
    m.entries_.assign(m.rows_.size() * m.cols_.size(), 0);
    m.free_ = diagram(board);
    for (const auto& cell : extended_diagram(board))
        if (!board.in_diagram(cell.row, cell.col)) m.forced_.push_back(cell);
    if (free_values.size() != m.free_.size())
        throw std::invalid_argument("expected " + std::to_string(m.free_.size()) + " free values, got " +
                                    std::to_string(free_values.size()));
    for (std::size_t i = 0; i < m.free_.size(); ++i) m.ref(m.free_[i].row, m.free_[i].col) = free_values[i] % field.modulus();

    auto column_with_pivot = [&](int row) {
        for (int c : m.cols_)
            if (w(c) == row) return c;
        throw InvariantViolation("no column has pivot row " + std::to_string(row));
    };

    for (int b : m.cols_) {
        const int pivot = w(b);
        m.pivot_rows_.push_back(pivot);
        m.ref(pivot, b) = 1;
        std::vector<int> unknown;
        for (const auto& cell : m.forced_)
            if (cell.col == b) unknown.push_back(cell.row);
        std::sort(unknown.rbegin(), unknown.rend());
        for (int x : unknown) {
            const int partner = column_with_pivot(-x);
            if (m.at(-x, partner) != 1) throw InvariantViolation("pivot entry is not 1");
            const int f = m.form(x, -x);
            if (f == 0) throw InvariantViolation("forced entry in a row the form ignores");
            m.ref(x, b) = 0;
            PrimeField::Elem rest = m.pairing(b, partner);
            PrimeField::Elem coef = field.reduce(f);
            if (partner == b) {
                // <c,c> counts the pair (x, -x) twice
                coef = field.add(coef, field.reduce(m.form(-x, x)));
            }
            if (coef == 0) throw InvariantViolation("forced entry has zero coefficient");
            m.ref(x, b) = field.mul(field.neg(rest), field.inv(coef));
        }
    }

    for (std::size_t j = 0; j < m.cols_.size(); ++j)
        for (std::size_t i = 0; i <= j; ++i)
            if (m.pairing(m.cols_[j], m.cols_[i]) != 0)
                throw InvariantViolation("columns " + std::to_string(m.cols_[i]) + " and " + std::to_string(m.cols_[j]) +
                                         " of the cell of " + w.str() + " are not orthogonal");
    return m;
}

CellMatrix build_random_cell(const SignedPermutation& w, BoardKind kind, const PrimeField& field, std::mt19937_64& rng) {
    const auto free_count = diagram(Board(w, kind)).size();
    std::uniform_int_distribution<std::uint32_t> dist(0, field.modulus() - 1);
    std::vector<PrimeField::Elem> values(free_count);
    for (auto& v : values) v = dist(rng);
    return build_cell(w, kind, field, values);
}

CellMatrix build_locus_cell(const SignedPermutation& w, BoardKind kind, const PrimeField& field,
                            std::span<const PrimeField::Elem> free_values) {
    const CellMatrix echelon =
        build_cell(compose(SignedPermutation::longest(w.size()), w), kind, field, free_values);
    CellMatrix m(kind, w.size(), field);
    m.rows_ = echelon.rows_;
    m.cols_ = echelon.cols_;
    m.entries_.assign(echelon.entries_.size(), 0);
    for (int r : m.rows_)
        for (int c : m.cols_) m.ref(r, c) = echelon.at(-r, c);
    for (int r : echelon.pivot_rows_) m.pivot_rows_.push_back(-r);
    for (const auto& cell : echelon.free_) m.free_.push_back({-cell.row, cell.col});
    for (const auto& cell : echelon.forced_) m.forced_.push_back({-cell.row, cell.col});
    return m;
}

CellMatrix build_random_locus_cell(const SignedPermutation& w, BoardKind kind, const PrimeField& field,
                                   std::mt19937_64& rng) {
    const int n = w.size();
    std::uniform_int_distribution<std::uint32_t> dist(0, field.modulus() - 1);
    std::vector<PrimeField::Elem> values(static_cast<std::size_t>(
        diagram(Board(compose(SignedPermutation::longest(n), w), kind)).size()));
    for (auto& v : values) v = dist(rng);
    return build_locus_cell(w, kind, field, values);
}

int corner_nullity(const CellMatrix& m, int p, int q) {
    const int n = m.n();
    if (p < 1 || p > n || q < -n || q > n)
        throw RangeError("corner_nullity(p=" + std::to_string(p) + ", q=" + std::to_string(q) + ") out of range");
    std::vector<int> rows;
    for (int r : m.rows())
        if (r < q) rows.push_back(r);
    const int cols = n - p + 1;
    std::vector<PrimeField::Elem> sub;
    sub.reserve(rows.size() * cols);
    for (int r : rows)
        for (int c = -n; c <= -p; ++c) sub.push_back(m.at(r, c));
    return cols - m.field().rank(std::move(sub), static_cast<int>(rows.size()), cols);
}

// ---------------------------------------------------------------------------

std::string MatrixReport::json_lines() const {
    std::string out;
    for (const auto& v : violations) {
        nlohmann::ordered_json j;
        j["w"] = std::vector<int>(v.w.window().begin(), v.w.window().end());
        j["wprime"] = std::vector<int>(v.wprime.window().begin(), v.wprime.window().end());
        j["seed"] = v.seed;
        j["p"] = v.p;
        j["q"] = v.q;
        j["expected"] = v.expected;
        j["got"] = v.got;
        out += j.dump() + "\n";
    }
    nlohmann::ordered_json s;
    s["summary"] = check;
    s["seed"] = seed;
    s["samples"] = samples;
    s["checks"] = checks;
    s["violations"] = violations.size();
    out += s.dump() + "\n";
    return out;
}

MatrixReport verify_rank_function(const SignedPermutation& w, BoardKind kind, const PrimeField& field, int samples,
                                  std::uint64_t seed) {
    MatrixReport report{"rank-function", seed, samples, 0, {}};
    const int n = w.size();
    for (int s = 0; s < samples; ++s) {
        std::mt19937_64 rng(seed + s);
        const CellMatrix echelon = build_random_cell(w, kind, field, rng);
        const CellMatrix m = build_random_locus_cell(w, kind, field, rng);
        report.checks += 2;
        if (static_cast<int>(echelon.free_positions().size()) != w.length())
            report.violations.push_back(
                {w, w, seed + s, 0, 0, w.length(), static_cast<long>(echelon.free_positions().size())});
        if (static_cast<int>(m.free_positions().size()) != n * n - w.length())
            report.violations.push_back(
                {w, w, seed + s, 0, 0, n * n - w.length(), static_cast<long>(m.free_positions().size())});
        for (int p = 1; p <= n; ++p)
            for (int q = -n; q <= n; ++q) {
                ++report.checks;
                const int expected = rank_B(w, p, q);
                const int got = corner_nullity(m, p, q);
                if (got != expected) report.violations.push_back({w, w, seed + s, p, q, expected, got});
            }
    }
    return report;
}

MatrixReport verify_theorem_A(const SignedPermutation& w, const SignedPermutation& wprime, BoardKind kind,
                              const PrimeField& field, int samples, std::uint64_t seed) {
    MatrixReport report{"theorem-a", seed, samples, 0, {}};
    const int n = std::max(w.size(), wprime.size());
    const SignedPermutation x = w.padded(n);
    const SignedPermutation y = wprime.padded(n);
    const EssentialSet ess = essential_set(x, kind);
    const bool below = leq_B(x, y);
    for (int s = 0; s < samples; ++s) {
        std::mt19937_64 rng(seed + s);
        const CellMatrix m = build_random_locus_cell(y, kind, field, rng);
        bool ess_ok = true;
        int fail_p = 0, fail_q = 0;
        for (const auto& t : ess)
            if (corner_nullity(m, t.p, t.q) < t.k) {
                ess_ok = false;
                fail_p = t.p;
                fail_q = t.q;
                break;
            }
        bool full_ok = true;
        for (int p = 1; p <= n && full_ok; ++p)
            for (int q = -n; q <= n; ++q)
                if (corner_nullity(m, p, q) < rank_B(x, p, q)) {
                    full_ok = false;
                    break;
                }
        ++report.checks;
        if (ess_ok != below) report.violations.push_back({x, y, seed + s, fail_p, fail_q, below, ess_ok});
        else if (full_ok != below) report.violations.push_back({x, y, seed + s, 0, 0, below, full_ok});
    }
    return report;
}

MatrixReport verify_minimality_witness(const SignedPermutation& w, BoardKind kind, const PrimeField& field,
                                       int samples, std::uint64_t seed) {
    MatrixReport report{"minimality-witness", seed, samples, 0, {}};
    const int n = w.size();
    const EssentialSet ess = essential_set(w, kind);
    for (const auto& t0 : ess) {
        const SignedPermutation u = dissecting_u(t0, n);
        for (int s = 0; s < samples; ++s) {
            std::mt19937_64 rng(seed + s);
            const CellMatrix m = build_random_locus_cell(u, kind, field, rng);
            for (const auto& t : ess) {
                ++report.checks;
                const int got = corner_nullity(m, t.p, t.q);
                const bool ok = t == t0 ? got < t.k : got >= t.k;
                if (!ok) report.violations.push_back({w, u, seed + s, t.p, t.q, t == t0 ? t.k - 1 : t.k, got});
            }
        }
    }
    return report;
}

} // namespace signedperm
