#include "signedperm/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "signedperm/bruhat.hpp"
#include "signedperm/cell_matrix.hpp"
#include "signedperm/diagram.hpp"
#include "signedperm/errors.hpp"
#include "signedperm/essential.hpp"

namespace signedperm {

namespace {

constexpr std::size_t kMaxMessages = 20;

std::string triples_str(const EssentialSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i].str();
    return out + "}";
}

bool same_triples(const BasicTriple& a, const BasicTriple& b) { return a.k == b.k && a.p == b.p && a.q == b.q; }

bool contains_triple(const EssentialSet& s, const BasicTriple& t) {
    return std::any_of(s.begin(), s.end(), [&](const BasicTriple& x) { return same_triples(x, t); });
}

std::vector<SignedPermutation> basic_elements(int n) {
    std::vector<SignedPermutation> out;
    for (const auto& t : enumerate_basic(n)) out.push_back(basic_signed(t).padded(n));
    return out;
}

BoxSet restrict_to_negative_columns(const BoxSet& cells) {
    BoxSet out;
    for (const auto& c : cells)
        if (c.col < 0) out.push_back(c);
    return out;
}

} // namespace

void SuiteReport::fail(std::string message) {
    ++failures;
    if (messages.size() < kMaxMessages) messages.push_back(std::move(message));
    else if (messages.size() == kMaxMessages) messages.push_back("...");
}

std::string SuiteReport::str() const {
    std::ostringstream os;
    os << "suite " << name << ": " << (ok() ? "ok" : "FAIL") << " (checks " << checks << ", failures " << failures
       << ")\n";
    for (const auto& f : findings) os << "  finding: " << f << '\n';
    for (const auto& m : messages) os << "  " << m << '\n';
    return os.str();
}

SignedPermutation random_signed(int n, std::mt19937_64& rng) {
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(values[i], values[pick(rng)]);
    }
    std::bernoulli_distribution sign(0.5);
    for (auto& v : values)
        if (sign(rng)) v = -v;
    return SignedPermutation(values);
}

SuiteReport verify_ess_maximal(const std::vector<SignedPermutation>& elements) {
    SuiteReport r{"ess-maximal"};
    int n = 1;
    for (const auto& w : elements) n = std::max(n, w.size());
    const BasicCatalog catalog(n);
    for (const auto& w0 : elements) {
        const SignedPermutation w = w0.padded(n);
        const EssentialSet ess = essential_set_B(w);
        const EssentialSet brute = maximal_basic_below(catalog, w);
        ++r.checks;
        if (ess != brute) r.fail(w.str() + ": Ess " + triples_str(ess) + " vs maximal basic " + triples_str(brute));

        const EssentialSet ess_a = essential_set_A(iota(w));
        for (const auto& t : ess) {
            ++r.checks;
            if (!contains_triple(ess_a, t)) r.fail(w.str() + ": " + t.str() + " missing from Ess of iota(w)");
        }
        for (const auto& t : ess_a) {
            ++r.checks;
            if (!contains_triple(ess_a, reflect(t)))
                r.fail(w.str() + ": reflection of " + t.str() + " missing from Ess of iota(w)");
        }
    }
    return r;
}

SuiteReport verify_ess_maximal(int n) { return verify_ess_maximal(enumerate_W(n)); }

SuiteReport verify_sup(int n) {
    SuiteReport r{"sup"};
    const SignedBruhatPoset poset(n);
    for (const auto& w : poset.elements()) {
        std::vector<SignedPermutation> elems;
        for (const auto& t : essential_set_B(w)) elems.push_back(basic_signed(t).padded(n));
        ++r.checks;
        try {
            const SupremumResult s = supremum(poset, elems);
            if (!(s.value == w)) r.fail(w.str() + ": sup of Ess is " + s.value.str());
            else if (s.minimal_upper_bounds.size() != 1) r.fail(w.str() + ": minimal upper bound not unique");
        } catch (const NoSupremum& e) {
            r.fail(w.str() + ": " + e.what());
        }
    }
    return r;
}

SuiteReport verify_minimality(int n, ArgumentOrderReport* order) {
    SuiteReport r{"minimality"};
    const SignedBruhatPoset poset(n);
    ArgumentOrderReport counts;

    for (const auto& t : enumerate_basic(n)) {
        ++r.checks;
        const SignedPermutation u = dissecting_u(t, n);
        const SignedPermutation m = max_with_rank_below(poset, t);
        if (!(u == m)) r.fail("u" + t.str() + " = " + u.str() + " but the maximum with rank below is " + m.str());
    }

    std::unique_ptr<BasicCatalog> catalog;
    if (n <= 3) catalog = std::make_unique<BasicCatalog>(n);

    for (const auto& w : poset.elements()) {
        const EssentialSet ess = essential_set_B(w);
        for (const auto& t0 : ess) {
            const SignedPermutation u = dissecting_u(t0, n);
            ++counts.triples;
            if (rank_B(u, t0.p, t0.q) < t0.k) ++counts.pq_valid;
            if (t0.q >= 1 && t0.q <= n && t0.p >= -n && t0.p <= n) {
                if (rank_B(u, t0.q, t0.p) < t0.k) ++counts.qp_valid;
            } else {
                ++counts.qp_undefined;
            }
            for (const auto& t : ess) {
                if (t == t0) continue;
                ++r.checks;
                if (rank_B(u, t.p, t.q) < t.k)
                    r.fail(w.str() + ": dissecting element " + u.str() + " of " + t0.str() + " violates " + t.str());
            }

            std::vector<SignedPermutation> rest;
            for (const auto& t : ess)
                if (!(t == t0)) rest.push_back(basic_signed(t).padded(n));
            ++r.checks;
            try {
                if (supremum(poset, rest).value == w) r.fail(w.str() + ": Ess without " + t0.str() + " still has sup w");
            } catch (const NoSupremum&) {
            }
        }

        // any set of basic elements with supremum w contains Ess(w)
        if (!catalog) continue;
        const auto below = catalog->below(w);
        if (below.size() > 12) continue;
        for (unsigned mask = 0; mask < (1u << below.size()); ++mask) {
            std::vector<SignedPermutation> subset;
            EssentialSet chosen;
            for (std::size_t i = 0; i < below.size(); ++i)
                if (mask & (1u << i)) {
                    subset.push_back(catalog->elements()[below[i]].padded(n));
                    chosen.push_back(catalog->triples()[below[i]]);
                }
            try {
                if (!(supremum(poset, subset).value == w)) continue;
            } catch (const NoSupremum&) {
                continue;
            }
            ++r.checks;
            for (const auto& t : ess)
                if (!contains_triple(chosen, t)) {
                    r.fail(w.str() + ": basic set " + triples_str(chosen) + " has sup w but omits " + t.str());
                    break;
                }
        }
    }

    std::ostringstream f;
    f << "witness r_u(p0,q0) < k0 holds for " << counts.pq_valid << "/" << counts.triples
      << " essential triples; r_u(q0,p0) < k0 holds for " << counts.qp_valid << "/" << counts.triples << " ("
      << counts.qp_undefined << " undefined since q0 < 1)";
    r.findings.push_back(f.str());
    r.checks += counts.triples;
    if (counts.pq_valid != counts.triples && counts.qp_valid != counts.triples)
        r.fail("neither argument order validates every dissecting element");
    if (order) *order = counts;
    return r;
}

SuiteReport verify_base(int n) {
    SuiteReport r{"base"};
    const SignedBruhatPoset poset(n);
    const auto base = base_of(poset);
    auto expected = basic_elements(n);
    std::sort(expected.begin(), expected.end());
    ++r.checks;
    if (base != expected)
        r.fail("base has " + std::to_string(base.size()) + " elements, basic elements " +
               std::to_string(expected.size()));
    r.findings.push_back("base of W_" + std::to_string(n) + " has " + std::to_string(base.size()) + " elements");

    const auto& order = poset.order();
    for (const auto& t : enumerate_basic(n)) {
        const std::size_t wt = poset.index_of(basic_signed(t));
        const std::size_t u = poset.index_of(dissecting_u(t, n));
        for (std::size_t x = 0; x < poset.elements().size(); ++x) {
            ++r.checks;
            if (order.leq(wt, x) == order.leq(x, u))
                r.fail(t.str() + ": " + poset.elements()[x].str() + " is " +
                       (order.leq(wt, x) ? "in both halves" : "in neither half"));
        }
    }
    return r;
}

SuiteReport verify_counts(int n) {
    SuiteReport r{"counts"};
    for (int m = 1; m <= n; ++m) {
        ++r.checks;
        const auto size = static_cast<long>(enumerate_basic(m).size());
        if (size != count_basic(m))
            r.fail("n=" + std::to_string(m) + ": " + std::to_string(size) + " triples, formula " +
                   std::to_string(count_basic(m)));
    }
    for (const auto& t : enumerate_basic(n)) {
        const SignedPermutation w = basic_signed(t);
        r.checks += 5;
        if (basic_length(t) != w.length())
            r.fail(t.str() + ": length table " + std::to_string(basic_length(t)) + ", direct " +
                   std::to_string(w.length()));
        const BasicTriple inv = basic_inverse(t);
        const int m = std::max({n_min(inv), w.size()});
        if (!inv.valid() || !(basic_signed(inv).padded(m) == w.inverse().padded(m)))
            r.fail(t.str() + ": inverse formula gives " + inv.str());
        if (w.size() != n_min(t) || w(n_min(t)) == n_min(t))
            r.fail(t.str() + ": element " + w.str() + " does not need n_min = " + std::to_string(n_min(t)));
        if (rank_B(w, t.p, t.q) < t.k) r.fail(t.str() + ": rank below k");
        if (!is_bigrassmannian(w)) r.fail(t.str() + ": " + w.str() + " is not bigrassmannian");
    }

    const int dn = std::min(n, 5);
    for_each_W(dn, [&](const SignedPermutation& w) {
        for (auto kind : {BoardKind::B, BoardKind::C}) {
            ++r.checks;
            const auto size = static_cast<int>(diagram(Board(w, kind)).size());
            if (size != w.length())
                r.fail(w.str() + " kind " + board_kind_name(kind) + ": |D| = " + std::to_string(size) +
                       ", length " + std::to_string(w.length()));
        }
        ++r.checks;
        if (extended_diagram(Board(w, BoardKind::B)) != restrict_to_negative_columns(diagram(Board(iota(w)))))
            r.fail(w.str() + ": extended diagram differs from the diagram of iota(w) on columns < 0");
    });
    return r;
}

SuiteReport verify_bigrassmannian(int n, std::vector<SignedPermutation>* non_basic, long* bigrassmannian_count) {
    SuiteReport r{"bigrassmannian"};
    const auto basics = basic_elements(n);
    const std::set<SignedPermutation> basic_set(basics.begin(), basics.end());
    for (const auto& b : basics) {
        ++r.checks;
        if (!is_bigrassmannian(b)) r.fail(b.str() + " is basic but not bigrassmannian");
    }
    long count = 0;
    std::vector<SignedPermutation> extra;
    for_each_W(n, [&](const SignedPermutation& w) {
        if (!is_bigrassmannian(w)) return;
        ++count;
        if (!basic_set.count(w)) extra.push_back(w);
    });
    std::string list;
    for (const auto& w : extra) list += (list.empty() ? "" : ", ") + w.str();
    r.findings.push_back("W_" + std::to_string(n) + " has " + std::to_string(count) + " bigrassmannians, " +
                         std::to_string(extra.size()) + " not basic: " + (list.empty() ? "none" : list));
    if (non_basic) *non_basic = extra;
    if (bigrassmannian_count) *bigrassmannian_count = count;
    return r;
}

SuiteReport verify_rwy(int n, int sym_n) {
    SuiteReport r{"rwy"};
    const SignedBruhatPoset poset(n);
    for (const auto& w : poset.elements()) {
        auto got = rwy_via_bijection(w);
        std::sort(got.begin(), got.end());
        auto want = minimal_not_below(poset, w);
        std::sort(want.begin(), want.end());
        ++r.checks;
        if (got != want) r.fail(w.str() + ": bijection image differs from the minimal elements not below");
    }
    const SymmetricBruhatPoset sym(sym_n);
    for (const auto& v : sym.elements()) {
        auto got = rwy_via_bijection(v);
        std::sort(got.begin(), got.end());
        auto want = minimal_not_below(sym, v);
        std::sort(want.begin(), want.end());
        ++r.checks;
        if (got != want) r.fail(v.str() + ": bijection image differs from the minimal elements not below");
    }
    return r;
}

SuiteReport verify_lemma_compare(int n) {
    SuiteReport r{"lemma-compare"};
    const auto triples = enumerate_basic(n);
    std::vector<RankTable> tables;
    for (const auto& t : triples) tables.emplace_back(basic_signed(t).padded(n), n);
    long case_i = 0, case_ii = 0, invisible = 0;
    for (std::size_t a = 0; a < triples.size(); ++a)
        for (std::size_t b = 0; b < triples.size(); ++b) {
            const auto& t = triples[a];
            const auto& tp = triples[b];
            const bool direct = tables[a].dominated_by(tables[b]);
            ++r.checks;
            if (basic_leq_via_typeA(t, tp) != direct)
                r.fail(t.str() + " <= " + tp.str() + ": type A test disagrees with Bruhat order (direct " +
                       (direct ? "true" : "false") + ")");
            switch (classify_exception(t, tp)) {
            case LemmaCase::None: break;
            case LemmaCase::CaseI: ++case_i, ++invisible; break;
            case LemmaCase::CaseII: ++case_ii, ++invisible; break;
            case LemmaCase::Unexplained:
                ++invisible;
                r.fail(t.str() + " <= " + tp.str() + " holds but neither exception case explains it");
                break;
            }
        }
    r.findings.push_back(std::to_string(triples.size() * triples.size()) + " pairs; " + std::to_string(invisible) +
                         " comparisons invisible in type A: " + std::to_string(case_i) + " case-i, " +
                         std::to_string(case_ii) + " case-ii");
    return r;
}

SuiteReport verify_matrix_rank(int n, int samples, std::uint64_t seed, std::uint32_t modulus) {
    SuiteReport r{"matrix-rank"};
    const PrimeField field(modulus);
    auto absorb = [&](const MatrixReport& m) {
        r.checks += m.checks;
        if (m.ok()) return;
        std::istringstream lines(m.json_lines());
        for (std::string line; std::getline(lines, line);)
            if (line.rfind("{\"summary\"", 0) != 0) r.fail(line);
    };
    for_each_W(n, [&](const SignedPermutation& w) {
        try {
            absorb(verify_rank_function(w, BoardKind::B, field, samples, seed));
            absorb(verify_rank_function(w, BoardKind::C, field, samples, seed));
            absorb(verify_minimality_witness(w, BoardKind::B, field, samples, seed));
        } catch (const InvariantViolation& e) {
            r.fail(w.str() + ": " + e.what());
        }
    });
    return r;
}

SuiteReport verify_theorem_a(int n, int pairs, int samples, std::uint64_t seed, std::uint32_t modulus) {
    SuiteReport r{"theorem-a"};
    const PrimeField field(modulus);
    const auto elements = enumerate_W(n);
    std::vector<RankTable> tables;
    for (const auto& w : elements) tables.emplace_back(w, n);
    std::mt19937_64 rng(seed);
    long comparable = 0;
    for (int i = 0; i < pairs; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
        const std::size_t a = pick(rng);
        std::size_t b = pick(rng);
        if (i % 2 == 1) {
            // every other pair draws w' from the elements above w
            std::vector<std::size_t> above;
            for (std::size_t j = 0; j < elements.size(); ++j)
                if (tables[a].dominated_by(tables[j])) above.push_back(j);
            b = above[std::uniform_int_distribution<std::size_t>(0, above.size() - 1)(rng)];
        }
        if (tables[a].dominated_by(tables[b])) ++comparable;
        const std::uint64_t pair_seed = seed + static_cast<std::uint64_t>(i) * samples;
        try {
            const MatrixReport m = verify_theorem_A(elements[a], elements[b], BoardKind::B, field, samples, pair_seed);
            r.checks += m.checks;
            for (const auto& v : m.violations)
                r.fail("w=" + v.w.str() + " w'=" + v.wprime.str() + " seed " + std::to_string(v.seed) +
                       ": Bruhat verdict " + std::to_string(v.expected) + ", nullity verdict " + std::to_string(v.got));
        } catch (const InvariantViolation& e) {
            r.fail(e.what());
        }
    }
    r.findings.push_back(std::to_string(pairs) + " pairs in W_" + std::to_string(n) + ", " +
                         std::to_string(comparable) + " with w <= w'");
    return r;
}

SuiteReport verify_type_c_match(int n, std::vector<SignedPermutation>* counterexamples) {
    SuiteReport r{"type-c-match"};
    long mismatches = 0;
    for_each_W(n, [&](const SignedPermutation& w) {
        ++r.checks;
        const auto b = essential_set_B(w);
        const auto c = essential_set_C(w);
        if (b == c) return;
        ++mismatches;
        if (counterexamples) counterexamples->push_back(w);
        r.findings.push_back("counterexample " + w.str() + ": B " + triples_str(b) + ", C " + triples_str(c) +
                             "\nkind B board:\n" + render(Board(w, BoardKind::B), RenderFormat::Ascii) +
                             "kind C board:\n" + render(Board(w, BoardKind::C), RenderFormat::Ascii));
    });
    if (mismatches == 0)
        r.findings.push_back("Ess_C = Ess_B on all " + std::to_string(r.checks) + " elements of W_" + std::to_string(n));
    return r;
}

std::vector<std::string> suite_names() {
    return {"ess-maximal", "sup",           "minimality", "base",      "counts",       "bigrassmannian",
            "rwy",         "lemma-compare", "matrix-rank", "theorem-a", "type-c-match"};
}

std::vector<SuiteReport> run_suite(std::string_view name, const VerifyOptions& o) {
    const int sym_n = o.sym_n > 0 ? o.sym_n : o.n + 2;
    const std::vector<std::pair<std::string, std::function<SuiteReport()>>> suites = {
        {"ess-maximal", [&] { return verify_ess_maximal(o.n); }},
        {"sup", [&] { return verify_sup(o.n); }},
        {"minimality", [&] { return verify_minimality(o.n); }},
        {"base", [&] { return verify_base(o.n); }},
        {"counts", [&] { return verify_counts(o.n); }},
        {"bigrassmannian", [&] { return verify_bigrassmannian(o.n); }},
        {"rwy", [&] { return verify_rwy(o.n, sym_n); }},
        {"lemma-compare", [&] { return verify_lemma_compare(o.n); }},
        {"matrix-rank", [&] { return verify_matrix_rank(o.n, o.samples, o.seed, o.modulus); }},
        {"theorem-a", [&] { return verify_theorem_a(o.n, o.pairs, o.samples, o.seed, o.modulus); }},
        {"type-c-match", [&] { return verify_type_c_match(o.n); }},
    };
    std::vector<SuiteReport> out;
    for (const auto& [suite, fn] : suites)
        if (name == "all" || name == suite) out.push_back(fn());
    if (out.empty()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    return out;
}

} // namespace signedperm
