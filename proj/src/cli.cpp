#include "signedperm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "signedperm/bruhat.hpp"
#include "signedperm/diagram.hpp"
#include "signedperm/errors.hpp"
#include "signedperm/essential.hpp"
#include "signedperm/permutation.hpp"
#include "signedperm/verify.hpp"

namespace signedperm::cli {

namespace {

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
}

int info(const std::string& text, std::ostream& out) {
    const SignedPermutation w = parse_signed(text);
    const WindowPermutation v = iota(w);
    out << "w: " << w.str() << '\n';
    out << "length: " << w.length() << '\n';
    out << "descents: " << join(descents(w)) << '\n';
    out << "inverse: " << w.inverse().str() << '\n';
    out << "iota: " << v.str() << '\n';
    out << "bigrassmannian: " << (is_bigrassmannian(w) ? "true" : "false") << '\n';
    return kExitTrue;
}

int show_diagram(const std::string& text, const std::string& type, const std::string& format, std::ostream& out) {
    const SignedPermutation w = parse_signed(text);
    const BoardKind kind = parse_board_kind(type);
    const RenderFormat fmt = parse_render_format(format);
    out << (kind == BoardKind::A ? render(Board(iota(w)), fmt) : render(Board(w, kind), fmt));
    return kExitTrue;
}

int ess(const std::string& text, const std::string& type, std::ostream& out) {
    const BoardKind kind = parse_board_kind(type);
    if (kind == BoardKind::A) throw ParseError("ess takes --type b or c");
    out << essential_json(parse_signed(text), kind) << '\n';
    return kExitTrue;
}

int basic(const std::vector<int>& kpq, const std::string& type, std::ostream& out) {
    Flavor flavor;
    if (type == "b") flavor = Flavor::B;
    else if (type == "a") flavor = Flavor::ACentered;
    else if (type == "a-small") flavor = Flavor::ASmall;
    else throw ParseError("unknown --type '" + type + "' (expected a, a-small or b)");
    const BasicTriple t{kpq[0], kpq[1], kpq[2], flavor};
    t.require_valid();
    if (flavor == Flavor::B) {
        const SignedPermutation w = basic_signed(t);
        out << "w" << t.str() << ": " << w.str() << '\n';
        out << "length: " << w.length() << '\n';
        out << "n_min: " << n_min(t) << '\n';
        out << "inverse: " << basic_inverse(t).str() << '\n';
    } else {
        const WindowPermutation v = basic_perm_A(t);
        out << "v" << t.str() << ": " << v.str() << '\n';
        out << "interval: [" << v.lo() << "," << v.hi() << "]\n";
        out << "length: " << v.length() << '\n';
        out << "inverse: " << basic_inverse(t).str() << '\n';
    }
    return kExitTrue;
}

int sup(int n, const std::vector<std::string>& texts, std::ostream& out, std::ostream& err) {
    std::vector<SignedPermutation> elems;
    for (const auto& text : texts) {
        const BasicTriple t = parse_triple(text, Flavor::B);
        if (n_min(t) > n) throw RangeError(t.str() + " needs n >= " + std::to_string(n_min(t)));
        elems.push_back(basic_signed(t).padded(n));
    }
    try {
        const SupremumResult s = supremum(elems, n);
        out << s.value.str() << '\n';
        return kExitTrue;
    } catch (const NoSupremum& e) {
        err << "no supremum: " << e.what() << '\n';
        return kExitFalse;
    }
}

int leq(const std::string& a, const std::string& b, std::ostream& out) {
    const bool result = leq_B(parse_signed(a), parse_signed(b));
    out << (result ? "true" : "false") << '\n';
    return result ? kExitTrue : kExitFalse;
}

int rwy(const std::string& text, int n, std::ostream& out) {
    SignedPermutation w = parse_signed(text);
    if (n > 0) w = w.padded(n);
    auto image = rwy_via_bijection(w);
    std::sort(image.begin(), image.end());
    const auto minimal = minimal_not_below(w);
    for (const auto& x : image) out << x.str() << '\n';
    const bool agree = image == minimal;
    out << "matches minimal elements not below: " << (agree ? "true" : "false") << '\n';
    return agree ? kExitTrue : kExitFalse;
}

int verify(const std::string& suite, const VerifyOptions& options, std::ostream& out) {
    bool ok = true;
    for (const auto& report : run_suite(suite, options)) {
        out << report.str();
        ok = ok && report.ok();
    }
    return ok ? kExitTrue : kExitFalse;
}

int render_file(const std::string& path, const std::string& format, std::ostream& out) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    out << render(board_from_json(buffer.str()), parse_render_format(format));
    return kExitTrue;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Signed permutations: diagrams, essential sets and Bruhat order", "signedperm"};
    app.require_subcommand(1);

    std::string w_text, w2_text, type, format = "ascii", suite, path;
    std::vector<int> kpq;
    std::vector<std::string> triples;
    int n = 0;
    VerifyOptions vopt;

    auto* info_cmd = app.add_subcommand("info", "length, descents, inverse and iota of w");
    info_cmd->add_option("w", w_text, "signed permutation, e.g. \"-2 3 1\"")->required();

    auto* diagram_cmd = app.add_subcommand("diagram", "render the board of w");
    diagram_cmd->add_option("w", w_text)->required();
    diagram_cmd->add_option("--type", type)->default_val("b")->check(CLI::IsMember({"a", "b", "c"}));
    diagram_cmd->add_option("--format", format)->default_val("ascii")->check(CLI::IsMember({"ascii", "json", "svg"}));

    auto* ess_cmd = app.add_subcommand("ess", "essential set as JSON");
    ess_cmd->add_option("w", w_text)->required();
    ess_cmd->add_option("--type", type)->default_val("b")->check(CLI::IsMember({"b", "c"}));

    auto* basic_cmd = app.add_subcommand("basic", "basic element of a triple");
    basic_cmd->add_option("kpq", kpq, "k p q")->expected(3)->required();
    basic_cmd->add_option("--type", type)->default_val("b")->check(CLI::IsMember({"a", "a-small", "b"}));

    auto* sup_cmd = app.add_subcommand("sup", "supremum of basic elements in W_n");
    sup_cmd->add_option("--n", n)->required()->check(CLI::Range(1, kDefaultMaxN));
    sup_cmd->add_option("triples", triples, "triples k,p,q");

    auto* leq_cmd = app.add_subcommand("leq", "Bruhat comparison w1 <= w2");
    leq_cmd->add_option("w1", w_text)->required();
    leq_cmd->add_option("w2", w2_text)->required();

    auto* rwy_cmd = app.add_subcommand("rwy", "minimal elements not below w via dissecting elements");
    rwy_cmd->add_option("w", w_text)->required();
    rwy_cmd->add_option("--n", n)->check(CLI::Range(1, kDefaultMaxN));

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> names = suite_names();
    names.push_back("all");
    verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(names));
    verify_cmd->add_option("--n", vopt.n)->default_val(4)->check(CLI::Range(1, kDefaultMaxN));
    verify_cmd->add_option("--samples", vopt.samples)->default_val(20)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", vopt.seed)->default_val(0);
    verify_cmd->add_option("--modulus", vopt.modulus)->default_val(10007);
    verify_cmd->add_option("--pairs", vopt.pairs)->default_val(200)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--sym-n", vopt.sym_n, "size of S_n for rwy (default n + 2)")->check(CLI::Range(0, 8));

    auto* render_cmd = app.add_subcommand("render", "render a board stored as JSON");
    render_cmd->add_option("file", path)->required();
    render_cmd->add_option("--format", format)->default_val("ascii")->check(CLI::IsMember({"ascii", "json", "svg"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitTrue;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitTrue;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (info_cmd->parsed()) return info(w_text, out);
        if (diagram_cmd->parsed()) return show_diagram(w_text, type, format, out);
        if (ess_cmd->parsed()) return ess(w_text, type, out);
        if (basic_cmd->parsed()) return basic(kpq, type, out);
        if (sup_cmd->parsed()) return sup(n, triples, out, err);
        if (leq_cmd->parsed()) return leq(w_text, w2_text, out);
        if (rwy_cmd->parsed()) return rwy(w_text, n, out);
        if (verify_cmd->parsed()) return verify(suite, vopt, out);
        if (render_cmd->parsed()) return render_file(path, format, out);
    } catch (const NoSupremum& e) {
        err << "error: " << e.what() << '\n';
        return kExitFalse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace signedperm::cli
