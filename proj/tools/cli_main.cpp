// glulib command line front end: parse numerical/affine semigroups, run the
// gluing analyses, and emit deterministic text or JSON reports.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "glulib/affine.hpp"
#include "glulib/arith.hpp"
#include "glulib/betti_table.hpp"
#include "glulib/complex.hpp"
#include "glulib/dg.hpp"
#include "glulib/errors.hpp"
#include "glulib/gluing.hpp"
#include "glulib/invariants.hpp"
#include "glulib/oracle.hpp"
#include "glulib/poly.hpp"

using json = nlohmann::ordered_json;
using namespace glulib;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int64 kJsonIntMax = int64(1) << 53;

// Integers beyond 2^53 go out as strings so lossy JSON consumers keep them.
json json_int(int64 v) {
    if (v > kJsonIntMax || v < -kJsonIntMax) return std::to_string(v);
    return v;
}

json json_int_list(const std::vector<int64>& v) {
    json a = json::array();
    for (int64 x : v) a.push_back(json_int(x));
    return a;
}

std::vector<int64> parse_int_list(const std::string& s, const char* what) {
    std::vector<int64> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) {
        try {
            size_t pos = 0;
            int64 v = std::stoll(cur, &pos);
            if (pos != cur.size()) throw std::invalid_argument(cur);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": cannot parse integer '" + cur + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

std::string gens_string(const std::vector<int64>& g) {
    std::ostringstream os;
    for (size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    return os.str();
}

struct Output {
    bool as_json = false;
    bool timings = false;
    json report;
    std::ostringstream text;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void emit() {
        if (timings) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
            report["timings"] = {{"total_ms", ms}};
            text << "time: " << ms << " ms\n";
        }
        if (as_json)
            std::cout << report.dump(2) << "\n";
        else
            std::cout << text.str();
    }
};

SplitStrategy parse_strategy(const std::string& s) {
    if (s == "first") return SplitStrategy::first;
    if (s == "all") return SplitStrategy::all;
    if (s == "prefer-simple") return SplitStrategy::prefer_simple;
    throw std::invalid_argument("unknown strategy '" + s + "'");
}

json betti_table_json(const BettiTable& t) {
    json rows = json::array();
    for (const auto& [ij, v] : t.entries)
        rows.push_back({{"i", ij.first}, {"j", json_int(ij.second)}, {"beta", json_int(v)}});
    return rows;
}

void print_betti_table(std::ostringstream& os, const BettiTable& t) {
    os << "  i  j           beta\n";
    for (const auto& [ij, v] : t.entries) {
        os << "  " << ij.first << "  " << ij.second << "  " << v << "\n";
    }
}

json tree_json(const DecompTree& t);

// rho as a polynomial of the glued ring: alpha sits on the x-block, beta on
// the y-block (rho_binomial keeps the two exponent vectors in their own
// variable spaces).
Poly rho_poly_xy(const GluingSplit& sp) {
    int p = sp.A.dim(), q = sp.B.dim();
    Exponents le(static_cast<size_t>(p + q), 0), re(static_cast<size_t>(p + q), 0);
    for (int i = 0; i < p; ++i)
        le[static_cast<size_t>(i)] = static_cast<int>(sp.alpha[static_cast<size_t>(i)]);
    for (int j = 0; j < q; ++j)
        re[static_cast<size_t>(p + j)] = static_cast<int>(sp.beta[static_cast<size_t>(j)]);
    return Poly::monomial(le, 1) - Poly::monomial(re, 1);
}

json split_json(const GluingSplit& sp) {
    WeightedRing ring = make_ring_xy(sp.part1(), sp.part2());
    json j;
    j["k1"] = json_int(sp.k1);
    j["A"] = json_int_list(sp.A.gens());
    j["alpha"] = json_int_list(sp.alpha);
    j["k2"] = json_int(sp.k2);
    j["B"] = json_int_list(sp.B.gens());
    j["beta"] = json_int_list(sp.beta);
    j["rho"] = to_string(rho_poly_xy(sp), ring);
    j["rho_degree"] = json_int(rho_binomial(sp).degree);
    return j;
}

json tree_json(const DecompTree& t) {
    json j;
    j["gens"] = json_int_list(t.node.gens());
    switch (t.leaf_kind) {
    case LeafKind::internal: {
        j["split"] = split_json(*t.split);
        j["children"] = json::array({tree_json(t.children[0]), tree_json(t.children[1])});
        break;
    }
    case LeafKind::dim1: j["leaf"] = "dim1"; break;
    case LeafKind::dim2: j["leaf"] = "dim2"; break;
    case LeafKind::indecomposable: j["leaf"] = "indecomposable"; break;
    }
    return j;
}

void print_tree(std::ostringstream& os, const DecompTree& t, int depth) {
    std::string pad(static_cast<size_t>(2 * depth), ' ');
    os << pad << "<" << gens_string(t.node.gens()) << ">";
    if (t.is_leaf()) {
        switch (t.leaf_kind) {
        case LeafKind::dim1: os << "  leaf: polynomial ring\n"; break;
        case LeafKind::dim2: os << "  leaf: plane curve (embdim 2)\n"; break;
        default: os << "  leaf: indecomposable\n"; break;
        }
        return;
    }
    const GluingSplit& sp = *t.split;
    WeightedRing ring = make_ring_xy(sp.part1(), sp.part2());
    os << "\n" << pad << "  k1=" << sp.k1 << " k2=" << sp.k2
       << " rho=" << to_string(rho_poly_xy(sp), ring)
       << " deg=" << rho_binomial(sp).degree << "\n";
    os << pad << "  A = " << sp.k1 << " * <" << gens_string(sp.A.gens()) << ">\n";
    print_tree(os, t.children[0], depth + 2);
    os << pad << "  B = " << sp.k2 << " * <" << gens_string(sp.B.gens()) << ">\n";
    print_tree(os, t.children[1], depth + 2);
}

// ---------------------------------------------------------------- analyze --

int cmd_analyze(const std::string& gens_arg, const std::string& strategy, int64 field_char,
                Output& out) {
    SemigroupGens C(parse_int_list(gens_arg, "gens"));
    out.report["command"] = "analyze";
    out.report["input"] = {{"gens", json_int_list(C.gens())}};
    json& r = out.report["result"];
    r["minimal"] = C.minimal();
    r["gcd"] = json_int(C.gcd());
    r["embdim"] = C.dim();
    if (C.gcd() != 1)
        throw std::invalid_argument("generators must have gcd 1 (got " + std::to_string(C.gcd()) +
                                    ")");
    int64 f = frobenius(C);
    auto pf = pseudo_frobenius(C);
    auto ap = apery_set(C, C.gens()[0]);
    DecompTree tree = decomposition_tree(C, parse_strategy(strategy));
    Classification cls = classify(C, tree, field_char);

    r["frobenius"] = json_int(f);
    r["apery_mod"] = json_int(C.gens()[0]);
    r["apery"] = json_int_list(ap);
    r["pseudo_frobenius"] = json_int_list(pf);
    r["cm_type"] = json_int(cls.cm_type);
    r["mu"] = json_int(cls.mu);
    r["decomposable"] = cls.decomposable;
    r["complete_intersection"] = cls.complete_intersection;
    r["gorenstein"] = cls.gorenstein;
    r["kind"] = ring_kind_name(cls.kind);

    auto& os = out.text;
    os << "semigroup <" << gens_string(C.gens()) << ">\n";
    os << "minimal generators: " << (C.minimal() ? "yes" : "no") << "\n";
    os << "embedding dimension: " << C.dim() << "\n";
    os << "frobenius: " << f << "\n";
    os << "apery set mod " << C.gens()[0] << ": " << gens_string(ap) << "\n";
    os << "pseudo-frobenius: " << gens_string(pf) << "\n";
    os << "cm type: " << cls.cm_type << "\n";
    os << "mu(I): " << cls.mu << "\n";
    os << "decomposable: " << (cls.decomposable ? "yes" : "no") << "\n";
    os << "kind: " << ring_kind_name(cls.kind) << "\n";
    return 0;
}

// -------------------------------------------------------------- decompose --

int cmd_decompose(const std::string& gens_arg, const std::string& strategy, bool list_all,
                  Output& out) {
    SemigroupGens C(parse_int_list(gens_arg, "gens"));
    out.report["command"] = "decompose";
    out.report["input"] = {{"gens", json_int_list(C.gens())}, {"strategy", strategy}};
    auto& os = out.text;
    if (list_all) {
        auto splits = find_gluings(C);
        json arr = json::array();
        for (const auto& sp : splits) arr.push_back(split_json(sp));
        out.report["result"] = {{"gluings", arr}};
        os << splits.size() << " gluing(s) of <" << gens_string(C.gens()) << ">\n";
        for (const auto& sp : splits) {
            WeightedRing ring = make_ring_xy(sp.part1(), sp.part2());
            os << "  k1=" << sp.k1 << " A=<" << gens_string(sp.A.gens()) << "> k2=" << sp.k2
               << " B=<" << gens_string(sp.B.gens())
               << "> rho=" << to_string(rho_poly_xy(sp), ring) << "\n";
        }
        return 0;
    }
    DecompTree tree = decomposition_tree(C, parse_strategy(strategy));
    out.report["result"] = {{"tree", tree_json(tree)}};
    print_tree(os, tree, 0);
    return 0;
}

// ------------------------------------------------------------------ betti --

int cmd_betti(const std::string& gens_arg, const std::string& strategy, bool graded, bool oracle,
              std::optional<int64> field_char, Output& out) {
    SemigroupGens C(parse_int_list(gens_arg, "gens"));
    out.report["command"] = "betti";
    out.report["input"] = {{"gens", json_int_list(C.gens())}};
    DecompTree tree = decomposition_tree(C, parse_strategy(strategy));
    const int64 formula_char = field_char.value_or(32003);
    BettiTable table = betti(C, tree, formula_char);
    auto totals = table.totals();

    auto& os = out.text;
    json& r = out.report["result"];
    r["totals"] = json_int_list(totals);
    r["pd"] = table.pd();
    r["regularity"] = json_int(table.regularity());
    os << "betti totals: " << gens_string(totals) << "\n";
    os << "pd: " << table.pd() << "\n";
    os << "regularity (max j - i): " << table.regularity() << "\n";
    if (graded) {
        r["graded"] = betti_table_json(table);
        os << "graded betti table:\n";
        print_betti_table(os, table);
    }
    if (oracle) {
        std::vector<int64> chars;
        if (field_char)
            chars.push_back(*field_char);
        else
            chars = {2, 32003};
        json cmp = json::array();
        bool all_match = true;
        for (int64 p : chars) {
            OracleOptions opts;
            opts.field_char = p;
            BettiTable ot = graded_betti_oracle(C, opts);
            bool match = ot == table;
            all_match = all_match && match;
            json one;
            one["char"] = json_int(p);
            one["match"] = match;
            if (!match) one["oracle"] = betti_table_json(ot);
            cmp.push_back(one);
            os << "oracle GF(" << p << "): " << (match ? "match" : "MISMATCH") << "\n";
            if (!match) {
                os << "oracle table:\n";
                print_betti_table(os, ot);
            }
        }
        r["oracle"] = cmp;
        if (!all_match) {
            out.emit();
            throw invariant_error("formula and oracle Betti tables disagree");
        }
    }
    return 0;
}

// ---------------------------------------------------------------- hilbert --

int cmd_hilbert(const std::string& gens_arg, const std::string& strategy, int64 expand,
                Output& out) {
    SemigroupGens C(parse_int_list(gens_arg, "gens"));
    out.report["command"] = "hilbert";
    out.report["input"] = {{"gens", json_int_list(C.gens())}};
    DecompTree tree = decomposition_tree(C, parse_strategy(strategy));
    HilbertNumerator h = hilbert_numerator(C, tree);

    auto& os = out.text;
    json& r = out.report["result"];
    json terms = json::array();
    os << "numerator N(t) with denominator prod(1 - t^c):\n  N(t) =";
    bool first = true;
    for (const auto& [e, c] : h.coeffs) {
        terms.push_back({{"exp", json_int(e)}, {"coeff", json_int(c)}});
        os << (first ? " " : c < 0 ? " - " : " + ");
        int64 a = first && c < 0 ? c : (c < 0 ? -c : c);
        if (a != 1 || e == 0) os << a;
        if (e != 0) os << (a != 1 ? "*t^" : "t^") << e;
        first = false;
    }
    os << "\n  denominator exponents: " << gens_string(h.denominator_exponents) << "\n";
    r["numerator"] = terms;
    r["denominator_exponents"] = json_int_list(h.denominator_exponents);

    if (expand >= 0) {
        auto coeffs = expand_hilbert_series(h, expand);
        auto indicator = hilbert_function_oracle(C, expand);
        bool match = coeffs.size() == indicator.size();
        for (size_t i = 0; match && i < coeffs.size(); ++i)
            if (coeffs[i] != static_cast<int64>(indicator[i])) match = false;
        r["expansion_limit"] = json_int(expand);
        r["expansion_matches_membership"] = match;
        os << "expansion up to t^" << expand << " matches membership: "
           << (match ? "yes" : "NO") << "\n";
        if (!match) {
            out.emit();
            throw invariant_error("Hilbert expansion disagrees with membership oracle");
        }
    }
    return 0;
}

// ------------------------------------------------------------- resolution --

int cmd_resolution(const std::string& gens_arg, const std::string& strategy, bool verify,
                   const std::string& export_fmt, const std::string& out_path, Output& out) {
    SemigroupGens C(parse_int_list(gens_arg, "gens"));
    out.report["command"] = "resolution";
    out.report["input"] = {{"gens", json_int_list(C.gens())}};
    DecompTree tree = decomposition_tree(C, parse_strategy(strategy));
    ResolutionResult res = build_resolution(C, tree);
    const FreeComplex& F = res.complex;

    auto& os = out.text;
    json& r = out.report["result"];
    json ranks = json::array(), shifts = json::array();
    os << "minimal free resolution of k[<" << gens_string(C.gens()) << ">], length "
       << F.length() << "\n";
    for (int k = 0; k <= F.length(); ++k) {
        ranks.push_back(F.rank(k));
        shifts.push_back(json_int_list(F.shifts[static_cast<size_t>(k)]));
        os << "  F_" << k << " rank " << F.rank(k) << ", shifts";
        for (int64 s : F.shifts[static_cast<size_t>(k)]) os << " " << s;
        os << "\n";
    }
    r["length"] = F.length();
    r["ranks"] = ranks;
    r["shifts"] = shifts;
    r["dg_structure"] = res.dg.has_value();
    os << "dg structure: " << (res.dg ? "present (Koszul leaves)" : "absent") << "\n";

    if (verify) {
        ComplexReport cr = verify_complex(F);
        ExactnessReport er = verify_exactness_probabilistic(F);
        r["verify"] = {{"d2", cr.d2_ok},
                       {"homogeneous", cr.homogeneous_ok},
                       {"minimal", cr.minimal_ok},
                       {"exactness_certified", er.certified},
                       {"exactness_detail", er.detail}};
        os << "verify: d2=" << (cr.d2_ok ? "ok" : "FAIL")
           << " homogeneous=" << (cr.homogeneous_ok ? "ok" : "FAIL")
           << " minimal=" << (cr.minimal_ok ? "ok" : "FAIL") << "\n";
        os << "exactness: " << (er.certified ? "certified" : "NOT certified") << " ("
           << er.detail << ")\n";
        if (res.dg) {
            DGCheckReport dr = check_dg(F, *res.dg, 4);
            r["verify"]["dg_ok"] = dr.ok();
            os << "dg checks: " << (dr.ok() ? "ok" : "FAIL") << "\n";
            if (!dr.ok()) {
                out.emit();
                throw invariant_error("DG structure checks failed");
            }
        }
        if (!cr.ok() || !er.certified) {
            for (const auto& v : cr.violations) os << "  violation: " << v << "\n";
            out.emit();
            throw invariant_error("resolution verification failed");
        }
    }
    if (!export_fmt.empty()) {
        std::string payload;
        if (export_fmt == "text")
            payload = export_text(F);
        else if (export_fmt == "m2")
            payload = export_macaulay2(F);
        else
            throw std::invalid_argument("unknown export format '" + export_fmt +
                                        "' (expected text or m2)");
        if (out_path.empty()) {
            os << payload;
            r["export"] = {{"format", export_fmt}, {"inline", true}};
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw std::invalid_argument("cannot open output file " + out_path);
            f << payload;
            r["export"] = {{"format", export_fmt}, {"path", out_path}};
            os << "exported " << export_fmt << " to " << out_path << "\n";
        }
    }
    return 0;
}

// ----------------------------------------------------------------- affine --

struct AffineFile {
    std::vector<std::vector<int64>> a, b;
    std::optional<Binomial> rho;
};

AffineFile parse_affine_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open affine input file " + path);
    AffineFile out;
    std::string line, section = "A";
    std::vector<std::vector<int64>> rho_lines;
    while (std::getline(f, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream is(line);
        std::string tok;
        if (!(is >> tok)) continue;
        if (tok == "A:" || tok == "B:" || tok == "rho:") {
            section = tok.substr(0, tok.size() - 1);
            continue;
        }
        std::vector<int64> v;
        try {
            v.push_back(std::stoll(tok));
            int64 x;
            while (is >> x) v.push_back(x);
        } catch (const std::exception&) {
            throw std::invalid_argument("affine file: cannot parse line '" + line + "'");
        }
        if (section == "A")
            out.a.push_back(std::move(v));
        else if (section == "B")
            out.b.push_back(std::move(v));
        else
            rho_lines.push_back(std::move(v));
    }
    if (!rho_lines.empty()) {
        if (rho_lines.size() != 2)
            throw std::invalid_argument(
                "affine file: rho section needs exactly two exponent lines");
        Binomial rho;
        rho.left = rho_lines[0];
        rho.right = rho_lines[1];
        out.rho = std::move(rho);
    }
    return out;
}

int cmd_affine(const std::string& path, const std::string& action, const std::string& bound_arg,
               const std::string& part, int64 field_char, Output& out) {
    AffineFile file = parse_affine_file(path);
    if (file.a.empty()) throw std::invalid_argument("affine file has no generators");
    std::vector<int64> bound = parse_int_list(bound_arg, "bound");
    out.report["command"] = "affine " + action;
    out.report["input"] = {{"file", path}, {"bound", json_int_list(bound)}};
    auto& os = out.text;
    json& r = out.report["result"];

    auto pick = [&](const std::string& which) -> AffineSemigroup {
        if (which == "A") return AffineSemigroup(file.a);
        if (which == "B") {
            if (file.b.empty()) throw std::invalid_argument("affine file has no B: section");
            return AffineSemigroup(file.b);
        }
        if (which == "C") {
            std::vector<std::vector<int64>> cg = file.a;
            cg.insert(cg.end(), file.b.begin(), file.b.end());
            return AffineSemigroup(cg);
        }
        throw std::invalid_argument("unknown part '" + which + "' (expected A, B or C)");
    };
    const std::string which = part.empty() ? (file.b.empty() ? "A" : "C") : part;

    if (action == "gens") {
        AffineSemigroup S = pick(which);
        auto gens = affine_fiber_generators(S, bound);
        json arr = json::array();
        os << gens.size() << " minimal generator(s) of the ideal of part " << which
           << " within the bound\n";
        for (const auto& g : gens) {
            arr.push_back({{"left", json_int_list(g.left)},
                           {"right", json_int_list(g.right)},
                           {"total_degree", json_int(g.degree)}});
            os << "  x^(" << gens_string(g.left) << ") - x^(" << gens_string(g.right)
               << ")  total degree " << g.degree << "\n";
        }
        r = {{"part", which}, {"generators", arr}};
        return 0;
    }
    if (action == "betti") {
        AffineSemigroup S = pick(which);
        AffineBetti b = affine_graded_betti(S, bound, field_char);
        r["part"] = which;
        r["totals"] = json_int_list(b.totals);
        json rows = json::array();
        for (const auto& [d, row] : b.by_multidegree)
            rows.push_back({{"multidegree", json_int_list(d)}, {"beta", json_int_list(row)}});
        r["by_multidegree"] = rows;
        os << "multigraded betti totals of part " << which << " within the bound: "
           << gens_string(b.totals) << "\n";
        for (const auto& [d, row] : b.by_multidegree)
            os << "  (" << gens_string(d) << "): " << gens_string(row) << "\n";
        return 0;
    }
    if (action == "verify") {
        if (file.b.empty())
            throw std::invalid_argument("affine verify needs both A: and B: sections");
        AffineSemigroup A(file.a), B(file.b);
        AffineGluingReport rep = affine_gluing_verify(A, B, file.rho, bound);
        r["pass"] = rep.pass;
        r["rho_searched"] = rep.rho_searched;
        r["rho"] = {{"left", json_int_list(rep.rho.left)},
                    {"right", json_int_list(rep.rho.right)},
                    {"multidegree", json_int_list(rep.rho_multidegree)}};
        r["mismatches"] = rep.mismatches;
        r["note"] = rep.note;
        os << "gluing verification: " << (rep.pass ? "PASS" : "FAIL") << "\n";
        if (!rep.rho_multidegree.empty())
            os << "rho: x^(" << gens_string(rep.rho.left) << ") - y^(" << gens_string(rep.rho.right)
               << ") at multidegree (" << gens_string(rep.rho_multidegree) << ")"
               << (rep.rho_searched ? " [searched]" : "") << "\n";
        for (const auto& m : rep.mismatches) os << "  " << m << "\n";
        os << "note: " << rep.note << "\n";
        return 0;
    }
    if (action == "propagate") {
        if (file.b.empty())
            throw std::invalid_argument("affine propagate needs both A: and B: sections");
        AffineSemigroup A(file.a), B(file.b);
        auto bettiA = affine_graded_betti(A, bound, field_char);
        auto bettiB = affine_graded_betti(B, bound, field_char);
        auto totals = affine_betti_propagate(bettiA.totals, bettiB.totals);
        r["totals_A"] = json_int_list(bettiA.totals);
        r["totals_B"] = json_int_list(bettiB.totals);
        r["totals_C"] = json_int_list(totals);
        r["pd"] = static_cast<int>(totals.size()) - 1;
        os << "totals of k[A]: " << gens_string(bettiA.totals) << "\n";
        os << "totals of k[B]: " << gens_string(bettiB.totals) << "\n";
        os << "propagated totals of k[C]: " << gens_string(totals) << "\n";
        os << "pd: " << totals.size() - 1 << "\n";
        return 0;
    }
    throw std::invalid_argument("unknown affine action '" + action +
                                "' (expected gens, betti, verify or propagate)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of semigroup rings obtained by gluing"};
    app.set_version_flag("--version", std::string("glulib ") + kVersion);
    app.require_subcommand(1);

    Output out;
    out.report["version"] = kVersion;
    app.add_flag("--json", out.as_json, "emit a JSON report instead of text");
    app.add_flag("--timings", out.timings, "include wall-clock timings in the report");

    std::string gens_arg, strategy = "prefer-simple";
    std::string export_fmt, out_path, affine_file, affine_action, bound_arg, part;
    bool graded = false, oracle = false, verify = false, list_all = false;
    std::optional<int64> char_opt;
    int64 char_value = 32003, expand = -1;

    auto* a_analyze = app.add_subcommand("analyze", "gcd, frobenius, apery, type, classification");
    a_analyze->add_option("gens", gens_arg, "comma-separated generators")->required();
    a_analyze->add_option("--strategy", strategy, "first|all|prefer-simple");

    auto* a_dec = app.add_subcommand("decompose", "gluing decomposition tree");
    a_dec->add_option("gens", gens_arg, "comma-separated generators")->required();
    a_dec->add_option("--strategy", strategy, "first|all|prefer-simple");
    a_dec->add_flag("--all", list_all, "list every root gluing instead of one tree");

    auto* a_betti = app.add_subcommand("betti", "Betti numbers via the gluing formula");
    a_betti->add_option("gens", gens_arg, "comma-separated generators")->required();
    a_betti->add_option("--strategy", strategy, "first|all|prefer-simple");
    a_betti->add_flag("--graded", graded, "print the full graded table");
    a_betti->add_flag("--oracle", oracle, "cross-check against the homology oracle");
    a_betti->add_option("--char", char_opt, "field characteristic for the oracle");

    auto* a_hil = app.add_subcommand("hilbert", "Hilbert series numerator");
    a_hil->add_option("gens", gens_arg, "comma-separated generators")->required();
    a_hil->add_option("--strategy", strategy, "first|all|prefer-simple");
    a_hil->add_option("--expand", expand, "expand the series up to this degree and check");

    auto* a_res = app.add_subcommand("resolution", "explicit minimal free resolution");
    a_res->add_option("gens", gens_arg, "comma-separated generators")->required();
    a_res->add_option("--strategy", strategy, "first|all|prefer-simple");
    a_res->add_flag("--verify", verify, "run d2/homogeneity/minimality/exactness checks");
    a_res->add_option("--export", export_fmt, "export format: text or m2");
    a_res->add_option("--out", out_path, "write the export to this path");

    auto* a_aff = app.add_subcommand("affine", "affine semigroup flows (file input)");
    a_aff->add_option("file", affine_file, "input file with A:, B:, rho: sections")->required();
    a_aff->add_option("action", affine_action, "gens|betti|verify|propagate")->required();
    a_aff->add_option("--bound", bound_arg, "componentwise multidegree bound (mandatory)")
        ->required();
    a_aff->add_option("--part", part, "A, B or C (default: C when B: present, else A)");
    a_aff->add_option("--char", char_value, "field characteristic for homology");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // help/version exit 0; parse errors are invalid input
    }

    try {
        int rc = 1;
        if (*a_analyze)
            rc = cmd_analyze(gens_arg, strategy, char_opt.value_or(32003), out);
        else if (*a_dec)
            rc = cmd_decompose(gens_arg, strategy, list_all, out);
        else if (*a_betti)
            rc = cmd_betti(gens_arg, strategy, graded, oracle, char_opt, out);
        else if (*a_hil)
            rc = cmd_hilbert(gens_arg, strategy, expand, out);
        else if (*a_res)
            rc = cmd_resolution(gens_arg, strategy, verify, export_fmt, out_path, out);
        else if (*a_aff)
            rc = cmd_affine(affine_file, affine_action, bound_arg, part, char_value, out);
        out.emit();
        return rc;
    } catch (const invariant_error& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 3;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    }
}
