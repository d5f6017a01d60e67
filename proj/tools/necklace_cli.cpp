#include "necklace/necklace.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace necklace;

namespace {

struct RunConfig {
    std::string format = "text";
    std::uint64_t seed = 0;
    int max_degree = 0; // 0: command default
    std::string output;

    int degree_or(int fallback) const { return max_degree > 0 ? max_degree : fallback; }
    bool json() const { return format == "json"; }
    bool csv() const { return format == "csv"; }
};

struct Check {
    std::string label;
    bool pass = false;
    std::string detail;
    bool note = false; // reported, not counted
};

// The published bracket table, cell by cell as printed; used for the audit annotation.
const char* const printed_table2[5][5] = {
    {"0", "2", "0", "2*tr(x*)", "tr(x)"},
    {"-2", "0", "-2*tr(x)", "0", "-tr(x*)"},
    {"0", "2*tr(x)", "0", "4*tr(xx*)", "2*tr(x^2)"},
    {"-2*tr((x*)^2)", "0", "-4*tr(xx*)", "0", "-2*tr((x*)^2)"},
    {"-tr(x)", "tr(x*)", "-2*tr(x^2)", "2*tr((x*)^2)", "0"},
};

BracketRule make_rule(const std::string& rule, int d, const std::string& constants)
{
    if (!constants.empty()) {
        std::ifstream in(constants);
        if (!in)
            throw std::runtime_error("cannot open " + constants);
        return linear_rule(structure_constants_from_json(Json::parse(in)));
    }
    if (rule == "canonical")
        return BracketRule::canonical(d);
    if (rule.rfind("ngl", 0) == 0 && rule.size() > 3)
        return ngl(std::stoi(rule.substr(3)));
    throw std::invalid_argument("unknown rule '" + rule + "' (canonical, ngl<n>, or --constants FILE)");
}

// ---- dims -------------------------------------------------------------------

int cmd_dims(const RunConfig& cfg, int d, std::ostream& out)
{
    const int kmax = cfg.degree_or(12);
    const Alphabet a = Alphabet::symplectic(d);
    Json rows = Json::array();
    bool all_ok = true;
    if (cfg.csv())
        out << "k,formula,enumerated,status\n";
    for (int k = 0; k <= kmax; ++k) {
        const Integer f = necklace_dimension(d, k);
        const std::size_t e = enumerate_necklaces(a, static_cast<std::size_t>(k)).size();
        const bool ok = f == Integer(static_cast<unsigned long>(e));
        all_ok = all_ok && ok;
        if (cfg.json())
            rows.push_back({{"k", k}, {"formula", f.get_str()}, {"enumerated", e}, {"ok", ok}});
        else
            out << k << ',' << f.get_str() << ',' << e << ',' << (ok ? "ok" : "MISMATCH") << '\n';
    }
    if (cfg.json())
        out << Json{{"d", d}, {"rows", rows}, {"ok", all_ok}}.dump(2) << '\n';
    return all_ok ? 0 : 1;
}

// ---- bracket ----------------------------------------------------------------

int cmd_bracket(const RunConfig& cfg, const BracketRule& rule, const std::string& w1, const std::string& w2,
                std::ostream& out)
{
    const Alphabet& a = rule.alphabet();
    const NecklaceElement e1 = parse_necklace_element(a, w1), e2 = parse_necklace_element(a, w2);
    const NecklaceElement r = necklace_bracket(rule, e1, e2);
    std::optional<NecklaceElement> k;
    if (rule.kind() == RuleKind::canonical_symplectic)
        k = kontsevich_bracket(e1, e2, a.pairs());
    const bool agree = !k || *k == r;
    if (cfg.json()) {
        Json j{{"bracket", format(a, r)}};
        if (k) {
            j["kontsevich"] = format(a, *k);
            j["agree"] = agree;
        }
        out << j.dump(2) << '\n';
    } else {
        out << format(a, r);
        if (k)
            out << (agree ? ", agree" : ", DISAGREE (cut-and-join gives " + format(a, *k) + ")");
        out << '\n';
    }
    return agree ? 0 : 1;
}

// ---- table1 / decompose ----------------------------------------------------

int cmd_table1(const RunConfig& cfg, std::ostream& out)
{
    const int nmax = cfg.degree_or(8);
    const std::vector<WeightDecomposition> rows = table1(nmax);
    Json checks = Json::array();
    std::vector<std::string> notes;
    bool all_ok = true;
    for (const auto& row : rows) {
        if (row.degree > default_bruteforce_bound) {
            notes.push_back("row " + std::to_string(row.degree) + ": beyond brute-force bound, formula only");
            checks.push_back({{"degree", row.degree}, {"checked", false}});
            continue;
        }
        const WeightSpaceAnalysis an = analyze_weight_spaces(row.degree);
        const bool by_dim = an.by_dimension == row, by_rank = an.by_rank == row;
        all_ok = all_ok && by_dim && by_rank;
        notes.push_back("row " + std::to_string(row.degree) + ": formula " + (by_dim ? "=" : "!=") +
                        " weight-space count " + (by_rank ? "=" : "!=") + " E-action rank");
        checks.push_back({{"degree", row.degree}, {"checked", true}, {"weight_count", by_dim}, {"e_rank", by_rank}});
    }
    if (cfg.json()) {
        Json j = table1_to_json(rows);
        j["checks"] = checks;
        j["ok"] = all_ok;
        out << j.dump(2) << '\n';
    } else {
        out << table1_to_csv(rows);
        if (!cfg.csv())
            for (const auto& n : notes)
                out << n << '\n';
    }
    return all_ok ? 0 : 1;
}

std::string describe_decomposition(const WeightDecomposition& w)
{
    std::string s;
    for (auto it = w.multiplicities.rbegin(); it != w.multiplicities.rend(); ++it) {
        if (it->second == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (it->second != 1)
            s += std::to_string(it->second) + "*";
        s += "V" + std::to_string(it->first);
    }
    return s.empty() ? "0" : s;
}

int cmd_decompose(const RunConfig& cfg, int n, std::ostream& out)
{
    const WeightDecomposition formula = decomposition_from_formula(n);
    const WeightSpaceAnalysis an = analyze_weight_spaces(n);
    const bool by_dim = an.by_dimension == formula, by_rank = an.by_rank == formula;
    const bool dim_ok = Integer(formula.dimension()) == necklace_dimension(1, n);
    if (cfg.json()) {
        Json mult = Json::object();
        for (const auto& [k, m] : formula.multiplicities)
            mult[std::to_string(k)] = m;
        Json dims = Json::object();
        for (const auto& [k, dim] : an.weight_space_dims)
            dims[std::to_string(k)] = dim;
        out << Json{{"degree", n},
                    {"multiplicities", mult},
                    {"weight_space_dims", dims},
                    {"weight_count_agrees", by_dim},
                    {"e_rank_agrees", by_rank},
                    {"dimension_agrees", dim_ok}}
                   .dump(2)
            << '\n';
    } else {
        out << "n=" << n << ": " << describe_decomposition(formula) << "; weight-count "
            << (by_dim ? "ok" : "MISMATCH") << ", E-rank " << (by_rank ? "ok" : "MISMATCH") << ", dimension "
            << (dim_ok ? "ok" : "MISMATCH") << '\n';
    }
    return by_dim && by_rank && dim_ok ? 0 : 1;
}

// ---- table2 -----------------------------------------------------------------

int cmd_table2(const RunConfig& cfg, std::ostream& out)
{
    const TraceTable t = table2();
    const std::vector<Necklace> gens = standard_trace_generators(1, 2);
    const Alphabet a = Alphabet::symplectic(1);
    const VariableNames names = symbol_names(a, gens);

    bool antisymmetric = true;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j)
            antisymmetric = antisymmetric && t[i][j].poly == -t[j][i].poly;
    bool jacobi = true;
    try {
        table2_algebra();
    } catch (const std::invalid_argument&) {
        jacobi = false;
    }

    Json audit = Json::array();
    std::vector<std::string> audit_lines;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (t[i][j].poly == names.parse(printed_table2[i][j]))
                continue;
            const bool counterpart = t[i][j].poly == -names.parse(printed_table2[j][i]);
            audit.push_back({{"row", names.name(static_cast<VarId>(i))},
                             {"column", names.name(static_cast<VarId>(j))},
                             {"printed", printed_table2[i][j]},
                             {"computed", format(a, t[i][j])},
                             {"matches_antisymmetric_counterpart", counterpart}});
            audit_lines.push_back("audit: {" + names.name(static_cast<VarId>(i)) + ", " +
                                  names.name(static_cast<VarId>(j)) + "} printed as " + printed_table2[i][j] +
                                  ", computed " + format(a, t[i][j]) +
                                  (counterpart ? " (the negative of the printed transposed entry; typo)"
                                               : " (UNEXPLAINED)"));
        }

    if (cfg.json()) {
        out << Json{{"generators", names.names()},
                    {"table", trace_table_to_json(t)},
                    {"antisymmetric", antisymmetric},
                    {"jacobi", jacobi},
                    {"audit", audit}}
                   .dump(2)
            << '\n';
    } else {
        const char sep = cfg.csv() ? ',' : '\t';
        out << "{-,-}";
        for (const auto& n : names.names())
            out << sep << n;
        out << '\n';
        for (std::size_t i = 0; i < t.size(); ++i) {
            out << names.name(static_cast<VarId>(i));
            for (const auto& e : t[i])
                out << sep << format(a, e);
            out << '\n';
        }
        if (!cfg.csv()) {
            out << "antisymmetric: " << (antisymmetric ? "yes" : "NO") << ", jacobi: " << (jacobi ? "yes" : "NO")
                << '\n';
            for (const auto& l : audit_lines)
                out << l << '\n';
        }
    }
    return antisymmetric && jacobi ? 0 : 1;
}

// ---- center -----------------------------------------------------------------

int cmd_center(const RunConfig& cfg, int d, unsigned n, std::vector<std::string> lambdas, std::ostream& out)
{
    const std::size_t bound = static_cast<std::size_t>(cfg.degree_or(6));
    const NecklaceElement c = center_element(d, n);
    if (lambdas.empty())
        lambdas.push_back("1");
    const GradedBracketReport r = center_check(d, n, bound);
    Json witnesses = Json::array();
    std::string witness_text;
    bool witness_ok = true;
    if (d == 1) {
        for (const auto& s : lambdas) {
            const Rational lam = parse_rational(s);
            const Rational v = center_witness(n, lam), expected = center_witness_expected(n, lam);
            witness_ok = witness_ok && v == expected;
            witnesses.push_back({{"lambda", to_string(lam)}, {"value", to_string(v)}, {"expected", to_string(expected)}});
            witness_text += ", witness(λ=" + to_string(lam) + ")=" + to_string(v);
            if (v != expected)
                witness_text += " (expected " + to_string(expected) + ")";
        }
    }
    if (cfg.json()) {
        Json j{{"d", d},
               {"n", n},
               {"element", format(Alphabet::symplectic(d), c)},
               {"degree_bound", bound},
               {"brackets_checked", r.samples_checked},
               {"violations", r.violations}};
        if (d == 1)
            j["witness"] = witnesses;
        out << j.dump(2) << '\n';
    } else {
        if (c.is_zero())
            out << "c_" << n << " = 0, ";
        out << r.violations.size() << " violations" << witness_text << '\n';
        for (const auto& v : r.violations)
            out << "  " << v << '\n';
    }
    return r.ok() && witness_ok ? 0 : 1;
}

// ---- verify -----------------------------------------------------------------

std::vector<Check> suite_jacobi(const RunConfig& cfg)
{
    std::vector<Check> out;
    const std::size_t total = static_cast<std::size_t>(cfg.degree_or(5));
    const BracketRule canon = BracketRule::canonical(1);
    std::size_t triples = 0, bad = 0;
    std::vector<std::vector<Word>> by_len(total + 1);
    for (std::size_t k = 0; k <= total; ++k)
        by_len[k] = enumerate_words(canon.alphabet(), k);
    for (std::size_t la = 0; la <= total; ++la)
        for (std::size_t lb = 0; la + lb <= total; ++lb)
            for (std::size_t lc = 0; la + lb + lc <= total; ++lc)
                for (const Word& a : by_len[la])
                    for (const Word& b : by_len[lb])
                        for (const Word& c : by_len[lc]) {
                            ++triples;
                            if (!verify_double_jacobi(canon, a, b, c).is_zero())
                                ++bad;
                        }
    out.push_back({"double Jacobi, canonical d=1, all word triples of total degree <= " + std::to_string(total),
                   bad == 0, std::to_string(triples) + " triples, " + std::to_string(bad) + " violations"});

    const BracketRule gl2 = ngl(2);
    WordSampler ws(cfg.seed);
    bad = 0;
    for (int s = 0; s < 200; ++s) {
        const Word a = ws.word_up_to(gl2.alphabet(), 1, 2), b = ws.word_up_to(gl2.alphabet(), 1, 2),
                   c = ws.word_up_to(gl2.alphabet(), 0, 1);
        if (!verify_double_jacobi(gl2, a, b, c).is_zero())
            ++bad;
    }
    out.push_back({"double Jacobi, linear rule of gl2, 200 seeded triples", bad == 0,
                   std::to_string(bad) + " violations"});
    return out;
}

std::vector<Check> suite_loday(const RunConfig& cfg)
{
    std::vector<Check> out;
    for (const BracketRule& rule : {BracketRule::canonical(1), BracketRule::canonical(2), ngl(2)}) {
        WordSampler ws(cfg.seed);
        std::size_t bad_identity = 0, bad_commutator = 0;
        for (int s = 0; s < 200; ++s) {
            const Word a = ws.word_up_to(rule.alphabet(), 0, 3), b = ws.word_up_to(rule.alphabet(), 0, 3),
                       c = ws.word_up_to(rule.alphabet(), 0, 3);
            const LodayCheck l = verify_loday_properties(rule, a, b, c);
            bad_identity += l.loday_identity ? 0 : 1;
            bad_commutator += l.commutator_kills ? 0 : 1;
        }
        const std::string name = rule.kind() == RuleKind::linear ? "linear gl2"
                                                                  : "canonical d=" + std::to_string(rule.alphabet().pairs());
        out.push_back({"Loday identity, " + name + ", 200 seeded triples", bad_identity == 0,
                       std::to_string(bad_identity) + " violations"});
        out.push_back({"commutators bracket to zero, " + name + ", 200 seeded triples", bad_commutator == 0,
                       std::to_string(bad_commutator) + " violations"});
    }
    return out;
}

std::vector<Check> suite_grading(const RunConfig& cfg)
{
    std::vector<Check> out;
    const std::size_t deg = static_cast<std::size_t>(cfg.degree_or(6));
    const auto add = [&](const std::string& name, const GradedBracketReport& r) {
        out.push_back({name, r.ok(),
                       std::to_string(r.samples_checked) + " pairs, " + std::to_string(r.violations.size()) +
                           " violations"});
    };
    add("canonical d=1 has degree -2", check_grading(BracketRule::canonical(1), -2, 300, deg, cfg.seed));
    add("canonical d=2 has degree -2", check_grading(BracketRule::canonical(2), -2, 300, deg, cfg.seed));
    add("linear gl2 has degree -1", check_grading(ngl(2), -1, 300, deg, cfg.seed));
    return out;
}

std::vector<Check> suite_casimir(const RunConfig&)
{
    std::vector<Check> out;
    const CasimirImageReport r = casimir_image();
    for (const auto& c : r.verified.checks)
        out.push_back({c.label, c.holds, ""});
    for (const auto& rel : casimir_check())
        out.push_back({rel.label, rel.holds(), ""});
    for (const auto& c : r.literal.checks)
        out.push_back({"printed normalization: " + c.label, c.holds, c.holds ? "holds" : "does not hold", true});
    return out;
}

std::vector<Check> suite_cayley_hamilton(const RunConfig& cfg)
{
    std::vector<Check> out;
    const unsigned nmax = static_cast<unsigned>(std::min(cfg.degree_or(2), 3));
    for (const auto& c : verify_cayley_hamilton(nmax).checks)
        out.push_back({c.label, c.holds, ""});
    return out;
}

std::vector<Check> suite_decoupling(const RunConfig&)
{
    std::vector<Check> out;
    const CoordinateChangeReport r = change_coordinates();
    for (const auto& rel : r.relations)
        out.push_back({rel.label, rel.holds(), rel.holds() ? "" : "got " + r.primed.format(rel.actual)});
    return out;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& out)
{
    using Suite = std::vector<Check> (*)(const RunConfig&);
    const std::vector<std::pair<std::string, Suite>> suites{
        {"jacobi", suite_jacobi},   {"loday", suite_loday},
        {"grading", suite_grading}, {"casimir", suite_casimir},
        {"cayley-hamilton", suite_cayley_hamilton}, {"decoupling", suite_decoupling},
    };
    std::vector<std::pair<std::string, std::vector<Check>>> results;
    for (const auto& [name, fn] : suites)
        if (suite == "all" || suite == name)
            results.emplace_back(name, fn(cfg));
    if (results.empty())
        throw std::invalid_argument("unknown suite '" + suite + "'");

    std::size_t violations = 0;
    Json j = Json::array();
    for (const auto& [name, checks] : results) {
        Json cj = Json::array();
        for (const auto& c : checks) {
            violations += c.pass || c.note ? 0 : 1;
            if (cfg.json())
                cj.push_back({{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}, {"note", c.note}});
            else if (cfg.csv())
                out << name << ",\"" << c.label << "\"," << (c.note ? "note" : c.pass ? "pass" : "fail") << '\n';
            else
                out << (c.note ? "NOTE  " : c.pass ? "PASS  " : "FAIL  ") << name << ": " << c.label
                    << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
        }
        j.push_back({{"suite", name}, {"checks", cj}});
    }
    if (cfg.json())
        out << Json{{"suites", j}, {"violations", violations}}.dump(2) << '\n';
    else if (!cfg.csv())
        out << violations << " violations\n";
    return violations == 0 ? 0 : 1;
}

// ---- classify / ngl ---------------------------------------------------------

int cmd_classify(const RunConfig& cfg, const std::vector<std::string>& coords, double tol, std::ostream& out)
{
    const bool floating = std::any_of(coords.begin(), coords.end(), [](const std::string& s) {
        return s.find_first_of(".eE") != std::string::npos;
    });
    std::string leaf, luna, c, e, f, h;
    if (floating) {
        std::vector<double> v;
        for (const auto& s : coords)
            v.push_back(std::stod(s));
        const auto r = classify_point(v[0], v[1], v[2], v[3], v[4], tol);
        leaf = leaf_name(r), luna = luna_name(r.luna_type);
        c = detail::scalar_string(r.casimir), e = detail::scalar_string(r.e), f = detail::scalar_string(r.f),
        h = detail::scalar_string(r.h);
    } else {
        std::vector<Rational> v;
        for (const auto& s : coords)
            v.push_back(parse_rational(s));
        const auto r = classify_point(v[0], v[1], v[2], v[3], v[4]);
        leaf = leaf_name(r), luna = luna_name(r.luna_type);
        c = to_string(r.casimir), e = to_string(r.e), f = to_string(r.f), h = to_string(r.h);
    }
    if (cfg.json())
        out << Json{{"leaf", leaf}, {"luna_type", luna}, {"c_sl2", c}, {"E'", e}, {"F'", f}, {"H'", h}}.dump(2)
            << '\n';
    else
        out << leaf << ", " << luna << " (c_sl2 = " << c << ", E' = " << e << ", F' = " << f << ", H' = " << h
            << ")\n";
    return 0;
}

int cmd_ngl(const RunConfig& cfg, int n, const std::string& constants, std::ostream& out)
{
    StructureConstants sc = matrix_algebra(n);
    if (!constants.empty()) {
        std::ifstream in(constants);
        if (!in)
            throw std::runtime_error("cannot open " + constants);
        sc = structure_constants_from_json(Json::parse(in));
    }
    const BracketRule rule = linear_rule(sc);
    const CommutatorReport r = check_degree1_commutator(sc);
    if (cfg.json()) {
        Json brackets = Json::array();
        for (int i = 1; i <= sc.dim(); ++i)
            for (int j = 1; j <= sc.dim(); ++j)
                brackets.push_back({{"a", sc.names()[i - 1]},
                                    {"b", sc.names()[j - 1]},
                                    {"bracket", format(rule.alphabet(), necklace_bracket(rule, necklace_of(Word{x_(i)}),
                                                                                       necklace_of(Word{x_(j)})))}});
        out << Json{{"dim", sc.dim()},
                    {"brackets", brackets},
                    {"pairs_checked", r.pairs_checked},
                    {"mismatches", r.mismatches}}
                   .dump(2)
            << '\n';
    } else {
        for (int i = 1; i <= sc.dim(); ++i)
            for (int j = 1; j <= sc.dim(); ++j)
                out << "{" << sc.names()[i - 1] << ", " << sc.names()[j - 1] << "} = "
                    << format(rule.alphabet(),
                              necklace_bracket(rule, necklace_of(Word{x_(i)}), necklace_of(Word{x_(j)})))
                    << '\n';
        out << r.pairs_checked << " pairs, " << r.mismatches.size() << " mismatches with the commutator\n";
        for (const auto& m : r.mismatches)
            out << "  " << m << '\n';
    }
    return r.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Necklace Lie algebras: brackets, sl2 decompositions and trace calculus"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
    app.add_option("--max-degree", cfg.max_degree, "Degree bound (command specific default)");
    app.add_option("--output", cfg.output, "Write output to this file instead of stdout");
    app.fallthrough();

    int d = 1;
    auto* dims = app.add_subcommand("dims", "Necklace dimensions: formula against enumeration");
    dims->add_option("--d", d, "Number of pairs x_i, x_i*")->capture_default_str();

    std::string rule_name = "canonical", constants, w1, w2;
    auto* bracket = app.add_subcommand("bracket", "Necklace bracket of two elements");
    bracket->add_option("--rule", rule_name, "canonical or ngl<n>")->capture_default_str();
    bracket->add_option("--d", d, "Pairs for the canonical rule")->capture_default_str();
    bracket->add_option("--constants", constants, "JSON structure constants for a linear rule");
    bracket->add_option("w1", w1)->required();
    bracket->add_option("w2", w2)->required();

    auto* t1 = app.add_subcommand("table1", "sl2 multiplicities by degree and highest weight");
    auto* t2 = app.add_subcommand("table2", "Poisson brackets of the trace generators for 2x2 matrices");

    unsigned n = 2;
    std::vector<std::string> lambdas;
    auto* center = app.add_subcommand("center", "Centrality of [x,x*]^n and the 3x3 witness");
    center->add_option("--d", d)->capture_default_str();
    center->add_option("--n", n)->capture_default_str();
    center->add_option("--lambda", lambdas, "Witness parameters (default 1)");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run an invariant suite; nonzero exit on any violation");
    verify->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"jacobi", "loday", "grading", "casimir", "cayley-hamilton", "decoupling", "all"}));

    std::vector<std::string> coords;
    double tol = 1e-9;
    auto* classify = app.add_subcommand("classify", "Symplectic leaf and Luna stratum of (X, Y, E, F, H)");
    classify->add_option("coords", coords, "X Y E F H")->required()->expected(5);
    classify->add_option("--tolerance", tol, "Zero tolerance for decimal input")->capture_default_str();

    int ngl_n = 2;
    auto* ngl_cmd = app.add_subcommand("ngl", "Degree-1 brackets of a linear double bracket");
    ngl_cmd->add_option("--n", ngl_n, "Matrix size")->capture_default_str();
    ngl_cmd->add_option("--constants", constants, "JSON structure constants instead of matrices");

    int dn = 6;
    auto* decompose = app.add_subcommand("decompose", "sl2 decomposition of one degree, three ways");
    decompose->add_option("--n", dn)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    std::ostringstream out;
    int status = 0;
    try {
        if (*dims)
            status = cmd_dims(cfg, d, out);
        else if (*bracket)
            status = cmd_bracket(cfg, make_rule(rule_name, d, constants), w1, w2, out);
        else if (*t1)
            status = cmd_table1(cfg, out);
        else if (*t2)
            status = cmd_table2(cfg, out);
        else if (*center)
            status = cmd_center(cfg, d, n, lambdas, out);
        else if (*verify)
            status = cmd_verify(cfg, suite, out);
        else if (*classify)
            status = cmd_classify(cfg, coords, tol, out);
        else if (*ngl_cmd)
            status = cmd_ngl(cfg, ngl_n, constants, out);
        else if (*decompose)
            status = cmd_decompose(cfg, dn, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    if (cfg.output.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(cfg.output);
        if (!f) {
            std::cerr << "error: cannot write " << cfg.output << '\n';
            return 2;
        }
        f << out.str();
    }
    return status;
}
