// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact (rational arithmetic); no floating tolerance is used anywhere.

#include "necklace/necklace.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace necklace;

namespace {

constexpr std::uint64_t kSeed = 0;
constexpr int kTable1Rows = 8;
constexpr int kBruteForceMax = 12;
constexpr int kDimsMax = 12;
constexpr std::size_t kKontsevichTotalD1 = 10;
constexpr std::size_t kKontsevichTotalD2 = 8;
constexpr int kKontsevichSamplesD2 = 500;
constexpr std::size_t kJacobiTotal = 5;
constexpr int kJacobiSamplesGl2 = 200;
constexpr int kPerturbedTables = 50;

// Criteria expected to be red, with the reason recorded next to the check.
const std::set<int> kKnownRed = {9};

struct Result {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        pass = pass && ok;
        notes.push_back((ok ? "ok: " : "FAILED: ") + what);
    }
};

// ---- oracles ----------------------------------------------------------------

using Mat = std::vector<std::vector<Rational>>;

Mat mat_mul(const Mat& a, const Mat& b)
{
    const std::size_t n = a.size();
    Mat c(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

Rational mat_trace(const Mat& a)
{
    Rational t = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        t += a[i][i];
    return t;
}

// Words over an alphabet of size q as base-q integers; counts the words equal
// to their least rotation, bucketed by a per-word statistic.
std::map<int, long> brute_necklaces_by(int q, int k, const std::function<int(const std::vector<int>&)>& stat)
{
    std::map<int, long> out;
    long total = 1;
    for (int i = 0; i < k; ++i)
        total *= q;
    std::vector<int> w(static_cast<std::size_t>(k));
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = k - 1; i >= 0; --i) {
            w[static_cast<std::size_t>(i)] = static_cast<int>(c % q);
            c /= q;
        }
        bool least = true;
        for (int r = 1; r < k && least; ++r)
            for (int i = 0; i < k; ++i) {
                const int a = w[static_cast<std::size_t>((i + r) % k)], b = w[static_cast<std::size_t>(i)];
                if (a != b) {
                    least = a > b;
                    break;
                }
            }
        if (least)
            ++out[stat(w)];
    }
    return out;
}

// ---- criteria ---------------------------------------------------------------

const int reference_table1[8][9] = {
    {0, 0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 0, 2, 0, 1},
    {0, 1, 0, 0, 0, 2, 0, 2, 0}, {1, 0, 0, 0, 3, 0, 3, 0, 3},
};

Result ac1()
{
    Result r;
    const auto rows = table1(kTable1Rows);
    int matched = 0;
    for (int n = 1; n <= kTable1Rows; ++n)
        for (int col = 0; col < 9; ++col)
            matched += rows[static_cast<std::size_t>(n - 1)].multiplicity(8 - col) == reference_table1[n - 1][col];
    r.require(matched == 72, "Table 1 cells matched: " + std::to_string(matched) + "/72");

    int agree = 0;
    for (int n = 1; n <= kBruteForceMax; ++n) {
        const WeightDecomposition formula = decomposition_from_formula(n);
        bool ok = formula == decompose_bruteforce(n);
        // Oracle: weight-space sizes of all necklaces by brute force, letter 0 = x, 1 = x*.
        const auto dims = brute_necklaces_by(2, n, [](const std::vector<int>& w) {
            int wt = 0;
            for (int l : w)
                wt += l == 1 ? 1 : -1;
            return wt;
        });
        for (int m = 0; 2 * m <= n; ++m) {
            const int k = n - 2 * m;
            const long above = dims.count(k + 2) ? dims.at(k + 2) : 0;
            const long here = dims.count(k) ? dims.at(k) : 0;
            ok = ok && formula.multiplicity(k) == here - above;
        }
        agree += ok;
    }
    r.require(agree == kBruteForceMax, "formula = brute force in degrees 1.." + std::to_string(kBruteForceMax) +
                                           ": " + std::to_string(agree) + " degrees agree");
    return r;
}

Result ac2()
{
    Result r;
    for (int d : {1, 2}) {
        int ok = 0;
        for (int k = 0; k <= kDimsMax; ++k) {
            const Integer f = necklace_dimension(d, k);
            const std::size_t e = enumerate_necklaces(d, static_cast<std::size_t>(k)).size();
            long brute = 1;
            if (k > 0) {
                brute = 0;
                for (const auto& [s, c] : brute_necklaces_by(2 * d, k, [](const std::vector<int>&) { return 0; }))
                    brute += c;
            }
            ok += f == Integer(static_cast<unsigned long>(e)) && f == Integer(brute);
        }
        r.require(ok == kDimsMax + 1, "d=" + std::to_string(d) + ": formula = FKM = brute force for k <= " +
                                          std::to_string(kDimsMax));
    }
    r.require(necklace_dimension(1, 6) == 14 && necklace_dimension(2, 2) == 10, "(1,6) -> 14, (2,2) -> 10");
    return r;
}

const char* const printed_table2[5][5] = {
    {"0", "2", "0", "2*tr(x*)", "tr(x)"},
    {"-2", "0", "-2*tr(x)", "0", "-tr(x*)"},
    {"0", "2*tr(x)", "0", "4*tr(xx*)", "2*tr(x^2)"},
    {"-2*tr((x*)^2)", "0", "-4*tr(xx*)", "0", "-2*tr((x*)^2)"},
    {"-tr(x)", "tr(x*)", "-2*tr(x^2)", "2*tr((x*)^2)", "0"},
};

Result ac3()
{
    Result r;
    const TraceTable t = table2();
    const Alphabet a = Alphabet::symplectic(1);
    const VariableNames names = symbol_names(a, standard_trace_generators(1, 2));
    std::vector<std::pair<std::size_t, std::size_t>> off;
    bool antisym = true, basis = true;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            antisym = antisym && t[i][j].poly == -t[j][i].poly;
            basis = basis && t[i][j].in_generator_basis;
            if (t[i][j].poly != names.parse(printed_table2[i][j]))
                off.emplace_back(i, j);
        }
    r.require(basis, "all 25 entries lie in the generator basis");
    r.require(antisym, "engine table exactly antisymmetric");
    const bool one_cell = off.size() == 1 && off[0] == std::make_pair<std::size_t, std::size_t>(3, 0);
    r.require(one_cell, std::to_string(off.size()) + " cell(s) differ from the printed table");
    if (one_cell) {
        const Polynomial e = t[3][0].poly;
        r.require(names.format(e) == "-2*tr(x*)" && e == -names.parse(printed_table2[0][3]),
                  "audited cell {tr((x*)^2), tr(x)} = -2*tr(x*), the antisymmetric counterpart of 2*tr(x*)");
    }
    bool jacobi = true;
    try {
        const PoissonPolyAlgebra alg = table2_algebra();
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                for (std::size_t k = 0; k < 5; ++k)
                    jacobi = jacobi && alg.jacobiator(alg.generator(i), alg.generator(j), alg.generator(k)).is_zero();
    } catch (const std::exception&) {
        jacobi = false;
    }
    r.require(jacobi, "Jacobi on all generator triples");
    // Oracle: every entry equals the bracket of traces computed on matrix entries.
    const PoissonPolyAlgebra rep = representation_space_algebra(BracketRule::canonical(1), 2);
    const GenericMatrices g = generic_matrices(1, 2);
    const std::vector<Necklace> gens = standard_trace_generators(1, 2);
    bool morphism = true;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            morphism = morphism && evaluate_on_generic(t[i][j], g) ==
                                       rep.poisson(trace_of(NecklaceElement::term(gens[i]), g),
                                                   trace_of(NecklaceElement::term(gens[j]), g));
    r.require(morphism, "entries agree with the representation-space bracket of traces");
    return r;
}

Result ac4()
{
    Result r;
    const BracketRule c1 = BracketRule::canonical(1);
    std::vector<std::vector<Necklace>> by_deg;
    for (std::size_t k = 0; k <= kKontsevichTotalD1; ++k)
        by_deg.push_back(enumerate_necklaces(c1.alphabet(), k));
    std::size_t pairs = 0, bad = 0;
    for (std::size_t p = 0; p <= kKontsevichTotalD1; ++p)
        for (std::size_t q = 0; p + q <= kKontsevichTotalD1; ++q)
            for (const Necklace& a : by_deg[p])
                for (const Necklace& b : by_deg[q]) {
                    ++pairs;
                    bad += kontsevich_bracket(a, b, 1) != necklace_bracket(c1, a, b);
                }
    r.require(bad == 0, "d=1, total degree <= 10: " + std::to_string(pairs) + " pairs, " + std::to_string(bad) +
                            " disagreements");

    const BracketRule c2 = BracketRule::canonical(2);
    WordSampler ws(kSeed);
    bad = 0;
    for (int s = 0; s < kKontsevichSamplesD2; ++s) {
        const std::size_t total = ws.integer(0, kKontsevichTotalD2);
        const std::size_t la = ws.integer(0, total);
        const Necklace a(ws.word(c2.alphabet(), la)), b(ws.word(c2.alphabet(), total - la));
        bad += kontsevich_bracket(a, b, 2) != necklace_bracket(c2, a, b);
    }
    r.require(bad == 0, "d=2, 500 seeded pairs of total degree <= 8: " + std::to_string(bad) + " disagreements");
    return r;
}

Result ac5()
{
    Result r;
    const BracketRule c1 = BracketRule::canonical(1);
    std::vector<std::vector<Word>> words;
    for (std::size_t k = 0; k <= kJacobiTotal; ++k)
        words.push_back(enumerate_words(c1.alphabet(), k));
    std::size_t triples = 0, bad = 0;
    for (std::size_t la = 0; la <= kJacobiTotal; ++la)
        for (std::size_t lb = 0; la + lb <= kJacobiTotal; ++lb)
            for (std::size_t lc = 0; la + lb + lc <= kJacobiTotal; ++lc)
                for (const Word& a : words[la])
                    for (const Word& b : words[lb])
                        for (const Word& c : words[lc]) {
                            ++triples;
                            bad += !verify_double_jacobi(c1, a, b, c).is_zero();
                        }
    r.require(bad == 0 && triples == 1023,
              "canonical d=1: " + std::to_string(triples) + " triples, " + std::to_string(bad) + " nonzero");

    const BracketRule gl2 = ngl(2);
    WordSampler ws(kSeed);
    bad = 0;
    for (int s = 0; s < kJacobiSamplesGl2; ++s) {
        const std::size_t total = ws.integer(0, kJacobiTotal);
        const std::size_t la = ws.integer(0, total), lb = ws.integer(0, total - la);
        const Word a = ws.word(gl2.alphabet(), la), b = ws.word(gl2.alphabet(), lb),
                   c = ws.word(gl2.alphabet(), total - la - lb);
        bad += !verify_double_jacobi(gl2, a, b, c).is_zero();
    }
    r.require(bad == 0, "gl2 linear rule: 200 seeded triples, " + std::to_string(bad) + " nonzero");
    return r;
}

Result ac6()
{
    Result r;
    for (int d : {1, 2}) {
        const LowDegreeReport rep = check_low_degree_structure(d);
        for (const auto& c : rep.checks)
            r.require(c.holds, "d=" + std::to_string(d) + ": " + c.label);
    }
    // Oracle for d=2: the images of degree 2 in sp(4) as J*Hess(q) are closed
    // under matrix commutators with the bracket, up to one global sign.
    const BracketRule rule = BracketRule::canonical(2);
    const std::vector<Necklace> basis = enumerate_necklaces(rule.alphabet(), 2);
    const auto ham = [](const NecklaceElement& e) {
        const Polynomial q = to_trace_generators(e, 2, 1).poly;
        Mat h(4, std::vector<Rational>(4));
        for (const auto& [m, c] : q) {
            const auto& p = m.powers();
            if (p.size() == 1)
                h[p[0].first][p[0].first] += 2 * c;
            else {
                h[p[0].first][p[1].first] += c;
                h[p[1].first][p[0].first] += c;
            }
        }
        Mat j(4, std::vector<Rational>(4));
        j[0][1] = j[2][3] = 1;
        j[1][0] = j[3][2] = -1;
        return mat_mul(j, h);
    };
    int sign = 0;
    bool ok = basis.size() == 10;
    for (const Necklace& u : basis)
        for (const Necklace& v : basis) {
            const Mat mu = ham(NecklaceElement::term(u)), mv = ham(NecklaceElement::term(v));
            const Mat uv = mat_mul(mu, mv), vu = mat_mul(mv, mu);
            const Mat b = ham(necklace_bracket(rule, u, v));
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t k = 0; k < 4; ++k) {
                    const Rational comm = uv[i][k] - vu[i][k];
                    for (int s : {1, -1})
                        if (sign == 0 && comm != 0 && b[i][k] == s * comm)
                            sign = s;
                    ok = ok && b[i][k] == sign * comm;
                }
        }
    r.require(ok && sign != 0, "d=2: degree 2 matches sp(4) matrix commutators (10-dimensional)");
    return r;
}

Result ac7()
{
    Result r;
    for (unsigned n : {2u, 3u}) {
        const GradedBracketReport rep = center_check(1, n, 6);
        r.require(rep.ok(), "c_" + std::to_string(n) + " brackets to zero with all " +
                                std::to_string(rep.samples_checked) + " necklaces of degree <= 6");
    }
    for (unsigned n = 1; n <= 4; ++n)
        for (int lam : {1, 2, -3}) {
            Rational expected = 0, ln = 1, m2 = 1;
            for (unsigned i = 0; i < n; ++i)
                ln *= lam, m2 *= -2;
            expected = 2 * ln + m2 * ln;
            // Oracle: the trace of (XX* - X*X)^n on plain matrices.
            const Rational l = lam;
            const Mat x = {{0, l, 0}, {0, 0, -l}, {0, 0, 0}}, xs = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
            const Mat p = mat_mul(x, xs), q = mat_mul(xs, x);
            Mat c(3, std::vector<Rational>(3)), acc = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    c[i][j] = p[i][j] - q[i][j];
            for (unsigned i = 0; i < n; ++i)
                acc = mat_mul(acc, c);
            const Rational got = center_witness(n, l);
            r.require(got == expected && got == mat_trace(acc),
                      "witness(n=" + std::to_string(n) + ", lambda=" + std::to_string(lam) + ") = " + to_string(got));
        }
    r.require(center_element(1, 1).is_zero(), "c_1 projects to 0");
    return r;
}

Result ac8()
{
    Result r;
    const IdentityReport ch = verify_cayley_hamilton(2);
    for (const auto& c : ch.checks)
        r.require(c.holds, c.label + " (exact, 8 indeterminates)");
    // Oracle: the same identities at seeded rational points with plain matrices.
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<int> pick(-7, 7);
    bool ok = true;
    for (int s = 0; s < 50; ++s) {
        Mat x(2, std::vector<Rational>(2)), xs(2, std::vector<Rational>(2));
        for (auto* m : {&x, &xs})
            for (auto& row : *m)
                for (auto& v : row)
                    v = make_rational(pick(rng), 1 + (pick(rng) + 7) % 3);
        const Mat p = mat_mul(x, xs), q = mat_mul(xs, x);
        Mat c(2, std::vector<Rational>(2));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                c[i][j] = p[i][j] - q[i][j];
        const Mat c2 = mat_mul(c, c), c3 = mat_mul(c2, c), c4 = mat_mul(c3, c), c5 = mat_mul(c4, c);
        ok = ok && mat_trace(c4) == Rational(1, 2) * mat_trace(c2) * mat_trace(c2) && mat_trace(c3) == 0 &&
             mat_trace(c5) == 0;
    }
    r.require(ok, "identities hold at 50 seeded rational points");
    return r;
}

Result ac9()
{
    Result r;
    const CasimirImageReport img = casimir_image();
    // Literal clauses of the criterion. They are false: tr([x,x*]^2) equals
    // -2 times the generator expression, so c_2 maps to 2*c_sl2.
    for (const auto& c : img.literal.checks)
        if (c.label.rfind("c_4", 0) != 0)
            r.require(c.holds, c.label);
    // The corrected statements.
    for (const auto& c : img.verified.checks)
        r.notes.push_back((c.holds ? "corrected, holds: " : "corrected, FAILS: ") + c.label);
    // Oracle point for the normalization: x = e12, x* = e21.
    {
        const Mat x = {{0, 1}, {0, 0}}, xs = {{0, 0}, {1, 0}};
        const Mat p = mat_mul(x, xs), q = mat_mul(xs, x);
        Mat c(2, std::vector<Rational>(2));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                c[i][j] = p[i][j] - q[i][j];
        const Rational trc2 = mat_trace(mat_mul(c, c));
        const Rational cas = evaluate(sl2_casimir(), std::vector<Rational>{0, 0, 0, 0, 1});
        r.notes.push_back("at x = e12, x* = e21: tr([x,x*]^2) = " + to_string(trc2) + ", c_sl2 = " + to_string(cas));
    }
    for (const auto& rel : casimir_check())
        r.require(rel.holds(), rel.label);
    const CoordinateChangeReport cc = change_coordinates();
    for (const auto& rel : cc.relations)
        r.require(rel.holds(), rel.label);
    return r;
}

Result ac10()
{
    Result r;
    // Oracle: matrix commutators of unit matrices.
    const BracketRule rule = ngl(2);
    int matched = 0;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            const auto unit = [](int k) {
                Mat m(2, std::vector<Rational>(2));
                m[static_cast<std::size_t>((k - 1) / 2)][static_cast<std::size_t>((k - 1) % 2)] = 1;
                return m;
            };
            const Mat a = unit(i), b = unit(j), ab = mat_mul(a, b), ba = mat_mul(b, a);
            NecklaceElement expected;
            for (int k = 1; k <= 4; ++k) {
                const std::size_t rr = static_cast<std::size_t>((k - 1) / 2), cc = static_cast<std::size_t>((k - 1) % 2);
                expected.add_term(Necklace(Word{x_(k)}), ab[rr][cc] - ba[rr][cc]);
            }
            matched += necklace_bracket(rule, necklace_of(Word{x_(i)}), necklace_of(Word{x_(j)})) == expected;
        }
    r.require(matched == 16, "ngl(2) degree-1 brackets = matrix commutators: " + std::to_string(matched) + "/16");

    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<int> idx(1, 4), num(1, 5);
    int rejected = 0, truly_bad = 0;
    for (int t = 0; t < kPerturbedTables; ++t) {
        StructureConstants sc = matrix_algebra(2);
        const int i = idx(rng), j = idx(rng), k = idx(rng);
        sc.set(i, j, k, sc.get(i, j, k) + make_rational(num(rng), num(rng)));
        // Oracle: associativity via left multiplication operators L_i L_j = Σ a(i,j,t) L_t.
        bool assoc = true;
        const auto L = [&](int a) {
            Mat m(4, std::vector<Rational>(4));
            for (int b = 1; b <= 4; ++b)
                for (int c = 1; c <= 4; ++c)
                    m[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(b - 1)] = sc.get(a, b, c);
            return m;
        };
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b) {
                Mat rhs(4, std::vector<Rational>(4));
                for (int s = 1; s <= 4; ++s) {
                    const Mat ls = L(s);
                    for (std::size_t u = 0; u < 4; ++u)
                        for (std::size_t v = 0; v < 4; ++v)
                            rhs[u][v] += sc.get(a, b, s) * ls[u][v];
                }
                assoc = assoc && mat_mul(L(a), L(b)) == rhs;
            }
        truly_bad += !assoc;
        try {
            sc.validate();
        } catch (const std::invalid_argument&) {
            ++rejected;
        }
    }
    r.require(truly_bad == kPerturbedTables, std::to_string(truly_bad) + "/50 perturbed tables are non-associative");
    r.require(rejected == kPerturbedTables, "validator rejects " + std::to_string(rejected) + "/50");
    return r;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"Table 1 reproduction", ac1},      {"Hilbert series", ac2},          {"Table 2 reproduction", ac3},
        {"bracket oracle equivalence", ac4}, {"double Jacobi", ac5},           {"low-degree isomorphisms", ac6},
        {"center", ac7},                    {"Cayley-Hamilton consequences", ac8},
        {"Casimir", ac9},                   {"linear brackets", ac10},
    };
    std::set<int> red;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Result res;
        try {
            res = criteria[i].second();
        } catch (const std::exception& e) {
            res.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const int id = static_cast<int>(i + 1);
        if (!res.pass)
            red.insert(id);
        std::printf("AC%-2d %s  %s (%.2fs)\n", id, res.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), secs);
        for (const auto& n : res.notes)
            std::printf("       %s\n", n.c_str());
    }
    std::printf("\n%zu/%zu criteria pass\n", criteria.size() - red.size(), criteria.size());
    if (red == kKnownRed) {
        std::printf("failing set matches the recorded known-red set {AC9}: its literal claims "
                    "tr([x,x*]^2) = generator expression and c_2 -> -c_sl2 are false by a factor -2\n");
        return 0;
    }
    std::printf("failing set differs from the recorded known-red set\n");
    return 1;
}
