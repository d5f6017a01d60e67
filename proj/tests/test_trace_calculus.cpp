#include "necklace/poisson_poly.hpp"
#include "necklace/sampling.hpp"
#include "necklace/trace_calculus.hpp"

#include <gtest/gtest.h>

using namespace necklace;

namespace {

const Alphabet A1 = Alphabet::symplectic(1);

NecklaceElement nk(const char* s) { return parse_necklace_element(A1, s); }

// Plain rational matrices, independent of Matrix<T>.
using Mat = std::vector<std::vector<Rational>>;

Mat mul(const Mat& a, const Mat& b)
{
    const std::size_t n = a.size();
    Mat c(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

Rational trace(const Mat& a)
{
    Rational t = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        t += a[i][i];
    return t;
}

Mat random_matrix(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<int> pick(-5, 5);
    Mat m(n, std::vector<Rational>(n));
    for (auto& row : m)
        for (auto& v : row)
            v = Rational(pick(rng));
    return m;
}

// The published bracket table of the five generators, cell by cell as printed.
const char* const printed_table2[5][5] = {
    {"0", "2", "0", "2*tr(x*)", "tr(x)"},
    {"-2", "0", "-2*tr(x)", "0", "-tr(x*)"},
    {"0", "2*tr(x)", "0", "4*tr(xx*)", "2*tr(x^2)"},
    {"-2*tr((x*)^2)", "0", "-4*tr(xx*)", "0", "-2*tr((x*)^2)"},
    {"-tr(x)", "tr(x*)", "-2*tr(x^2)", "2*tr((x*)^2)", "0"},
};

} // namespace

TEST(GenericMatrices, ShapesAndNames)
{
    const GenericMatrices g = generic_matrices(1, 2);
    EXPECT_EQ(g.mats.size(), 2u);
    EXPECT_EQ(g.names.size(), 8u);
    EXPECT_EQ(g.names.name(0), "x_11");
    EXPECT_EQ(g.names.name(6), "x*_21");
    EXPECT_EQ(generic_matrices(1, 1).names.size(), 2u);
    EXPECT_EQ(generic_matrices(2, 2).names.size(), 16u);
    EXPECT_EQ(generic_matrices(2, 2).names.name(4), "x1*_11");
}

TEST(TraceOf, BasicValues)
{
    const GenericMatrices g = generic_matrices(1, 2);
    EXPECT_EQ(g.names.format(trace_of(nk("x"), g)), "x_11 + x_22");
    EXPECT_EQ(trace_of(nk("1"), g), Polynomial(2));
    EXPECT_EQ(trace_of(nk("3"), generic_matrices(1, 3)), Polynomial(9));
}

TEST(TraceOf, AgreesWithNumericMatrices)
{
    const GenericMatrices g = generic_matrices(1, 3);
    std::mt19937_64 rng(7);
    WordSampler ws(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Mat x = random_matrix(rng, 3), xs = random_matrix(rng, 3);
        std::vector<Rational> values;
        for (const Mat* m : {&x, &xs})
            for (const auto& row : *m)
                values.insert(values.end(), row.begin(), row.end());
        const Word w = ws.word_up_to(A1, 1, 6);
        Mat p = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        for (Letter l : w)
            p = mul(p, l.starred ? xs : x);
        EXPECT_EQ(evaluate(trace_of(necklace_of(w), g), values), trace(p));
    }
}

TEST(TraceOf, CommutatorsVanish)
{
    const GenericMatrices g = generic_matrices(1, 2);
    WordSampler ws(3);
    for (int trial = 0; trial < 30; ++trial) {
        const Word a = ws.word_up_to(A1, 1, 4), b = ws.word_up_to(A1, 1, 4);
        const Polynomial ab = trace_of(NecklaceElement::term(Necklace(a * b)), g);
        EXPECT_EQ(ab, trace_of(NecklaceElement::term(Necklace(b * a)), g));
        // Through Matrix<T> directly, without the necklace canonicalization.
        const auto m = word_matrix(a * b, g.alphabet, g.mats).trace();
        EXPECT_EQ(m, word_matrix(b * a, g.alphabet, g.mats).trace());
        EXPECT_EQ(m, ab);
    }
}

TEST(InducedBracket, ExamplesAtTwo)
{
    const auto show = [](const GeneratorExpression& e) { return format(A1, e); };
    EXPECT_EQ(show(induced_bracket(nk("x"), nk("x*"), 2)), "2");
    EXPECT_EQ(show(induced_bracket(nk("xx"), nk("x*x*"), 2)), "4*tr(xx*)");
    EXPECT_EQ(show(induced_bracket(nk("xx*"), nk("xx"), 2)), "-2*tr(x^2)");
    EXPECT_TRUE(induced_bracket(nk("xx"), nk("x*x*"), 2).in_generator_basis);
}

TEST(InducedBracket, HigherDegreeIsFlagged)
{
    const GeneratorExpression e = induced_bracket(nk("xxx"), nk("x*x*"), 2);
    EXPECT_FALSE(e.in_generator_basis);
    EXPECT_EQ(format(A1, e), "6*tr(x^2x*)");
}

TEST(Table2, MatchesPrintedTableUpToOneCell)
{
    const TraceTable t = table2();
    const std::vector<Necklace> gens = standard_trace_generators(1, 2);
    const VariableNames names = symbol_names(A1, gens);
    ASSERT_EQ(t.size(), 5u);
    int mismatches = 0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            EXPECT_TRUE(t[i][j].in_generator_basis);
            EXPECT_EQ(t[i][j].poly, -t[j][i].poly);
            if (t[i][j].poly != names.parse(printed_table2[i][j])) {
                ++mismatches;
                EXPECT_EQ(i, 3u);
                EXPECT_EQ(j, 0u);
                EXPECT_EQ(names.format(t[i][j].poly), "-2*tr(x*)");
                // The antisymmetric counterpart in the printed table.
                EXPECT_EQ(t[i][j].poly, -names.parse(printed_table2[j][i]));
            }
        }
    EXPECT_EQ(mismatches, 1);
}

TEST(Table2, MorphismIntoRepresentationSpace)
{
    // tr{w1, w2} = {tr w1, tr w2} with the bracket on matrix entries.
    const BracketRule rule = BracketRule::canonical(1);
    const PoissonPolyAlgebra rep = representation_space_algebra(rule, 2);
    const GenericMatrices g = generic_matrices(1, 2);
    const auto check = [&](const Necklace& a, const Necklace& b) {
        const NecklaceElement ea = NecklaceElement::term(a), eb = NecklaceElement::term(b);
        EXPECT_EQ(trace_of(necklace_bracket(rule, ea, eb), g), rep.poisson(trace_of(ea, g), trace_of(eb, g)))
            << A1.format(a.word()) << " , " << A1.format(b.word());
    };
    const std::vector<Necklace> gens = standard_trace_generators(1, 2);
    for (const Necklace& a : gens)
        for (const Necklace& b : gens)
            check(a, b);
    WordSampler ws(0);
    for (int trial = 0; trial < 40; ++trial)
        check(Necklace(ws.word_up_to(A1, 1, 4)), Necklace(ws.word_up_to(A1, 1, 4)));
}

TEST(Table2, RepresentationBracketOnEntries)
{
    const PoissonPolyAlgebra rep = representation_space_algebra(BracketRule::canonical(1), 2);
    // {x_ij, x*_uv} = δ_uj δ_iv
    EXPECT_EQ(rep.poisson(rep.generator("x_12"), rep.generator("x*_21")), Polynomial(1));
    EXPECT_TRUE(rep.poisson(rep.generator("x_12"), rep.generator("x*_12")).is_zero());
    EXPECT_TRUE(rep.poisson(rep.generator("x_11"), rep.generator("x_22")).is_zero());
}

TEST(InducedBracket, AbelianizationIsSymplecticPoisson)
{
    // Oracle: {f, g} = f_x g_x* - f_x* g_x on monomials x^a x*^b.
    const auto symplectic = [](const Polynomial& f, const Polynomial& g) {
        return derivative(f, 0) * derivative(g, 1) - derivative(f, 1) * derivative(g, 0);
    };
    WordSampler ws(5);
    for (int trial = 0; trial < 60; ++trial) {
        const NecklaceElement a = necklace_of(ws.word_up_to(A1, 0, 6));
        const NecklaceElement b = necklace_of(ws.word_up_to(A1, 0, 6));
        const GeneratorExpression got = induced_bracket(a, b, 1);
        EXPECT_TRUE(got.in_generator_basis);
        EXPECT_EQ(got.poly, symplectic(to_trace_generators(a, 1, 1).poly, to_trace_generators(b, 1, 1).poly));
    }
}

TEST(CayleyHamilton, IdentitiesHold)
{
    const IdentityReport r = verify_cayley_hamilton(2);
    EXPECT_EQ(r.checks.size(), 5u);
    for (const auto& c : r.checks)
        EXPECT_TRUE(c.holds) << c.label;
    EXPECT_THROW(verify_cayley_hamilton(4), std::length_error);
}

TEST(CasimirImage, VerifiedIdentities)
{
    const CasimirImageReport r = casimir_image();
    EXPECT_EQ(r.verified.checks.size(), 8u);
    for (const auto& c : r.verified.checks)
        EXPECT_TRUE(c.holds) << c.label;
}

TEST(CasimirImage, PrintedNormalizationIsOffByMinusTwo)
{
    // Oracle point: x = e12, x* = e21 gives C = diag(1,-1), tr(C^2) = 2,
    // while X = Y = E = F = 0, H = 1 gives c_sl2 = 1.
    const Polynomial cas = sl2_casimir();
    EXPECT_EQ(evaluate(cas, std::vector<Rational>{0, 0, 0, 0, 1}), 1);
    const GenericMatrices g = generic_matrices(1, 2);
    std::vector<Rational> point(8, 0);
    point[g.names.id("x_12")] = 1;
    point[g.names.id("x*_21")] = 1;
    EXPECT_EQ(evaluate(trace_of(center_element(1, 2), g), point), 2);

    const CasimirImageReport r = casimir_image();
    for (const auto& c : r.literal.checks)
        EXPECT_FALSE(c.holds) << c.label;
}

TEST(CenterWitness, ClosedForm)
{
    EXPECT_EQ(center_witness(2, 1), 6);
    EXPECT_EQ(center_witness(3, 1), -6);
    EXPECT_EQ(center_witness(1, 1), 0);
    // Oracle: tr((XX* - X*X)^n) with plain matrices.
    for (int lam : {1, 2, -3, 5})
        for (unsigned n = 1; n <= 5; ++n) {
            const Rational l = lam;
            const Mat x = {{0, l, 0}, {0, 0, -l}, {0, 0, 0}};
            const Mat xs = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
            const Mat xx = mul(x, xs), sx = mul(xs, x);
            Mat c(3, std::vector<Rational>(3));
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    c[i][j] = xx[i][j] - sx[i][j];
            Mat p = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
            for (unsigned k = 0; k < n; ++k)
                p = mul(p, c);
            EXPECT_EQ(center_witness(n, l), trace(p)) << n << " " << lam;
            EXPECT_EQ(center_witness(n, l), center_witness_expected(n, l));
        }
}

TEST(ClassifyPoint, Examples)
{
    const Rational z = 0, one = 1;
    auto origin = classify_point(z, z, z, z, z);
    EXPECT_EQ(origin.kind, LeafKind::origin);
    EXPECT_EQ(origin.luna_type, LunaType::tau3);
    EXPECT_EQ(leaf_name(origin), "S''_0");

    auto s4 = classify_point(z, z, one, one, z);
    EXPECT_EQ(s4.kind, LeafKind::level_set);
    EXPECT_EQ(s4.casimir, 4);
    EXPECT_EQ(s4.luna_type, LunaType::tau1);
    EXPECT_EQ(leaf_name(s4), "S_4");

    auto cone = classify_point(z, z, one, z, z);
    EXPECT_EQ(cone.kind, LeafKind::nilpotent_cone);
    EXPECT_EQ(cone.luna_type, LunaType::tau2);

    // X = 2, E = 1 gives E' = 0 and everything else zero.
    EXPECT_EQ(classify_point(Rational(2), z, one, z, z).kind, LeafKind::origin);
}

TEST(ClassifyPoint, FloatingTolerance)
{
    EXPECT_EQ(classify_point(0.0, 0.0, 1e-12, 0.0, 0.0).kind, LeafKind::origin);
    EXPECT_EQ(classify_point(0.0, 0.0, 1.0, 1.0, 0.0).kind, LeafKind::level_set);
    EXPECT_EQ(classify_point(0.0, 0.0, 1.0, 1e-12, 0.0, 1e-9).kind, LeafKind::nilpotent_cone);
}

TEST(ClassifyPoint, InvariantsOnSamples)
{
    // Luna type follows the leaf: S''_0 <-> tau3, c = 0 <-> tau2 or tau3.
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> pick(-2, 2);
    for (int t = 0; t < 500; ++t) {
        const Rational X = pick(rng), Y = pick(rng), E = pick(rng), F = pick(rng), H = pick(rng);
        const auto c = classify_point(X, Y, E, F, H);
        const Polynomial cas = sl2_casimir();
        EXPECT_EQ(c.casimir, evaluate(cas, std::vector<Rational>{X, Y, E, F, H}));
        EXPECT_EQ(c.luna_type == LunaType::tau3, c.kind == LeafKind::origin);
        EXPECT_EQ(c.casimir == 0, c.luna_type != LunaType::tau1);
    }
}
