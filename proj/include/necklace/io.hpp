#pragma once

#include "necklace/linear_necklace.hpp"
#include "necklace/poisson_poly.hpp"
#include "necklace/sl2_module.hpp"
#include "necklace/trace_calculus.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace necklace {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings; plain JSON integers are accepted on input.
inline Json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

/// {"dim": n, "names": [...], "a": [[i, j, k, "p/q"], ...]}; omitted
/// entries are zero and "names" is optional.
inline Json structure_constants_to_json(const StructureConstants& sc)
{
    Json a = Json::array();
    for (const auto& [idx, v] : sc.entries())
        a.push_back({idx[0], idx[1], idx[2], rational_to_json(v)});
    return {{"dim", sc.dim()}, {"names", sc.names()}, {"a", a}};
}

inline StructureConstants structure_constants_from_json(const Json& j)
{
    const int dim = j.at("dim").get<int>();
    std::vector<std::string> names;
    if (j.contains("names"))
        names = j.at("names").get<std::vector<std::string>>();
    StructureConstants sc(dim, names);
    for (const Json& e : j.at("a")) {
        if (!e.is_array() || e.size() != 4)
            throw std::invalid_argument("structure constant entries are [i, j, k, value], got " + e.dump());
        sc.set(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), rational_from_json(e[3]));
    }
    sc.validate();
    return sc;
}

/// {"generators": [...], "table": [[expr, ...], ...]}.
inline Json poisson_algebra_to_json(const PoissonPolyAlgebra& a)
{
    Json table = Json::array();
    for (const auto& row : a.table()) {
        Json r = Json::array();
        for (const Polynomial& p : row)
            r.push_back(a.format(p));
        table.push_back(r);
    }
    return {{"generators", a.names().names()}, {"table", table}};
}

inline PoissonPolyAlgebra poisson_algebra_from_json(const Json& j)
{
    const VariableNames names(j.at("generators").get<std::vector<std::string>>());
    PoissonPolyAlgebra::Table t;
    for (const Json& row : j.at("table")) {
        std::vector<Polynomial> r;
        for (const Json& e : row)
            r.push_back(names.parse(e.get<std::string>()));
        t.push_back(std::move(r));
    }
    return PoissonPolyAlgebra(names.names(), std::move(t));
}

/// Rows by degree, columns by weight from the largest degree down to 0.
inline Json table1_to_json(const std::vector<WeightDecomposition>& rows)
{
    const int top = rows.empty() ? 0 : rows.back().degree;
    Json weights = Json::array();
    for (int w = top; w >= 0; --w)
        weights.push_back(w);
    Json out_rows = Json::array();
    for (const auto& r : rows) {
        Json cells = Json::array();
        for (int w = top; w >= 0; --w)
            cells.push_back(r.multiplicity(w));
        out_rows.push_back({{"degree", r.degree}, {"multiplicities", cells}});
    }
    return {{"weights", weights}, {"rows", out_rows}};
}

inline std::string table1_to_csv(const std::vector<WeightDecomposition>& rows)
{
    const int top = rows.empty() ? 0 : rows.back().degree;
    std::ostringstream os;
    os << "degree";
    for (int w = top; w >= 0; --w)
        os << ',' << w;
    os << '\n';
    for (const auto& r : rows) {
        os << r.degree;
        for (int w = top; w >= 0; --w)
            os << ',' << r.multiplicity(w);
        os << '\n';
    }
    return os.str();
}

inline Json trace_table_to_json(const TraceTable& t)
{
    const Alphabet a = Alphabet::symplectic(1);
    Json out = Json::array();
    for (const auto& row : t) {
        Json r = Json::array();
        for (const GeneratorExpression& e : row)
            r.push_back(format(a, e));
        out.push_back(r);
    }
    return out;
}

} // namespace necklace
