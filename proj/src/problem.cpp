#include "skewtaylor/problem.hpp"

#include <algorithm>
#include <sstream>

#include "skewtaylor/dgalgebra.hpp"
#include "skewtaylor/homres.hpp"
#include "skewtaylor/lattice.hpp"
#include "skewtaylor/taylor.hpp"

namespace skewtaylor {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

FieldDesc parse_field(const std::string& text)
{
    if (text == "rational" || text == "Q")
        return FieldDesc::rationals();
    if (text.rfind("fp:", 0) == 0) {
        try {
            return FieldDesc::prime_field(std::stoull(text.substr(3)));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw input_error("field: expected \"rational\" or \"fp:<prime>\", got \"" + text + "\"");
}

Rational parse_rational_literal(const std::string& text)
{
    std::string t = text;
    t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
    if (t.empty())
        throw input_error("scalar: empty literal");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(t));
        BigInt num(t.substr(0, slash));
        BigInt den(t.substr(slash + 1));
        if (den == 0)
            throw input_error("scalar: zero denominator in \"" + text + "\"");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw input_error("scalar: cannot parse \"" + text + "\"");
    }
}

Scalar scalar_from_json(const json& v, const FieldDesc& field)
{
    if (v.is_number_integer())
        return Scalar::from_int(v.get<long long>(), field);
    if (v.is_string())
        return parse_scalar(v.get<std::string>(), field);
    throw input_error("scalar: expected integer or string literal");
}

IdealData parse_ideal(const json& obj, const FieldDesc& field, std::vector<std::string>& warnings,
                      const std::string& label)
{
    if (!obj.contains("n") || !obj["n"].is_number_integer())
        throw input_error(label + ": missing variable count \"n\"");
    std::size_t n = obj["n"].get<std::size_t>();
    if (n == 0 || n > 64)
        throw input_error(label + ": n out of range");

    std::vector<Scalar> entries;
    if (obj.contains("q")) {
        const json& q = obj["q"];
        if (!q.is_array() || q.size() != n)
            throw input_error(label + ": q must be an n x n array");
        for (std::size_t i = 0; i < n; ++i) {
            if (!q[i].is_array() || q[i].size() != n)
                throw input_error(label + ": q row " + std::to_string(i + 1) + " must have n entries");
            for (std::size_t j = 0; j < n; ++j)
                entries.push_back(scalar_from_json(q[i][j], field));
        }
    } else {
        entries.assign(n * n, Scalar::one(field));
    }

    std::vector<std::int64_t> degrees;
    if (obj.contains("degrees")) {
        for (const auto& d : obj["degrees"])
            degrees.push_back(d.get<std::int64_t>());
    }

    IdealData data;
    data.ring = std::make_shared<QMatrix>(n, field, std::move(entries), std::move(degrees));

    if (!obj.contains("generators") || !obj["generators"].is_array() || obj["generators"].empty())
        throw input_error(label + ": nonempty \"generators\" array required");
    for (const auto& g : obj["generators"]) {
        if (!g.is_array() || g.size() != n)
            throw input_error(label + ": each generator needs n exponents");
        Monomial m = Monomial::unit(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t e = g[i].get<std::int64_t>();
            if (e < 0 || e > kDefaultExponentCap)
                throw input_error(label + ": exponent out of [0, 2^31-1]");
            m.exps[i] = e;
        }
        if (m.is_unit())
            throw input_error(label + ": the unit monomial generates the whole ring");
        data.raw_generators.push_back(m);
    }
    data.mingens = minimal_generators(data.raw_generators);
    MonomialIdeal probe(data.ring, data.raw_generators);
    data.was_minimal = probe.was_minimal();
    if (!data.was_minimal) {
        std::string note = label + ": generators were not minimal; minimalized to {";
        for (std::size_t i = 0; i < data.mingens.size(); ++i)
            note += (i ? ", " : "") + data.mingens[i].str();
        warnings.push_back(note + "}");
    }
    return data;
}

MonomialIdeal minimal_ideal(const IdealData& d)
{
    return MonomialIdeal(d.ring, d.mingens);
}

ojson scalar_list_json(const std::vector<BigInt>& v)
{
    ojson out = ojson::array();
    for (const auto& c : v)
        out.push_back(c.str());
    return out;
}

ojson monomial_json(const Monomial& m)
{
    ojson out = ojson::array();
    for (auto e : m.exps)
        out.push_back(e);
    return out;
}

ojson betti_json(const BettiTable& t, int top)
{
    ojson out = ojson::array();
    for (int i = 0; i <= top; ++i) {
        auto it = t.by_degree.find(i);
        ojson row;
        row["i"] = i;
        row["total"] = t.total(i);
        ojson by = ojson::array();
        if (it != t.by_degree.end()) {
            for (const auto& [alpha, v] : it->second) {
                ojson cell;
                cell["multidegree"] = monomial_json(alpha);
                cell["value"] = v;
                by.push_back(cell);
            }
        }
        row["by_multidegree"] = by;
        out.push_back(row);
    }
    return out;
}

}  // namespace

Scalar parse_scalar(const std::string& text, const FieldDesc& field)
{
    return Scalar::from_rational(parse_rational_literal(text), field);
}

ProblemSpec parse_spec(const std::string& text, const std::optional<std::string>& env_field)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("spec: invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw input_error("spec: top level must be an object");

    ProblemSpec spec;
    if (doc.contains("field"))
        spec.field = parse_field(doc["field"].get<std::string>());
    else if (env_field)
        spec.field = parse_field(*env_field);
    else
        spec.field = FieldDesc::rationals();

    spec.first = parse_ideal(doc, spec.field, spec.warnings, "ideal");
    if (doc.contains("second"))
        spec.second = parse_ideal(doc["second"], spec.field, spec.warnings, "second ideal");

    if (doc.contains("budgets")) {
        const json& b = doc["budgets"];
        if (b.contains("i_max"))
            spec.budgets.i_max = b["i_max"].get<int>();
        if (b.contains("d_max"))
            spec.budgets.d_max = b["d_max"].get<std::int64_t>();
        if (b.contains("series_k"))
            spec.budgets.series_k = b["series_k"].get<int>();
        if (b.contains("perm_cap"))
            spec.budgets.perm_cap = b["perm_cap"].get<unsigned>();
        if (b.contains("max_s"))
            spec.budgets.max_s = b["max_s"].get<unsigned>();
        if (b.contains("threads"))
            spec.budgets.threads = b["threads"].get<unsigned>();
        if (b.contains("seed"))
            spec.budgets.seed = b["seed"].get<std::uint64_t>();
    }
    if (spec.budgets.i_max < 0 || spec.budgets.series_k < 0)
        throw input_error("budgets: i_max and series_k must be nonnegative");
    return spec;
}

namespace {

RunResult cmd_resolve(const ProblemSpec& spec)
{
    RunResult res;
    TaylorComplex T = build_taylor(minimal_ideal(spec.first), spec.budgets.max_s);
    std::ostringstream out;
    out << "skew Taylor complex on s = " << T.s() << " generators, field " << spec.field.str()
        << "\n";
    ojson degrees = ojson::array();
    for (unsigned i = 0; i <= T.s(); ++i) {
        out << "  T_" << i << ": rank " << T.bases()[i].size() << "\n";
        ojson level;
        level["i"] = i;
        level["rank"] = T.bases()[i].size();
        ojson cols = ojson::array();
        for (std::size_t k = 0; k < T.bases()[i].size(); ++k) {
            Subset F = T.bases()[i][k];
            ojson col;
            col["subset"] = subset_str(F);
            col["m_F"] = T.mF(F).str();
            if (i >= 1) {
                ojson terms = ojson::array();
                for (const auto& [G, p] : T.column(i, k)) {
                    ojson t;
                    t["target"] = subset_str(G);
                    t["value"] = p.str();
                    terms.push_back(t);
                }
                col["differential"] = terms;
            }
            cols.push_back(col);
        }
        level["basis"] = cols;
        degrees.push_back(level);
    }
    if (T.s() <= 6) {
        for (unsigned i = 1; i <= T.s(); ++i)
            for (std::size_t k = 0; k < T.bases()[i].size(); ++k) {
                out << "  d(e" << subset_str(T.bases()[i][k]) << ") =";
                bool first = true;
                for (const auto& [G, p] : T.column(i, k)) {
                    out << (first ? " " : " + ") << "e" << subset_str(G) << "*(" << p.str() << ")";
                    first = false;
                }
                out << "\n";
            }
    }
    res.machine["command"] = "resolve";
    res.machine["s"] = T.s();
    res.machine["complex"] = degrees;
    res.human = out.str();
    return res;
}

RunResult cmd_verify(const ProblemSpec& spec)
{
    RunResult res;
    TaylorComplex T = build_taylor(minimal_ideal(spec.first), spec.budgets.max_s);
    bool dd = verify_d_squared(T);
    bool exact = dd && verify_resolution(T, spec.budgets.threads);
    std::ostringstream out;
    out << "d_squared: " << (dd ? "ok" : "FAIL") << "\n";
    out << "resolution_exactness: " << (exact ? "ok" : "FAIL") << "\n";
    res.machine["command"] = "verify";
    res.machine["d_squared"] = dd;
    res.machine["resolution_exactness"] = exact;
    if (!dd)
        res.failed_invariant = "d_squared";
    else if (!exact)
        res.failed_invariant = "resolution_exactness";
    res.exit_code = res.failed_invariant.empty() ? 0 : 1;
    res.human = out.str();
    return res;
}

RunResult cmd_betti(const ProblemSpec& spec)
{
    RunResult res;
    TaylorComplex T = build_taylor(minimal_ideal(spec.first), spec.budgets.max_s);
    BettiTable t = betti(T);
    std::ostringstream out;
    out << "betti numbers of R/I (over R)\n";
    for (int i = 0; i <= (int)T.s(); ++i) {
        out << "  beta_" << i << " = " << t.total(i);
        auto it = t.by_degree.find(i);
        if (it != t.by_degree.end()) {
            out << "   [";
            bool first = true;
            for (const auto& [alpha, v] : it->second) {
                out << (first ? "" : ", ") << alpha.str() << ":" << v;
                first = false;
            }
            out << "]";
        }
        out << "\n";
    }
    res.machine["command"] = "betti";
    res.machine["betti"] = betti_json(t, (int)T.s());
    res.human = out.str();
    return res;
}

RunResult cmd_dg_verify(const ProblemSpec& spec)
{
    RunResult res;
    TaylorComplex T = build_taylor(minimal_ideal(spec.first), spec.budgets.max_s);
    VerifyBudget budget;
    budget.seed = spec.budgets.seed;
    bool leibniz = verify_leibniz(T, budget);
    bool assoc = verify_associativity(T, budget);
    bool comm = verify_color_comm(T, budget);
    bool gamma = verify_gamma_axioms(T, budget);
    std::ostringstream out;
    out << "leibniz: " << (leibniz ? "ok" : "FAIL") << "\n";
    out << "associativity: " << (assoc ? "ok" : "FAIL") << "\n";
    out << "color_commutativity: " << (comm ? "ok" : "FAIL") << "\n";
    out << "gamma_axioms: " << (gamma ? "ok" : "FAIL") << "\n";
    res.machine["command"] = "dg-verify";
    res.machine["leibniz"] = leibniz;
    res.machine["associativity"] = assoc;
    res.machine["color_commutativity"] = comm;
    res.machine["gamma_axioms"] = gamma;
    if (!leibniz)
        res.failed_invariant = "leibniz";
    else if (!assoc)
        res.failed_invariant = "associativity";
    else if (!comm)
        res.failed_invariant = "color_commutativity";
    else if (!gamma)
        res.failed_invariant = "gamma_axioms";
    res.exit_code = res.failed_invariant.empty() ? 0 : 1;
    res.human = out.str();
    return res;
}

RunResult cmd_lattice(const ProblemSpec& spec, bool graph)
{
    RunResult res;
    LcmLattice L = build_lcm_lattice(minimal_ideal(spec.first), spec.budgets.max_s);
    GcdGraph G = build_gcd_graph(L);
    if (graph) {
        res.human = export_gcd_graph(L, G);
        res.machine["command"] = "graph";
        res.machine["text"] = res.human;
        return res;
    }
    std::ostringstream out;
    out << "lcm lattice: " << L.nodes.size() << " nodes, " << L.s() << " atoms\n";
    ojson nodes = ojson::array();
    for (std::size_t p = 0; p < L.nodes.size(); ++p) {
        out << "  node " << p << ": " << L.nodes[p].str() << " (ideg " << L.node_idegree[p]
            << ", gdeg " << L.node_gdeg[p].str() << ")\n";
        ojson node;
        node["index"] = p;
        node["monomial"] = monomial_json(L.nodes[p]);
        node["internal_degree"] = L.node_idegree[p];
        ojson gd = ojson::array();
        for (const auto& c : L.node_gdeg[p].chi_row)
            gd.push_back(c.str());
        node["gdegree"] = gd;
        nodes.push_back(node);
    }
    ojson atoms = ojson::array();
    for (int a : L.atoms)
        atoms.push_back(a);
    res.machine["command"] = "lattice";
    res.machine["nodes"] = nodes;
    res.machine["atoms"] = atoms;
    res.machine["coprime_pairs"] = G.edges.size();
    res.human = out.str();
    return res;
}

RunResult cmd_compare(const ProblemSpec& spec)
{
    RunResult res;
    if (!spec.second)
        throw input_error("compare: the spec needs a \"second\" ideal");
    MonomialIdeal I1 = minimal_ideal(spec.first);
    MonomialIdeal I2 = minimal_ideal(*spec.second);
    LcmLattice L1 = build_lcm_lattice(I1, spec.budgets.max_s);
    LcmLattice L2 = build_lcm_lattice(I2, spec.budgets.max_s);
    GcdGraph G1 = build_gcd_graph(L1);
    GcdGraph G2 = build_gcd_graph(L2);
    auto iso = find_color_iso(L1, G1, L2, G2, spec.budgets.perm_cap);

    TaylorComplex T1 = build_taylor(I1, spec.budgets.max_s);
    TaylorComplex T2 = build_taylor(I2, spec.budgets.max_s);
    PredictionReport rep = predict_equalities(iso, T1, T2, spec.budgets.series_k);

    std::ostringstream out;
    res.machine["command"] = "compare";
    if (!iso) {
        out << "iso: none found\nprediction: inapplicable (" << rep.reason << ")\n";
        res.machine["iso_found"] = false;
        res.machine["prediction"] = "inapplicable";
        res.machine["reason"] = rep.reason;
        res.human = out.str();
        return res;
    }
    out << "iso: found, atom map (";
    ojson amap = ojson::array();
    for (std::size_t i = 0; i < iso->atom_map.size(); ++i) {
        out << (i ? " " : "") << (i + 1) << "->" << (iso->atom_map[i] + 1);
        amap.push_back(iso->atom_map[i] + 1);
    }
    out << "), internal degrees " << (iso->idegree_preserving ? "preserved" : "NOT preserved") << "\n";
    res.machine["iso_found"] = true;
    res.machine["atom_map"] = amap;
    res.machine["idegree_preserving"] = iso->idegree_preserving;
    if (!rep.applicable) {
        out << "prediction: inapplicable (" << rep.reason << ")\n";
        res.machine["prediction"] = "inapplicable";
        res.machine["reason"] = rep.reason;
        res.human = out.str();
        return res;
    }
    out << "betti: " << (rep.betti_equal ? "equal" : "DIFFER") << "\n";
    out << "poincare quotient through t^" << spec.budgets.series_k << ": "
        << (rep.poincare_quotient_equal ? "equal" : "DIFFER") << "\n";
    res.machine["prediction"] = "checked";
    res.machine["betti_equal"] = rep.betti_equal;
    res.machine["poincare_quotient_equal"] = rep.poincare_quotient_equal;
    res.machine["betti_first"] = rep.betti1;
    res.machine["betti_second"] = rep.betti2;
    res.machine["quotient_first"] = scalar_list_json(rep.quotient1);
    res.machine["quotient_second"] = scalar_list_json(rep.quotient2);
    if (!rep.all_pass()) {
        res.failed_invariant = rep.betti_equal ? "poincare_quotient_equality" : "betti_equality";
        res.exit_code = 1;
    }
    res.human = out.str();
    return res;
}

RunResult cmd_poincare(const ProblemSpec& spec, bool as_deviations)
{
    RunResult res;
    QuotientAlgebra S(spec.first.ring, spec.first.mingens);
    int i_max = spec.budgets.i_max;
    std::int64_t d_max =
        spec.budgets.d_max >= 0 ? spec.budgets.d_max : (std::int64_t)i_max * S.max_related_degree();
    PSeries P = minimal_resolution_of_k(S, i_max, d_max);
    std::ostringstream out;
    if (!as_deviations) {
        out << "poincare series of k over R/I (i <= " << i_max << ", internal degree <= " << d_max
            << ")\n";
        ojson coeffs = ojson::array();
        for (std::size_t i = 0; i < P.coeffs.size(); ++i) {
            out << "  beta_" << i << " = " << P.coeffs[i].str() << (P.exact[i] ? "" : " (truncated)")
                << "\n";
            ojson c;
            c["i"] = i;
            c["value"] = P.coeffs[i].str();
            c["exact"] = (bool)P.exact[i];
            coeffs.push_back(c);
        }
        res.machine["command"] = "poincare";
        res.machine["coefficients"] = coeffs;
        res.machine["exact_through"] = P.exact_through;
        ojson big = ojson::array();
        for (const auto& [i, row] : P.bigraded)
            for (const auto& [alpha, v] : row) {
                ojson cell;
                cell["i"] = i;
                cell["multidegree"] = monomial_json(alpha);
                cell["value"] = v;
                big.push_back(cell);
            }
        res.machine["bigraded"] = big;
        res.human = out.str();
        return res;
    }
    DeviationRanks D = deviations(P);
    out << "deviation ranks (rank_k pi^i) exact through degree " << D.exact_through << "\n";
    ojson ranks = ojson::array();
    for (int i = 1; i < (int)D.ranks.size(); ++i) {
        out << "  eps_" << i << " = " << D.ranks[(std::size_t)i].str() << "\n";
        ranks.push_back(D.ranks[(std::size_t)i].str());
    }
    res.machine["command"] = "deviations";
    res.machine["ranks"] = ranks;
    res.machine["exact_through"] = D.exact_through;
    res.human = out.str();
    return res;
}

}  // namespace

RunResult run_command(const std::string& command, const ProblemSpec& spec)
{
    RunResult res;
    if (command == "resolve")
        res = cmd_resolve(spec);
    else if (command == "verify")
        res = cmd_verify(spec);
    else if (command == "betti")
        res = cmd_betti(spec);
    else if (command == "dg-verify")
        res = cmd_dg_verify(spec);
    else if (command == "lattice")
        res = cmd_lattice(spec, false);
    else if (command == "graph")
        res = cmd_lattice(spec, true);
    else if (command == "compare")
        res = cmd_compare(spec);
    else if (command == "poincare")
        res = cmd_poincare(spec, false);
    else if (command == "deviations")
        res = cmd_poincare(spec, true);
    else
        throw input_error("unknown command \"" + command + "\"");
    if (!spec.warnings.empty()) {
        std::string w;
        for (const auto& s : spec.warnings)
            w += "warning: " + s + "\n";
        res.human = w + res.human;
        res.machine["warnings"] = spec.warnings;
    }
    return res;
}

}  // namespace skewtaylor
