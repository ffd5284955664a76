#include "m0n/serialize.hpp"

#include <stdexcept>

namespace m0n {

namespace {

Json set_json(IndexSet s)
{
    return Json(s.elements());
}

IndexSet set_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("set must be an array of markings");
    IndexSet s;
    for (const auto& x : j) {
        const int i = x.get<int>();
        if (i < 1 || i > kMaxMarkings || s.contains(i))
            throw std::invalid_argument("bad marking in set");
        s.insert(i);
    }
    return s;
}

Json big_json(const BigInt& v)
{
    if (v.fits_slong_p())
        return Json(v.get_si());
    return Json(v.get_str());
}

}  // namespace

Json monomial_json(const Monomial& m)
{
    Json a = Json::array();
    for (const auto& [i, e] : m.a_factors())
        for (int k = 0; k < e; ++k)
            a.push_back(i);
    Json d = Json::array();
    for (const auto& [s, e] : display_order(m))
        d.push_back({{"set", set_json(s)}, {"exp", e}});
    return {{"a", a}, {"D", d}};
}

Monomial monomial_from_json(const Json& j, int n)
{
    if (!j.is_object() || !j.contains("a") || !j.contains("D"))
        throw std::invalid_argument("monomial needs 'a' and 'D'");
    std::vector<Monomial::AFactor> a;
    for (const auto& x : j.at("a"))
        a.emplace_back(x.get<int>(), 1);
    std::vector<Monomial::DFactor> d;
    for (const auto& f : j.at("D")) {
        const int e = f.at("exp").get<int>();
        if (e < 1)
            throw std::invalid_argument("D exponent must be positive");
        d.emplace_back(set_from_json(f.at("set")), e);
    }
    Monomial m = Monomial::from_factors(std::move(a), std::move(d));
    m.validate(n);
    return m;
}

Json polynomial_document(const Polynomial& p, int n, OrderConvention c)
{
    Json terms = Json::array();
    for (const auto& [m, coeff] : p.sorted_terms(c)) {
        Json t = monomial_json(m);
        Json row{{"coeff", coeff}};
        row["a"] = std::move(t["a"]);
        row["D"] = std::move(t["D"]);
        terms.push_back(std::move(row));
    }
    return {{"n", n}, {"terms", terms}};
}

Polynomial polynomial_from_document(const Json& doc, int* n_out)
{
    try {
        const int n = doc.at("n").get<int>();
        check_marking_count(n);
        Polynomial p;
        for (const auto& t : doc.at("terms")) {
            const Coeff c = t.at("coeff").get<Coeff>();
            p.add_term(monomial_from_json(t, n), c);
        }
        if (n_out)
            *n_out = n;
        return p;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed polynomial document: ") + e.what());
    }
}

Json forest_json(const Forest& f)
{
    return forest_json(f, {});
}

Json forest_json(const Forest& f, const std::vector<int>& exponents)
{
    Json vs = Json::array();
    for (std::size_t v = 0; v < f.size(); ++v) {
        Json x{{"id", v}, {"set", set_json(f.set(v))}};
        if (!exponents.empty())
            x["exp"] = exponents[v];
        x["cap"] = f.exponent_cap(v);
        const auto p = f.parent(v);
        x["parent"] = p ? Json(*p) : Json(nullptr);
        x["external"] = f.is_external(v);
        vs.push_back(std::move(x));
    }
    Json es = Json::array();
    for (const auto& [p, c] : f.edges())
        es.push_back({p, c});
    return {{"vertices", vs}, {"edges", es}, {"roots", f.roots()}};
}

Json standard_json(const StandardMonomial& v)
{
    std::vector<int> exps;
    for (std::size_t r = 0; r < v.forest().size(); ++r)
        exps.push_back(v.exponent(r));
    return {
        {"monomial", render(v.monomial())},
        {"degree", v.degree()},
        {"forest", forest_json(v.forest(), exps)},
        {"support", set_json(v.support())},
        {"a_support", set_json(v.a_support())},
        {"p", filtration_p(v)},
        {"dual", render(dual(v).monomial())},
        {"sign", sign_epsilon(v.forest())},
    };
}

Json check_json(const CheckResult& c)
{
    return {{"name", c.name}, {"passed", c.passed}, {"counterexamples", c.counterexamples}};
}

Json pairing_json(const PairingReport& r, const PairingCertificate& cert)
{
    Json basis = Json::array(), duals = Json::array(), blocks = Json::array();
    for (const auto& m : r.basis)
        basis.push_back(render(m));
    for (const auto& m : r.duals)
        duals.push_back(render(m));
    for (const auto& [b, e] : r.blocks)
        blocks.push_back({b, e});
    return {
        {"n", r.n},
        {"degree", r.d},
        {"convention", std::string(to_string(r.convention))},
        {"size", r.basis.size()},
        {"basis", basis},
        {"duals", duals},
        {"matrix", r.matrix},
        {"blocks", blocks},
        {"expected_signs", r.expected_signs},
        {"diagonal", r.diagonal},
        {"abs_det", big_json(r.abs_det)},
        {"certificate",
         {
             {"passed", cert.passed()},
             {"block_zero", check_json(cert.block_zero)},
             {"diagonal_blocks", check_json(cert.diagonal_blocks)},
             {"unimodular", check_json(cert.unimodular)},
             {"diagonal_matrix", cert.diagonal_matrix},
             {"plus", cert.plus_count},
             {"minus", cert.minus_count},
         }},
    };
}

Json oracle_json(const GradedOracleReport& r)
{
    Json other = Json::array();
    for (const auto& f : r.other_factors)
        other.push_back(big_json(f));
    return {
        {"n", r.n},
        {"degree", r.d},
        {"columns", r.columns == OracleColumns::AllMonomials ? "all" : "kernel-reduced"},
        {"monomials", r.monomials},
        {"relation_rows", r.relation_rows},
        {"unit_factors", r.unit_factors},
        {"other_factors", other},
        {"rank", r.rank},
        {"torsion_free", r.torsion_free},
    };
}

Json relation_json(const Relation& r, int n)
{
    Json sets = Json::array();
    for (IndexSet s : r.sets)
        sets.push_back(set_json(s));
    Json j{
        {"family", std::string(family_tag(r.family))},
        {"degree", r.poly.homogeneous_degree()},
        {"text", render(r.poly)},
    };
    if (r.family == RelationFamily::Square)
        j["index"] = r.index;
    j["sets"] = sets;
    if (r.kernel_generator)
        j["kernel_generator"] = render(*r.kernel_generator);
    j["polynomial"] = polynomial_document(r.poly, n);
    return j;
}

Json relations_json(const RelationSet& rs)
{
    Json counts = Json::object();
    for (auto f : {RelationFamily::Square, RelationFamily::Incompatible, RelationFamily::Kernel,
                   RelationFamily::MixedChern, RelationFamily::FullChern})
        counts[std::string(family_tag(f))] = rs.count(f);
    Json rels = Json::array();
    for (const auto& r : rs.relations)
        rels.push_back(relation_json(r, rs.n));
    return {
        {"n", rs.n},
        {"max_degree", rs.max_degree},
        {"multi_split", rs.options.multi_split},
        {"counts", counts},
        {"relations", rels},
    };
}

Json verify_json(const VerifyReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(check_json(c));
    return {
        {"n", r.n},
        {"convention", std::string(to_string(r.convention))},
        {"passed", r.passed()},
        {"checks", checks},
    };
}

std::string pairing_csv(const PairingReport& r)
{
    std::string out;
    for (std::size_t j = 0; j < r.basis.size(); ++j) {
        if (j)
            out += ',';
        out += '"';
        for (char ch : render(r.basis[j])) {
            if (ch == '"')
                out += '"';
            out += ch;
        }
        out += '"';
    }
    out += '\n';
    for (const auto& row : r.matrix) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j)
                out += ',';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string> split_csv_line(std::string_view line)
{
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        const char ch = line[k];
        if (quoted) {
            if (ch == '"' && k + 1 < line.size() && line[k + 1] == '"') {
                cur += '"';
                ++k;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            cells.push_back(std::move(cur));
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    if (quoted)
        throw std::invalid_argument("unterminated quote in CSV");
    cells.push_back(std::move(cur));
    return cells;
}

}  // namespace

CsvMatrix parse_csv_matrix(std::string_view text)
{
    CsvMatrix m;
    bool first = true;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty())
            continue;
        auto cells = split_csv_line(line);
        if (first) {
            m.header = std::move(cells);
            first = false;
            continue;
        }
        if (cells.size() != m.header.size())
            throw std::invalid_argument("CSV row width differs from header");
        std::vector<Coeff> row;
        for (const auto& c : cells) {
            std::size_t used = 0;
            const long long v = std::stoll(c, &used);
            if (used != c.size())
                throw std::invalid_argument("non-integer CSV cell '" + c + "'");
            row.push_back(v);
        }
        m.rows.push_back(std::move(row));
    }
    if (first)
        throw std::invalid_argument("empty CSV");
    return m;
}

Json reduction_table_json(int n, int d, const ReductionTable& table)
{
    Json entries = Json::array();
    for (const auto& [m, p] : table)
        entries.push_back({{"monomial", monomial_json(m)}, {"normal_form", polynomial_document(p, n)}});
    return {{"n", n}, {"degree", d}, {"entries", entries}};
}

ReductionTable reduction_table_from_json(const Json& j, int n, int d)
{
    try {
        if (j.at("n").get<int>() != n || j.at("degree").get<int>() != d)
            throw std::invalid_argument("reduction table for a different (n, d)");
        ReductionTable out;
        for (const auto& e : j.at("entries")) {
            Monomial m = monomial_from_json(e.at("monomial"), n);
            if (m.degree() != d)
                throw std::invalid_argument("reduction table entry of wrong degree");
            out.emplace_back(std::move(m), polynomial_from_document(e.at("normal_form")));
        }
        return out;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed reduction table: ") + e.what());
    }
}

}  // namespace m0n
