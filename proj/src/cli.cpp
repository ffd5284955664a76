#include "m0n/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "m0n/cache.hpp"
#include "m0n/certify.hpp"
#include "m0n/oracle.hpp"
#include "m0n/reduction.hpp"
#include "m0n/serialize.hpp"
#include "m0n/text.hpp"

namespace m0n {

namespace {

/// Bad input after flag parsing succeeded; maps to the usage exit code.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string command;
    int n = 0;
    std::optional<int> degree;
    std::string format = "text";
    OrderConvention convention = kDefaultConvention;
    std::string cache_dir;
    std::optional<double> budget_seconds;
    std::string expr;
    std::string input;
    bool multi_split = false;
    std::string columns = "all";

    RelationOptions relations() const { return RelationOptions{multi_split}; }
    Budget budget() const { return budget_seconds ? Budget(*budget_seconds) : Budget::unlimited(); }
};

/// Largest n whose relation set is cheap enough to fingerprint for a cache key.
constexpr int kCacheMaxMarkings = 9;

/// Reduction tables keyed by degree, loaded before and written after a computation.
class TableCache {
public:
    TableCache(const Settings& s, std::ostream& err) : s_(s), err_(err), cache_(s.cache_dir, &err)
    {
        if (cache_.enabled() && s.n > kCacheMaxMarkings) {
            err_ << "note: reduction cache is only used for n <= " << kCacheMaxMarkings << '\n';
            active_ = false;
        }
    }

    void load(Reducer& red, int d)
    {
        if (!active() || d < 0)
            return;
        CacheLookup st;
        const auto payload = cache_.load(key(d), &st);
        if (st == CacheLookup::Corrupt || st == CacheLookup::Stale)
            err_ << "warning: cache entry " << key(d).file_name() << " is " << to_string(st) << "; recomputing\n";
        if (!payload)
            return;
        try {
            const auto table = reduction_table_from_json(Json::parse(*payload), s_.n, d);
            for (const auto& [m, p] : table)
                red.seed(m, p);
            loaded_[d] = table.size();
        } catch (const std::exception&) {
            err_ << "warning: cache entry " << key(d).file_name() << " is unreadable; recomputing\n";
        }
    }

    void save(const Reducer& red, int d)
    {
        if (!active() || d < 0)
            return;
        ReductionTable table;
        for (auto& [m, p] : red.memo_snapshot())
            if (m.degree() == d)
                table.emplace_back(std::move(m), std::move(p));
        if (table.size() <= loaded_[d])
            return;
        cache_.store(key(d), reduction_table_json(s_.n, d, table).dump());
    }

private:
    bool active() const { return cache_.enabled() && active_; }

    CacheKey key(int d)
    {
        auto it = hashes_.find(d);
        if (it == hashes_.end())
            it = hashes_.emplace(d, relation_set_hash(generate_relations(s_.n, d, s_.relations()))).first;
        return CacheKey{"reduction", s_.n, d, it->second, s_.convention};
    }

    const Settings& s_;
    std::ostream& err_;
    Cache cache_;
    bool active_ = true;
    std::map<int, std::string> hashes_;
    std::map<int, std::size_t> loaded_;
};

std::vector<int> degrees_of(const Settings& s)
{
    if (s.degree) {
        if (*s.degree < 0 || *s.degree > s.n - 3)
            throw UsageError("--degree must lie in 0.." + std::to_string(s.n - 3));
        return {*s.degree};
    }
    std::vector<int> ds;
    for (int d = 0; d <= s.n - 3; ++d)
        ds.push_back(d);
    return ds;
}

std::string csv_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

Polynomial read_polynomial(const Settings& s)
{
    if (s.expr.empty() == s.input.empty())
        throw UsageError("give exactly one of --expr and --input");
    std::string text = s.expr;
    if (!s.input.empty()) {
        std::ifstream f(s.input);
        if (!f)
            throw UsageError("cannot read " + s.input);
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        int n = 0;
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const Json::exception& e) {
            throw UsageError(std::string("invalid JSON input: ") + e.what());
        }
        Polynomial p = polynomial_from_document(doc, &n);
        if (n != s.n)
            throw UsageError("input document has n = " + std::to_string(n) + ", --n is " + std::to_string(s.n));
        return p;
    }
    return parse_polynomial(text, s.n);
}

Monomial read_monomial(const Settings& s)
{
    const Polynomial p = read_polynomial(s);
    if (p.size() != 1 || p.terms().begin()->second != 1)
        throw UsageError("expected a single monomial");
    return p.terms().begin()->first;
}

void print_matrix(std::ostream& out, const std::vector<std::vector<Coeff>>& m)
{
    std::size_t w = 1;
    for (const auto& row : m)
        for (Coeff x : row)
            w = std::max(w, std::to_string(x).size());
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << std::setw(static_cast<int>(w)) << row[j];
        out << '\n';
    }
}

std::string pass_fail(bool ok)
{
    return ok ? "PASS" : "FAIL";
}

// ---------------------------------------------------------------- commands

int cmd_basis(const Settings& s, std::ostream& out)
{
    const auto ds = degrees_of(s);
    if (s.format == "json") {
        Json degs = Json::array();
        for (int d : ds) {
            Json basis = Json::array();
            for (const auto& v : enumerate_standard(s.n, d, s.convention))
                basis.push_back(render(v.monomial()));
            degs.push_back({{"degree", d}, {"count", basis.size()}, {"basis", basis}});
        }
        out << Json{{"n", s.n}, {"convention", std::string(to_string(s.convention))}, {"degrees", degs}}.dump(2)
            << '\n';
    } else if (s.format == "csv") {
        out << "degree,index,monomial\n";
        for (int d : ds) {
            std::size_t i = 0;
            for (const auto& v : enumerate_standard(s.n, d, s.convention))
                out << d << ',' << i++ << ',' << csv_quote(render(v.monomial())) << '\n';
        }
    } else {
        for (int d : ds) {
            const auto basis = enumerate_standard(s.n, d, s.convention);
            out << "degree " << d << ": " << basis.size() << '\n';
            for (const auto& v : basis)
                out << "  " << render(v.monomial()) << '\n';
        }
    }
    return kExitOk;
}

int cmd_dual(const Settings& s, std::ostream& out)
{
    if (!s.expr.empty() || !s.input.empty()) {
        const Monomial m = read_monomial(s);
        const auto v = StandardMonomial::make(m, s.n);
        if (!v)
            throw UsageError(render(m) + " is not standard; see 'explain'");
        if (s.format == "json")
            out << Json(standard_json(*v)).dump(2) << '\n';
        else if (s.format == "csv")
            out << "monomial,dual\n" << csv_quote(render(m)) << ',' << csv_quote(render(dual(*v).monomial())) << '\n';
        else
            out << render(dual(*v).monomial()) << '\n';
        return kExitOk;
    }
    const auto ds = degrees_of(s);
    if (s.format == "json") {
        Json rows = Json::array();
        for (int d : ds)
            for (const auto& v : enumerate_standard(s.n, d, s.convention))
                rows.push_back({{"degree", d},
                                {"monomial", render(v.monomial())},
                                {"dual", render(dual(v).monomial())}});
        out << Json{{"n", s.n}, {"convention", std::string(to_string(s.convention))}, {"duals", rows}}.dump(2)
            << '\n';
    } else if (s.format == "csv") {
        out << "degree,monomial,dual\n";
        for (int d : ds)
            for (const auto& v : enumerate_standard(s.n, d, s.convention))
                out << d << ',' << csv_quote(render(v.monomial())) << ',' << csv_quote(render(dual(v).monomial()))
                    << '\n';
    } else {
        for (int d : ds)
            for (const auto& v : enumerate_standard(s.n, d, s.convention))
                out << render(v.monomial()) << " -> " << render(dual(v).monomial()) << '\n';
    }
    return kExitOk;
}

int cmd_reduce(const Settings& s, std::ostream& out, std::ostream& err)
{
    const Polynomial p = read_polynomial(s);
    Reducer red(s.n);
    TableCache cache(s, err);
    const auto ds = p.degrees();
    for (int d : ds)
        cache.load(red, d);
    const NormalForm nf = red.reduce(p);
    for (int d : ds)
        cache.save(red, d);
    if (s.format == "json") {
        out << Json{{"n", s.n},
                    {"input", render(p, s.convention)},
                    {"degree", nf.degree},
                    {"text", render(nf.value, s.convention)},
                    {"normal_form", polynomial_document(nf.value, s.n, s.convention)}}
                   .dump(2)
            << '\n';
    } else if (s.format == "csv") {
        out << "coeff,monomial\n";
        for (const auto& [m, c] : nf.value.sorted_terms(s.convention))
            out << c << ',' << csv_quote(render(m)) << '\n';
    } else {
        out << render(nf.value, s.convention) << '\n';
    }
    return kExitOk;
}

int cmd_integral(const Settings& s, std::ostream& out, std::ostream& err)
{
    const Polynomial p = read_polynomial(s);
    Reducer red(s.n);
    TableCache cache(s, err);
    cache.load(red, s.n - 3);
    Coeff value;
    try {
        value = red.integral(p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    cache.save(red, s.n - 3);
    if (s.format == "json")
        out << Json{{"n", s.n}, {"input", render(p, s.convention)}, {"integral", value}}.dump(2) << '\n';
    else if (s.format == "csv")
        out << "integral\n" << value << '\n';
    else
        out << value << '\n';
    return kExitOk;
}

int cmd_pair(const Settings& s, std::ostream& out, std::ostream& err)
{
    if (s.format == "csv" && !s.degree)
        throw UsageError("--format csv needs --degree");
    const auto ds = degrees_of(s);
    const Budget budget = s.budget();
    Reducer red(s.n);
    TableCache cache(s, err);
    cache.load(red, s.n - 3);
    std::vector<std::pair<PairingReport, PairingCertificate>> results;
    bool ok = true;
    for (int d : ds) {
        PairingReport r = pairing_matrix(s.n, d, red, s.convention, budget);
        PairingCertificate c = verify_block_triangular(r);
        ok = ok && c.passed();
        results.emplace_back(std::move(r), std::move(c));
    }
    cache.save(red, s.n - 3);

    if (!ok || s.format == "json") {
        Json all = Json::array();
        for (const auto& [r, c] : results)
            all.push_back(pairing_json(r, c));
        out << (s.degree ? all.front() : Json{{"n", s.n}, {"pairings", all}}).dump(2) << '\n';
        return ok ? kExitOk : kExitCertificationFailed;
    }
    if (s.format == "csv") {
        out << pairing_csv(results.front().first);
        return kExitOk;
    }
    for (const auto& [r, c] : results) {
        out << "n=" << r.n << " degree=" << r.d << " size=" << r.basis.size()
            << " convention=" << to_string(r.convention) << '\n';
        for (std::size_t i = 0; i < r.basis.size(); ++i)
            out << "  " << i << ": " << render(r.basis[i]) << "  |  " << render(r.duals[i]) << '\n';
        print_matrix(out, r.matrix);
        out << "block_zero " << pass_fail(c.block_zero.passed) << '\n'
            << "diagonal_blocks " << pass_fail(c.diagonal_blocks.passed) << '\n'
            << "unimodular " << pass_fail(c.unimodular.passed) << " |det|=" << r.abs_det.get_str() << '\n'
            << "diagonal signs +" << c.plus_count << " -" << c.minus_count
            << (c.diagonal_matrix ? " (diagonal)" : "") << '\n';
    }
    return kExitOk;
}

int cmd_relations(const Settings& s, std::ostream& out)
{
    const int top = s.degree ? *s.degree : s.n - 3;
    if (top < 0 || top > s.n - 3)
        throw UsageError("--degree must lie in 0.." + std::to_string(s.n - 3));
    const RelationSet rs = generate_relations(s.n, top, s.relations());
    if (s.format == "json") {
        out << relations_json(rs).dump(2) << '\n';
    } else if (s.format == "csv") {
        out << "family,degree,relation\n";
        for (const auto& r : rs.relations)
            out << family_tag(r.family) << ',' << r.poly.homogeneous_degree() << ','
                << csv_quote(render(r.poly, s.convention)) << '\n';
    } else {
        for (const auto& r : rs.relations) {
            out << family_tag(r.family);
            for (IndexSet t : r.sets)
                out << ' ' << t.to_string();
            out << ": " << render(r.poly, s.convention) << '\n';
        }
    }
    return kExitOk;
}

int cmd_rank(const Settings& s, std::ostream& out)
{
    const auto ds = degrees_of(s);
    std::vector<std::size_t> ranks;
    for (int d : ds)
        ranks.push_back(count_standard(s.n, d));
    if (s.format == "json") {
        Json rs = Json::array();
        for (std::size_t k = 0; k < ds.size(); ++k)
            rs.push_back({{"degree", ds[k]}, {"rank", ranks[k]}});
        out << Json{{"n", s.n}, {"ranks", rs}}.dump(2) << '\n';
    } else if (s.format == "csv") {
        out << "degree,rank\n";
        for (std::size_t k = 0; k < ds.size(); ++k)
            out << ds[k] << ',' << ranks[k] << '\n';
    } else {
        for (std::size_t k = 0; k < ds.size(); ++k)
            out << "rank(" << s.n << "," << ds[k] << ") = " << ranks[k] << '\n';
    }
    return kExitOk;
}

int cmd_oracle(const Settings& s, std::ostream& out)
{
    OracleOptions o;
    o.columns = s.columns == "all" ? OracleColumns::AllMonomials : OracleColumns::KernelReduced;
    o.relations = s.relations();
    const Budget budget = s.budget();
    std::vector<GradedOracleReport> reps;
    bool ok = true;
    for (int d : degrees_of(s)) {
        reps.push_back(graded_rank_oracle(s.n, d, o, budget));
        ok = ok && reps.back().torsion_free && reps.back().rank == count_standard(s.n, d);
    }
    if (!ok || s.format == "json") {
        Json all = Json::array();
        for (const auto& r : reps) {
            Json j = oracle_json(r);
            j["standard_count"] = count_standard(s.n, r.d);
            all.push_back(std::move(j));
        }
        out << Json{{"n", s.n}, {"passed", ok}, {"degrees", all}}.dump(2) << '\n';
        return ok ? kExitOk : kExitCertificationFailed;
    }
    if (s.format == "csv") {
        out << "degree,monomials,relation_rows,rank,standard_count,torsion_free\n";
        for (const auto& r : reps)
            out << r.d << ',' << r.monomials << ',' << r.relation_rows << ',' << r.rank << ','
                << count_standard(s.n, r.d) << ',' << (r.torsion_free ? "true" : "false") << '\n';
        return kExitOk;
    }
    for (const auto& r : reps)
        out << "degree " << r.d << ": rank " << r.rank << " (standard " << count_standard(s.n, r.d) << "), "
            << r.monomials << " monomials, " << r.relation_rows << " relation rows, "
            << (r.torsion_free ? "torsion-free" : "TORSION") << '\n';
    return kExitOk;
}

int cmd_verify(const Settings& s, std::ostream& out)
{
    VerifyOptions opt;
    opt.convention = s.convention;
    opt.relations = s.relations();
    const VerifyReport rep = verify(s.n, opt, s.budget());
    if (!rep.passed() || s.format == "json") {
        out << verify_json(rep).dump(2) << '\n';
        return rep.passed() ? kExitOk : kExitCertificationFailed;
    }
    if (s.format == "csv") {
        out << "check,passed\n";
        for (const auto& c : rep.checks)
            out << c.name << ',' << (c.passed ? "true" : "false") << '\n';
        return kExitOk;
    }
    for (const auto& c : rep.checks)
        out << pass_fail(c.passed) << ' ' << c.name << '\n';
    out << "n=" << s.n << " convention=" << to_string(s.convention) << ": all checks passed\n";
    return kExitOk;
}

/// Why m is not standard, or empty when it is.
std::string nonstandard_reason(const Monomial& m, int n)
{
    const auto sets = m.d_sets();
    const auto f = Forest::try_build(sets, n);
    if (!f)
        return "D-part is not nested-or-disjoint";
    for (const auto& [i, e] : m.a_factors())
        if (e > 1)
            return "a" + std::to_string(i) + " appears squared";
    const IndexSet sup = support_set(*f);
    for (const auto& [i, e] : m.a_factors())
        if (!sup.contains(i))
            return "a" + std::to_string(i) + " lies outside S = " + sup.to_string();
    for (std::size_t v = 0; v < f->size(); ++v)
        if (m.d_exponent(f->set(v)) > f->exponent_cap(v))
            return "exponent " + std::to_string(m.d_exponent(f->set(v))) + " of D" + f->set(v).to_string() +
                   " exceeds cap " + std::to_string(f->exponent_cap(v));
    return {};
}

int cmd_explain(const Settings& s, std::ostream& out, std::ostream& err)
{
    const Monomial m = read_monomial(s);
    Reducer red(s.n);
    TableCache cache(s, err);
    cache.load(red, m.degree());
    const auto kernel = red.kernel_reduce(m);
    const Polynomial nf = red.normal_form(m);
    cache.save(red, m.degree());
    const auto sets = m.d_sets();
    const auto forest = Forest::try_build(sets, s.n);
    const std::string reason = nonstandard_reason(m, s.n);
    const auto v = StandardMonomial::make(m, s.n);
    const bool top = m.degree() == s.n - 3;

    if (s.format == "json") {
        Json j{{"n", s.n}, {"monomial", render(m)}, {"degree", m.degree()}};
        j["kernel_pass"] = kernel ? Json(render(*kernel)) : Json(nullptr);
        if (forest) {
            std::vector<int> exps;
            for (IndexSet t : forest->sets())
                exps.push_back(m.d_exponent(t));
            j["forest"] = forest_json(*forest, exps);
            j["support"] = support_set(*forest).elements();
        }
        j["standard"] = v.has_value();
        if (!reason.empty())
            j["reason"] = reason;
        if (v) {
            j["dual"] = render(dual(*v).monomial());
            j["p"] = filtration_p(*v);
            j["sign"] = sign_epsilon(v->forest());
        }
        j["normal_form"] = render(nf, s.convention);
        if (top)
            j["integral"] = red.integral(Polynomial(m));
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "monomial: " << render(m) << '\n' << "degree: " << m.degree() << '\n';
    out << "kernel pass: " << (kernel ? render(*kernel) : std::string("0")) << '\n';
    if (forest) {
        out << "forest:\n";
        for (std::size_t u = 0; u < forest->size(); ++u) {
            const auto p = forest->parent(u);
            out << "  " << u << ' ' << forest->set(u).to_string() << " exp " << m.d_exponent(forest->set(u))
                << " cap " << forest->exponent_cap(u) << (p ? " parent " + std::to_string(*p) : " root")
                << (forest->is_external(u) ? " external" : "") << '\n';
        }
        out << "S: " << support_set(*forest).to_string() << '\n';
    }
    out << "standard: " << (v ? "yes" : "no (" + reason + ")") << '\n';
    if (v)
        out << "dual: " << render(dual(*v).monomial()) << '\n'
            << "p: " << filtration_p(*v) << '\n'
            << "sign: " << (sign_epsilon(v->forest()) > 0 ? "+1" : "-1") << '\n';
    out << "normal form: " << render(nf, s.convention) << '\n';
    if (top)
        out << "integral: " << red.integral(Polynomial(m)) << '\n';
    return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Settings s;
    CLI::App app{"Exact computations in the integral Chow ring of the moduli space of stable n-pointed rational curves",
                 "m0n"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string convention = to_string(kDefaultConvention).data();
    app.add_option("--n", s.n, "number of markings")->check(CLI::Range(3, kMaxMarkings));
    app.add_option("--degree", s.degree, "degree (default: all)");
    app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--order-convention", convention, "monomial order scan")->check(CLI::IsMember({"desc", "asc"}));
    app.add_option("--cache-dir", s.cache_dir, "directory for cached reduction tables");
    app.add_option("--budget-seconds", s.budget_seconds, "wall-clock budget")->check(CLI::PositiveNumber);
    app.add_option("--expr", s.expr, "polynomial in canonical notation");
    app.add_option("--input", s.input, "file holding an expression or a JSON polynomial document");
    app.add_flag("--multi-split", s.multi_split, "also use mixed relations with several parts");

    const std::vector<std::pair<std::string, std::string>> commands{
        {"basis", "standard monomials"},
        {"dual", "duals of standard monomials"},
        {"reduce", "normal form of --expr / --input"},
        {"integral", "degree of a top-degree class"},
        {"pair", "intersection pairing matrices and their certificate"},
        {"relations", "generated relations"},
        {"rank", "ranks of the Chow groups"},
        {"oracle", "ranks and torsion by Smith normal form"},
        {"verify", "run every certification for n"},
        {"explain", "forest, standardness and normal form of a monomial"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->callback([&s, name = name] { s.command = name; });
        if (name == "oracle")
            sub->add_option("--columns", s.columns, "all monomials or kernel-reduced ones")
                ->check(CLI::IsMember({"all", "reduced"}));
    }

    std::vector<std::string> argv_store{"m0n"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (s.n == 0) {
        err << "error: --n is required\n";
        return kExitUsage;
    }
    s.convention = parse_order_convention(convention);

    try {
        if (s.command == "basis")
            return cmd_basis(s, out);
        if (s.command == "dual")
            return cmd_dual(s, out);
        if (s.command == "reduce")
            return cmd_reduce(s, out, err);
        if (s.command == "integral")
            return cmd_integral(s, out, err);
        if (s.command == "pair")
            return cmd_pair(s, out, err);
        if (s.command == "relations")
            return cmd_relations(s, out);
        if (s.command == "rank")
            return cmd_rank(s, out);
        if (s.command == "oracle")
            return cmd_oracle(s, out);
        if (s.command == "verify")
            return cmd_verify(s, out);
        if (s.command == "explain")
            return cmd_explain(s, out, err);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCertificationFailed;
    }
    err << "error: unknown command\n";
    return kExitUsage;
}

}  // namespace m0n
