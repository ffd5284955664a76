#include "m0n/certify.hpp"

#include <map>
#include <random>

#include "m0n/keel_oracle.hpp"
#include "m0n/oracle.hpp"

namespace m0n {

bool VerifyReport::passed() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

const CheckResult* VerifyReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {

CheckResult named(std::string name)
{
    CheckResult c;
    c.name = std::move(name);
    return c;
}

/// A product of `degree` generators drawn uniformly.
Monomial random_monomial(const std::vector<Generator>& gens, int degree, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    Monomial m;
    for (int k = 0; k < degree; ++k)
        m = m * Monomial::of(gens[pick(rng)]);
    return m;
}

}  // namespace

CheckResult check_count_symmetry(int n)
{
    auto c = named("count_symmetry");
    for (int d = 0; d <= n - 3; ++d) {
        const auto lo = count_standard(n, d), hi = count_standard(n, n - 3 - d);
        if (lo != hi)
            c.fail("rank(" + std::to_string(d) + ") = " + std::to_string(lo) + " but rank(" +
                   std::to_string(n - 3 - d) + ") = " + std::to_string(hi));
    }
    return c;
}

CheckResult check_duality(int n)
{
    auto c = named("duality");
    for (int d = 0; d <= n - 3; ++d)
        for (const auto& v : enumerate_standard(n, d)) {
            const std::string name = render(v.monomial());
            std::optional<StandardMonomial> vs;
            try {
                vs = dual(v);
            } catch (const std::invalid_argument&) {
                c.fail(name + ": dual is not standard");
                continue;
            }
            if (!(dual(*vs) == v))
                c.fail(name + ": dual is not an involution");
            if (v.degree() + vs->degree() != n - 3)
                c.fail(name + ": degrees do not add to n-3");
            const Forest& f = v.forest();
            const auto j = dual_exponents(v);
            for (std::size_t i = 0; i < f.size(); ++i) {
                int sum = 0;
                for (std::size_t r : f.closure(i))
                    sum += v.exponent(r) + j[r];
                if (sum != f.set(i).size() - 1)
                    c.fail(name + ": closure sum at " + f.set(i).to_string() + " is " + std::to_string(sum));
            }
        }
    return c;
}

CheckResult check_degree_bookkeeping(int n)
{
    auto c = named("degree_bookkeeping");
    for (int d = 0; d <= n - 3; ++d)
        for (const auto& v : enumerate_standard(n, d)) {
            const int got = (v.monomial().d_part() * dual(v).monomial().d_part()).degree();
            int want = 0;
            for (std::size_t r : v.forest().roots())
                want += v.forest().set(r).size() - 1;
            if (got != want)
                c.fail(render(v.monomial()) + ": deg D(v)D(v*) = " + std::to_string(got) + ", roots give " +
                       std::to_string(want));
        }
    return c;
}

CheckResult check_kernels(int n)
{
    auto c = named("kernel_closed_form");
    for (IndexSet s : admissible_sets(n)) {
        const auto k = compare_kernel(s, n);
        if (!k.generators_in_kernel)
            c.fail(s.to_string() + ": a generator does not kill the ambient class");
        if (!k.generators_span_kernel)
            c.fail(s.to_string() + ": generators do not span the kernel");
    }
    return c;
}

CheckResult check_relations_vanish(int n, const VerifyOptions& opt, const Budget& budget)
{
    auto c = named("relations_vanish");
    const Reducer red(n);
    const RelationSet rs = generate_relations(n, n - 3, opt.relations);
    auto test = [&](const Relation& r, const Monomial& m) {
        const Polynomial nf = red.normal_form(r.poly * m);
        if (!nf.is_zero())
            c.fail(std::string(family_tag(r.family)) + " " + render(r.poly) + " times " + render(m) + " -> " +
                   render(nf));
    };
    for (const auto& r : rs.relations)
        test(r, Monomial());
    if (n <= 6) {
        for (const auto& r : rs.relations) {
            const int k = r.poly.homogeneous_degree();
            for (int e = 1; k + e <= n - 3; ++e)
                for (const auto& m : kernel_reduced_monomials(n, e))
                    test(r, m);
            budget.check("relation multiples");
        }
        return c;
    }
    std::mt19937_64 rng(opt.seed);
    const auto gens = generators(n);
    std::uniform_int_distribution<std::size_t> pick_rel(0, rs.relations.size() - 1);
    for (std::size_t s = 0; s < opt.samples; ++s) {
        const auto& r = rs.relations[pick_rel(rng)];
        const int k = r.poly.homogeneous_degree();
        std::uniform_int_distribution<int> pick_deg(0, n - 3 - k);
        test(r, random_monomial(gens, pick_deg(rng), rng));
        if (s % 64 == 0)
            budget.check("sampled relation multiples");
    }
    return c;
}

CheckResult check_oracle_ranks(int n, const VerifyOptions& opt, const Budget& budget)
{
    auto c = named("oracle_ranks");
    OracleOptions o;
    o.columns = n <= 7 ? OracleColumns::AllMonomials : OracleColumns::KernelReduced;
    o.relations = opt.relations;
    for (int d = 0; d <= n - 3; ++d) {
        const auto rep = graded_rank_oracle(n, d, o, budget);
        const auto want = count_standard(n, d);
        if (rep.rank != want)
            c.fail("degree " + std::to_string(d) + ": oracle rank " + std::to_string(rep.rank) +
                   ", standard monomials " + std::to_string(want));
        if (!rep.torsion_free)
            c.fail("degree " + std::to_string(d) + ": torsion " + rep.other_factors.front().get_str());
    }
    return c;
}

CheckResult check_linear_agreement(int n, const VerifyOptions& opt, const Budget& budget)
{
    auto c = named("linear_agreement");
    const Reducer red(n);
    for (int d = 0; d <= n - 3; ++d) {
        const LinearReducer lr(n, d, opt.relations, budget);
        if (!lr.complete()) {
            c.fail("degree " + std::to_string(d) + ": linear table incomplete");
            continue;
        }
        for (const auto& m : kernel_reduced_monomials(n, d)) {
            const Polynomial a = red.normal_form(m), b = lr.normal_form(m);
            if (!(a == b))
                c.fail(render(m) + ": rewriting " + render(a) + ", linear " + render(b));
        }
        budget.check("linear agreement");
    }
    return c;
}

CheckResult check_boundary_presentation(int n, const VerifyOptions& opt, const Budget& budget)
{
    auto c = named("boundary_presentation");
    KeelRing ring(n);
    const Reducer red(n);
    const std::size_t pic = (std::size_t(1) << (n - 1)) - std::size_t(n) * (n - 1) / 2 - 1;
    if (ring.pic_rank() != pic || ring.pic_rank() != count_standard(n, 1))
        c.fail("Picard rank " + std::to_string(ring.pic_rank()) + ", expected " + std::to_string(pic));
    for (int d = 0; d <= n - 3; ++d) {
        if (ring.rank(d, budget) != count_standard(n, d))
            c.fail("degree " + std::to_string(d) + ": boundary rank " + std::to_string(ring.rank(d)));
        for (const auto& f : ring.invariant_factors(d, budget))
            if (f != 1) {
                c.fail("degree " + std::to_string(d) + ": torsion " + f.get_str());
                break;
            }
    }
    for (const auto& r : generate_relations(n, n - 3, opt.relations).relations) {
        if (!ring.vanishes(r.poly, budget))
            c.fail(std::string(family_tag(r.family)) + " " + render(r.poly) + " is nonzero in the boundary ring");
    }
    const auto& dict = ring.dictionary();
    for (const auto& rel : dict.four_point) {
        const Polynomial nf = red.normal_form(translate(rel, dict));
        if (!nf.is_zero())
            c.fail("four-point relation leaves " + render(nf));
    }
    for (const auto& [i, forms] : dict.a_expansions) {
        const Polynomial want = red.normal_form(Polynomial(Monomial::a(i)));
        for (const auto& f : forms)
            if (!(red.normal_form(translate(f, dict)) == want))
                c.fail("a" + std::to_string(i) + ": a boundary expansion disagrees");
    }
    for (const auto& [ij, form] : dict.pair_expansions) {
        const Polynomial want = red.normal_form(Polynomial(Monomial::a(ij.first)) + Polynomial(Monomial::a(ij.second)));
        if (!(red.normal_form(translate(form, dict)) == want))
            c.fail("a" + std::to_string(ij.first) + "+a" + std::to_string(ij.second) + ": expansion disagrees");
    }
    return c;
}

CheckResult check_pairings(int n, const VerifyOptions& opt, const Budget& budget)
{
    auto c = named("pairing");
    const Reducer red(n);
    for (int d = 0; d <= n - 3; ++d) {
        const auto rep = pairing_matrix(n, d, red, opt.convention, budget);
        const auto cert = verify_block_triangular(rep);
        for (const CheckResult* part : {&cert.block_zero, &cert.diagonal_blocks, &cert.unimodular})
            for (const auto& e : part->counterexamples)
                c.fail("degree " + std::to_string(d) + " " + part->name + ": " + e);
    }
    return c;
}

CheckResult check_sign_formula(int n, const Budget& budget)
{
    auto c = named("sign_formula");
    const Reducer red(n);
    std::vector<IndexSet> sets = admissible_sets(n);
    std::sort(sets.begin(), sets.end(), SubsetGreater{});
    for_each_laminar_family(sets, n - 3, [&](const std::vector<IndexSet>& family) {
        const Forest f = Forest::build(family, n);
        const Monomial dpart = maximal_d_part(f);
        if (dpart.degree() > n - 3)
            return;
        Monomial fa;
        for (int i : support_set(f).elements())
            fa = fa * Monomial::a(i);
        const Polynomial nf = red.normal_form(Polynomial(fa * dpart));
        const Polynomial want = Polynomial(red.top_monomial(), sign_epsilon(f));
        if (!(nf == want))
            c.fail(render(fa * dpart) + " -> " + render(nf) + ", sign formula gives " + render(want));
        if (!(top_product_fast(Polynomial(fa), dpart, n) == want))
            c.fail(render(fa * dpart) + ": fast product disagrees");
        budget.check("sign formula");
    });
    return c;
}

CheckResult check_filtration_vanishing(int n, const VerifyOptions& opt, const Budget& budget,
                                       std::size_t* instances)
{
    auto c = named("filtration_vanishing");
    const Reducer red(n);
    std::size_t count = 0;
    std::mt19937_64 rng(opt.seed);
    const auto gens = generators(n);
    // admissible monomial pairs (v, w), kept for the polynomial samples below
    std::vector<std::pair<Monomial, Monomial>> pairs;
    std::map<Monomial, int> p_of;
    auto test = [&](const Polynomial& v, const Polynomial& w) {
        ++count;
        const Polynomial nf = red.normal_form(v * w);
        if (!nf.is_zero())
            c.fail("(" + render(v) + ") * (" + render(w) + ") -> " + render(nf));
    };
    for (int d = 0; d <= n - 3; ++d)
        for (const auto& v : enumerate_standard(n, d, opt.convention)) {
            const int p = filtration_p(v);
            p_of.emplace(v.monomial(), p);
            for (int e = std::max(1, n - 2 - p); d + e <= n - 3; ++e) {
                auto consider = [&](const Monomial& w) {
                    if (!monomial_much_less(w, v.monomial(), opt.convention))
                        return;
                    pairs.emplace_back(v.monomial(), w);
                    test(Polynomial(v.monomial()), Polynomial(w));
                };
                if (n <= 6) {
                    for (const auto& w : all_monomials(n, e))
                        consider(w);
                } else {
                    for (std::size_t s = 0; s < 16; ++s)
                        consider(random_monomial(gens, e, rng));
                }
            }
            budget.check("filtration vanishing");
        }
    if (n <= 6 && !pairs.empty()) {
        // v a combination of standard monomials with p >= p(v0), w a combination
        // of monomials of one degree, each << every term of v
        std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (std::size_t s = 0; s < opt.samples; ++s) {
            const auto& [v0, w0] = pairs[pick(rng)];
            const int p = p_of.at(v0);
            std::vector<Monomial> vs{v0}, ws{w0};
            for (int t = 0; t < 2; ++t) {
                const auto& [v1, w1] = pairs[pick(rng)];
                if (v1.degree() == v0.degree() && p_of.at(v1) >= p && w1.degree() == w0.degree()) {
                    vs.push_back(v1);
                    ws.push_back(w1);
                }
            }
            Polynomial v, w;
            for (const auto& x : vs)
                v.add_term(x, coeff(rng) | 1);
            for (const auto& y : ws) {
                bool ok = true;
                for (const auto& x : vs)
                    ok = ok && monomial_much_less(y, x, opt.convention);
                if (ok)
                    w.add_term(y, coeff(rng) | 1);
            }
            if (!w.is_zero())
                test(v, w);
        }
    }
    if (instances)
        *instances = count;
    return c;
}

VerifyReport verify(int n, const VerifyOptions& opt, const Budget& budget)
{
    check_marking_count(n);
    VerifyReport rep;
    rep.n = n;
    rep.convention = opt.convention;
    rep.checks.push_back(check_count_symmetry(n));
    rep.checks.push_back(check_duality(n));
    rep.checks.push_back(check_degree_bookkeeping(n));
    budget.check("basis checks");
    rep.checks.push_back(check_kernels(n));
    budget.check("kernel checks");
    rep.checks.push_back(check_relations_vanish(n, opt, budget));
    rep.checks.push_back(check_oracle_ranks(n, opt, budget));
    rep.checks.push_back(check_linear_agreement(n, opt, budget));
    if (n >= 4 && n <= 6)
        rep.checks.push_back(check_boundary_presentation(n, opt, budget));
    rep.checks.push_back(check_pairings(n, opt, budget));
    rep.checks.push_back(check_sign_formula(n, budget));
    rep.checks.push_back(check_filtration_vanishing(n, opt, budget));
    return rep;
}

}  // namespace m0n
