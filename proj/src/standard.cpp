#include "m0n/standard.hpp"

#include <algorithm>
#include <stdexcept>

namespace m0n {

StandardMonomial::StandardMonomial(Monomial m, Forest f, IndexSet support)
    : mono_(std::move(m)), forest_(std::move(f)), support_(support), a_support_(mono_.a_support())
{
}

std::optional<StandardMonomial> StandardMonomial::make(const Monomial& m, int n)
{
    m.validate(n);
    const auto sets = m.d_sets();
    auto forest = Forest::try_build(sets, n);
    if (!forest)
        return std::nullopt;
    const IndexSet support = support_set(*forest);
    for (const auto& [i, e] : m.a_factors())
        if (e != 1 || !support.contains(i))
            return std::nullopt;
    for (std::size_t v = 0; v < forest->size(); ++v)
        if (m.d_factors()[v].second > forest->exponent_cap(v))
            return std::nullopt;
    return StandardMonomial(m, std::move(*forest), support);
}

StandardMonomial StandardMonomial::from(const Monomial& m, int n)
{
    auto s = make(m, n);
    if (!s)
        throw std::invalid_argument(render(m) + " is not standard for n=" + std::to_string(n));
    return *s;
}

bool is_standard(const Monomial& m, int n)
{
    return StandardMonomial::make(m, n).has_value();
}

namespace {

/// Appends every standard monomial of degree d whose D-part uses exactly the
/// sets of `forest`.
void emit_for_forest(const Forest& forest, int d, std::vector<Monomial>& out)
{
    const std::size_t m = forest.size();
    std::vector<int> caps(m);
    int cap_sum = 0;
    for (std::size_t v = 0; v < m; ++v) {
        caps[v] = forest.exponent_cap(v);
        if (caps[v] < 1)
            return;
        cap_sum += caps[v];
    }
    const IndexSet support = support_set(forest);
    const std::vector<int> support_elems = support.elements();
    if (static_cast<int>(m) > d || cap_sum + support.size() < d)
        return;

    std::vector<int> exps(m, 1);
    auto emit_a_parts = [&](int a_degree) {
        // every a_degree-subset of S
        const int k = static_cast<int>(support_elems.size());
        if (a_degree > k)
            return;
        std::vector<bool> pick(k, false);
        std::fill(pick.begin(), pick.begin() + a_degree, true);
        std::vector<Monomial::DFactor> dfs;
        for (std::size_t v = 0; v < m; ++v)
            dfs.emplace_back(forest.set(v), exps[v]);
        do {
            std::vector<Monomial::AFactor> afs;
            for (int t = 0; t < k; ++t)
                if (pick[t])
                    afs.emplace_back(support_elems[t], 1);
            out.push_back(Monomial::from_factors(std::move(afs), dfs));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    };
    auto rec = [&](auto&& self, std::size_t v, int used) -> void {
        if (v == m) {
            emit_a_parts(d - used);
            return;
        }
        for (int e = 1; e <= caps[v] && used + e <= d; ++e) {
            exps[v] = e;
            self(self, v + 1, used + e);
        }
    };
    rec(rec, 0, 0);
}

std::vector<Monomial> standard_monomials(int n, int d)
{
    check_marking_count(n);
    std::vector<Monomial> out;
    if (d < 0 || d > n - 3)
        return out;
    const auto sets = admissible_sets(n);
    for_each_laminar_family(sets, d, [&](const std::vector<IndexSet>& family) {
        std::vector<IndexSet> ordered = family;
        std::sort(ordered.begin(), ordered.end(), SubsetGreater{});
        emit_for_forest(Forest::build(ordered, n), d, out);
    });
    return out;
}

}  // namespace

std::vector<StandardMonomial> enumerate_standard(int n, int d, OrderConvention c)
{
    auto monos = standard_monomials(n, d);
    std::sort(monos.begin(), monos.end(), MonomialOrder{c});
    std::vector<StandardMonomial> out;
    out.reserve(monos.size());
    for (const auto& m : monos)
        out.push_back(StandardMonomial::from(m, n));
    return out;
}

std::size_t count_standard(int n, int d)
{
    return standard_monomials(n, d).size();
}

std::vector<int> dual_exponents(const StandardMonomial& v)
{
    const Forest& f = v.forest();
    std::vector<int> out(f.size());
    for (std::size_t r = 0; r < f.size(); ++r)
        out[r] = f.exponent_cap(r) + 1 - v.exponent(r);
    return out;
}

StandardMonomial dual(const StandardMonomial& v)
{
    const Forest& f = v.forest();
    const auto j = dual_exponents(v);
    std::vector<Monomial::AFactor> afs;
    for (int i : (v.support() - v.a_support()).elements())
        afs.emplace_back(i, 1);
    std::vector<Monomial::DFactor> dfs;
    for (std::size_t r = 0; r < f.size(); ++r)
        dfs.emplace_back(f.set(r), j[r]);
    return StandardMonomial::from(Monomial::from_factors(std::move(afs), std::move(dfs)), v.markings());
}

int filtration_p(const StandardMonomial& v)
{
    int p = v.monomial().a_degree();
    const Forest& f = v.forest();
    for (std::size_t r : f.roots())
        p += f.set(r).size() - 1;
    return p;
}

}  // namespace m0n
