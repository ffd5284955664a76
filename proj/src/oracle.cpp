#include "m0n/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "m0n/forest.hpp"
#include "m0n/reduction.hpp"
#include "m0n/standard.hpp"

namespace m0n {

std::vector<Monomial> all_monomials(int n, int d)
{
    check_marking_count(n);
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    const auto gens = generators(n);
    std::vector<int> counts(gens.size(), 0);
    auto rec = [&](auto&& self, std::size_t g, int left) -> void {
        if (g == gens.size()) {
            if (left > 0)
                return;
            Monomial m;
            for (std::size_t t = 0; t < gens.size(); ++t)
                if (counts[t])
                    m = m * Monomial::of(gens[t], counts[t]);
            out.push_back(std::move(m));
            return;
        }
        for (int e = left; e >= 0; --e) {
            counts[g] = e;
            self(self, g + 1, left - e);
        }
        counts[g] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> kernel_reduced_monomials(int n, int d)
{
    check_marking_count(n);
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    std::vector<IndexSet> sets = admissible_sets(n);
    std::sort(sets.begin(), sets.end(), SubsetGreater{});
    for_each_laminar_family(sets, d, [&](const std::vector<IndexSet>& family) {
        const Forest f = Forest::build(family, n);
        const auto support = support_set(f).elements();
        const int m = static_cast<int>(family.size());
        std::vector<int> exps(m, 1);
        auto emit = [&](int a_degree) {
            const int k = static_cast<int>(support.size());
            if (a_degree > k)
                return;
            std::vector<bool> pick(k, false);
            std::fill(pick.begin(), pick.begin() + a_degree, true);
            std::vector<Monomial::DFactor> dfs;
            for (int v = 0; v < m; ++v)
                dfs.emplace_back(family[v], exps[v]);
            do {
                std::vector<Monomial::AFactor> afs;
                for (int t = 0; t < k; ++t)
                    if (pick[t])
                        afs.emplace_back(support[t], 1);
                out.push_back(Monomial::from_factors(std::move(afs), dfs));
            } while (std::prev_permutation(pick.begin(), pick.end()));
        };
        auto rec = [&](auto&& self, int v, int used) -> void {
            if (v == m) {
                emit(d - used);
                return;
            }
            for (int e = 1; used + e <= d; ++e) {
                exps[v] = e;
                self(self, v + 1, used + e);
            }
        };
        rec(rec, 0, 0);
    });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using ColumnIndex = std::unordered_map<Monomial, std::uint32_t, MonomialHash>;

ColumnIndex index_columns(const std::vector<Monomial>& cols)
{
    ColumnIndex idx;
    idx.reserve(cols.size());
    for (std::uint32_t c = 0; c < cols.size(); ++c)
        idx.emplace(cols[c], c);
    return idx;
}

std::map<std::uint32_t, BigInt> to_row(const Polynomial& p, const ColumnIndex& idx)
{
    std::map<std::uint32_t, BigInt> row;
    for (const auto& [m, c] : p.terms()) {
        auto it = idx.find(m);
        if (it == idx.end())
            throw std::logic_error("relation multiple leaves the column set: " + render(m));
        row[it->second] += BigInt(static_cast<long>(c));
    }
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    return row;
}

/// Feeds every relation multiple of degree d into `sink`.
template <class Sink>
void relation_multiples(int n, int d, const OracleOptions& opt, const Budget& budget, Sink&& sink)
{
    const RelationSet rs = generate_relations(n, d, opt.relations);
    if (opt.columns == OracleColumns::AllMonomials) {
        std::map<int, std::vector<Monomial>> cofactors;
        for (const auto& r : rs.relations) {
            const int k = r.poly.homogeneous_degree();
            if (k < 0 || k > d)
                continue;
            auto [it, fresh] = cofactors.try_emplace(d - k);
            if (fresh)
                it->second = all_monomials(n, d - k);
            for (const auto& m : it->second)
                sink(r.poly * m);
            budget.check("relation rows");
        }
        return;
    }
    const Reducer kernel(n);
    std::map<int, std::vector<Monomial>> cofactors;
    for (const auto& r : rs.relations) {
        if (r.family != RelationFamily::MixedChern && r.family != RelationFamily::FullChern)
            continue;
        const int k = r.poly.homogeneous_degree();
        if (k < 0 || k > d)
            continue;
        auto [it, fresh] = cofactors.try_emplace(d - k);
        if (fresh)
            it->second = kernel_reduced_monomials(n, d - k);
        for (const auto& m : it->second)
            sink(kernel.kernel_reduce(r.poly * m));
        budget.check("relation rows");
    }
}

}  // namespace

GradedOracleReport graded_rank_oracle(int n, int d, const OracleOptions& options, const Budget& budget)
{
    check_marking_count(n);
    GradedOracleReport rep;
    rep.n = n;
    rep.d = d;
    rep.columns = options.columns;
    const auto cols = options.columns == OracleColumns::AllMonomials ? all_monomials(n, d)
                                                                     : kernel_reduced_monomials(n, d);
    rep.monomials = cols.size();
    const ColumnIndex idx = index_columns(cols);
    SparseEchelon e(cols.size());
    relation_multiples(n, d, options, budget, [&](const Polynomial& p) {
        ++rep.relation_rows;
        if (!p.is_zero())
            e.add_row(to_row(p, idx));
    });
    e.finalize();
    budget.check("elimination");
    for (const BigInt& f : e.invariant_factors()) {
        if (f == 1)
            ++rep.unit_factors;
        else
            rep.other_factors.push_back(f);
    }
    rep.rank = cols.size() - e.rank();
    rep.torsion_free = rep.other_factors.empty();
    return rep;
}

LinearReducer::LinearReducer(int n, int d, RelationOptions relations, const Budget& budget)
    : n_(n), d_(d), columns_(kernel_reduced_monomials(n, d)), index_(index_columns(columns_)),
      echelon_(columns_.size())
{
    std::vector<int> pref(columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c)
        pref[c] = is_standard(columns_[c], n) ? -1 : 0;
    echelon_.set_pivot_preference(pref);
    OracleOptions opt;
    opt.columns = OracleColumns::KernelReduced;
    opt.relations = relations;
    relation_multiples(n, d, opt, budget, [&](const Polynomial& p) {
        ++rows_;
        if (!p.is_zero())
            echelon_.add_row(to_row(p, index_));
    });
    echelon_.finalize();
    complete_ = echelon_.hard_rows().empty();
    for (std::size_t c = 0; c < columns_.size() && complete_; ++c)
        if (pref[c] == 0 && !echelon_.is_pivot(static_cast<std::uint32_t>(c)))
            complete_ = false;
}

Polynomial LinearReducer::normal_form(const Monomial& m) const
{
    if (!complete_)
        throw std::logic_error("linear reduction table is incomplete");
    if (m.degree() != d_)
        throw std::invalid_argument("monomial degree does not match the table");
    const auto k = Reducer(n_).kernel_reduce(m);
    if (!k)
        return {};
    SparseRow v{{index_.at(*k), BigInt(1)}};
    Polynomial out;
    for (const auto& [c, x] : echelon_.reduce(std::move(v)))
        out.add_term(columns_[c], to_coeff(x));
    return out;
}

KernelComparison compare_kernel(IndexSet set, int n)
{
    KernelComparison cmp;
    cmp.set = set;
    const int m = n - 3;
    const Polynomial cls = ambient_class(set, n).poly;
    const auto gens = kernel_generators(set, n);

    auto bits_of = [](const Monomial& mono) {
        std::uint32_t b = 0;
        for (const auto& [i, e] : mono.a_factors()) {
            if (e != 1)
                return std::uint32_t(~0u);
            b |= 1u << (i - 1);
        }
        return b;
    };
    // square-free product of two bitmask polynomials
    using BitPoly = std::map<std::uint32_t, long>;
    auto to_bits = [&](const Polynomial& p) {
        BitPoly out;
        for (const auto& [mono, c] : p.terms()) {
            const auto b = bits_of(mono);
            if (b != ~0u)
                out[b] += c;
        }
        return out;
    };
    auto times = [](const BitPoly& p, std::uint32_t x) {
        BitPoly out;
        for (const auto& [b, c] : p)
            if ((b & x) == 0)
                out[b | x] += c;
        std::erase_if(out, [](const auto& e) { return e.second == 0; });
        return out;
    };
    const BitPoly cls_bits = to_bits(cls);
    for (const auto& g : gens) {
        BitPoly prod;
        for (const auto& [b, c] : to_bits(g))
            for (const auto& [bb, cc] : times(cls_bits, b))
                prod[bb] += c * cc;
        std::erase_if(prod, [](const auto& e) { return e.second == 0; });
        if (!prod.empty())
            cmp.generators_in_kernel = false;
    }

    std::vector<std::vector<std::uint32_t>> by_degree(m + 1);
    for (std::uint32_t b = 0; b < (1u << m); ++b)
        by_degree[std::popcount(b)].push_back(b);
    auto position = [&](std::uint32_t b) {
        const auto& v = by_degree[std::popcount(b)];
        return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), b) - v.begin());
    };
    const int shift = set.size() - 1;
    for (int d = 0; d <= m; ++d) {
        const auto& basis = by_degree[d];
        // multiplication map E_d -> E_{d+shift}, as rows indexed by target
        std::size_t image_rank = 0;
        if (d + shift <= m) {
            DenseMatrix mult(by_degree[d + shift].size(), std::vector<BigInt>(basis.size(), 0));
            for (std::size_t x = 0; x < basis.size(); ++x)
                for (const auto& [b, c] : times(cls_bits, basis[x]))
                    mult[position(b)][x] = c;
            image_rank = matrix_rank(std::move(mult));
        }
        const std::size_t kernel_rank = basis.size() - image_rank;
        cmp.kernel_ranks.push_back(kernel_rank);

        SparseEchelon span(basis.size());
        for (const auto& g : gens) {
            const BitPoly gb = to_bits(g);
            const int gd = g.homogeneous_degree();
            if (gd > d)
                continue;
            for (std::uint32_t x : by_degree[d - gd]) {
                std::map<std::uint32_t, BigInt> acc;
                for (const auto& [b, c] : times(gb, x))
                    acc[static_cast<std::uint32_t>(position(b))] += c;
                span.add_row(acc);
            }
        }
        span.finalize();
        bool saturated = true;
        for (const auto& f : span.invariant_factors())
            saturated = saturated && f == 1;
        if (span.rank() != kernel_rank || !saturated)
            cmp.generators_span_kernel = false;
    }
    return cmp;
}

}  // namespace m0n
