#include "m0n/relations.hpp"

#include <algorithm>
#include <stdexcept>

namespace m0n {

namespace {

Polynomial a_var(int i) { return Polynomial(Monomial::a(i)); }
Polynomial d_var(IndexSet s) { return Polynomial(Monomial::d(s)); }

void require_admissible(IndexSet set, int n)
{
    check_marking_count(n);
    if (!is_admissible(set, n))
        throw std::invalid_argument(set.to_string() + " is not admissible for n=" + std::to_string(n));
}

/// Every subset of `pool`, via the standard submask walk.
template <class Visit>
void for_each_submask(IndexSet pool, Visit&& visit)
{
    const std::uint32_t full = pool.bits();
    std::uint32_t sub = full;
    while (true) {
        visit(IndexSet(sub));
        if (sub == 0)
            break;
        sub = (sub - 1) & full;
    }
}

}  // namespace

std::vector<IndexSet> admissible_supersets(IndexSet set, int n)
{
    std::vector<IndexSet> out;
    const IndexSet rest = IndexSet::range(1, n) - set;
    for_each_submask(rest, [&](IndexSet extra) {
        if (!extra.empty() && is_admissible(set | extra, n))
            out.push_back(set | extra);
    });
    std::sort(out.begin(), out.end(), SubsetLess{});
    return out;
}

AmbientClass ambient_class(IndexSet set, int n)
{
    require_admissible(set, n);
    Polynomial p;
    const int s = special_element(set, n);
    if (s != 0) {
        Monomial m;
        for (int i : (set - IndexSet{s}).elements())
            m = m * Monomial::a(i);
        p = Polynomial(m);
    } else {
        // e_{k-1}: drop one variable at a time
        for (int skip : set.elements()) {
            Monomial m;
            for (int i : set.elements())
                if (i != skip)
                    m = m * Monomial::a(i);
            p.add_term(m, 1);
        }
    }
    return {set, p};
}

std::vector<Polynomial> kernel_generators(IndexSet set, int n)
{
    require_admissible(set, n);
    std::vector<Polynomial> out;
    const int s = special_element(set, n);
    if (s != 0) {
        for (int i : (set - IndexSet{s}).elements())
            out.push_back(a_var(i));
        return out;
    }
    const auto el = set.elements();
    for (std::size_t x = 0; x < el.size(); ++x)
        for (std::size_t y = x + 1; y < el.size(); ++y)
            out.push_back(a_var(el[x]) - a_var(el[y]));
    for (std::size_t x = 0; x < el.size(); ++x)
        for (std::size_t y = x + 1; y < el.size(); ++y)
            out.push_back(Polynomial(Monomial::a(el[x]) * Monomial::a(el[y])));
    return out;
}

std::vector<DefiningDivisor> complement_divisors(IndexSet set, std::span<const IndexSet> parts, int n)
{
    require_admissible(set, n);
    IndexSet covered;
    for (IndexSet p : parts) {
        require_admissible(p, n);
        if (!p.is_proper_subset_of(set))
            throw std::invalid_argument(p.to_string() + " is not strictly inside " + set.to_string());
        if (p.intersects(covered))
            throw std::invalid_argument("parts of " + set.to_string() + " must be pairwise disjoint");
        covered |= p;
    }
    std::vector<IndexSet> blocks(parts.begin(), parts.end());
    for (int i : (set - covered).elements())
        blocks.push_back(IndexSet{i});

    const int s = special_element(set, n);
    const int anchor = s != 0 ? s : set.min();
    std::vector<IndexSet> others;
    for (IndexSet b : blocks)
        if (!b.contains(anchor))
            others.push_back(b);
    std::sort(others.begin(), others.end(), [](IndexSet x, IndexSet y) { return x.min() < y.min(); });

    std::vector<DefiningDivisor> out;
    for (IndexSet b : others) {
        const int rep = b.min();
        if (s != 0)
            out.push_back({a_var(rep), IndexSet{rep, s}});
        else
            out.push_back({a_var(anchor) + a_var(rep), IndexSet{anchor, rep}});
    }
    return out;
}

std::vector<DefiningDivisor> defining_divisors(IndexSet set, int n)
{
    return complement_divisors(set, {}, n);
}

Polynomial transform_correction(IndexSet set, int n)
{
    Polynomial p = d_var(set);
    for (IndexSet sup : admissible_supersets(set, n))
        p += d_var(sup);
    return p;
}

Polynomial chern_relation_split(IndexSet set, std::span<const IndexSet> parts, int n)
{
    const auto w = complement_divisors(set, parts, n);
    const Polynomial corr = transform_correction(set, n);
    Polynomial p = Polynomial::constant(1);
    for (IndexSet part : parts)
        p = p * d_var(part);
    for (const auto& c : w)
        p = p * (c.cls - corr);
    return p;
}

Polynomial chern_relation_full(IndexSet set, int n)
{
    return chern_relation_split(set, {}, n);
}

Polynomial chern_relation_mixed(IndexSet set, IndexSet part, int n)
{
    const IndexSet parts[] = {part};
    return chern_relation_split(set, parts, n);
}

std::string_view family_tag(RelationFamily f)
{
    switch (f) {
    case RelationFamily::Square: return "R1";
    case RelationFamily::Incompatible: return "R2";
    case RelationFamily::Kernel: return "R3";
    case RelationFamily::MixedChern: return "R4";
    case RelationFamily::FullChern: return "R5";
    }
    return "R?";
}

std::size_t RelationSet::count(RelationFamily f) const
{
    return static_cast<std::size_t>(
        std::count_if(relations.begin(), relations.end(), [f](const Relation& r) { return r.family == f; }));
}

RelationSet generate_relations(int n, int max_degree, RelationOptions options)
{
    check_marking_count(n);
    RelationSet rs;
    rs.n = n;
    rs.max_degree = max_degree;
    rs.options = options;
    auto& out = rs.relations;
    const auto sets = admissible_sets(n);

    if (max_degree >= 2)
        for (int i = 1; i <= n - 3; ++i)
            out.push_back({RelationFamily::Square, Polynomial(Monomial::a(i, 2)), i, {}, std::nullopt});

    if (max_degree >= 2)
        for (std::size_t x = 0; x < sets.size(); ++x)
            for (std::size_t y = x + 1; y < sets.size(); ++y)
                if (!is_compatible(sets[x], sets[y]))
                    out.push_back({RelationFamily::Incompatible,
                                   Polynomial(Monomial::d(sets[x]) * Monomial::d(sets[y])), 0,
                                   {sets[x], sets[y]}, std::nullopt});

    for (IndexSet I : sets)
        for (const Polynomial& g : kernel_generators(I, n)) {
            Polynomial rel = g * Monomial::d(I);
            if (rel.homogeneous_degree() <= max_degree)
                out.push_back({RelationFamily::Kernel, std::move(rel), 0, {I}, g});
        }

    for (IndexSet I : sets) {
        std::vector<IndexSet> inner;
        for (IndexSet J : sets)
            if (J.is_proper_subset_of(I))
                inner.push_back(J);
        std::vector<IndexSet> chosen;
        auto rec = [&](auto&& self, std::size_t start, IndexSet used) -> void {
            if (!chosen.empty()) {
                const int k = static_cast<int>(chosen.size());
                const int degree = k + (I.size() - used.size() + k - 1);
                if (degree <= max_degree) {
                    std::vector<IndexSet> prov{I};
                    prov.insert(prov.end(), chosen.begin(), chosen.end());
                    out.push_back({RelationFamily::MixedChern, chern_relation_split(I, chosen, n), 0,
                                   std::move(prov), std::nullopt});
                }
                if (!options.multi_split)
                    return;
            }
            for (std::size_t t = start; t < inner.size(); ++t) {
                if (inner[t].intersects(used))
                    continue;
                chosen.push_back(inner[t]);
                self(self, t + 1, used | inner[t]);
                chosen.pop_back();
            }
        };
        rec(rec, 0, IndexSet{});
    }

    for (IndexSet I : sets)
        if (I.size() - 1 <= max_degree)
            out.push_back({RelationFamily::FullChern, chern_relation_full(I, n), 0, {I}, std::nullopt});
    return rs;
}

KeelDictionary keel_dictionary(int n)
{
    check_marking_count(n);
    if (n < 4)
        throw std::invalid_argument("the boundary presentation needs n >= 4");
    KeelDictionary dict;
    dict.n = n;
    const IndexSet all = IndexSet::range(1, n);
    const IndexSet specials = special_markings(n);
    for_each_submask(all, [&](IndexSet t) {
        if (t.size() >= 2 && t.size() <= n - 2 && (t & specials).size() <= 1)
            dict.divisors.push_back(t);
    });
    std::sort(dict.divisors.begin(), dict.divisors.end(), SubsetLess{});

    auto sum_containing = [&](IndexSet must) {
        KeelLinearForm f;
        for (IndexSet t : dict.divisors)
            if (must.is_subset_of(t))
                f[t] = 1;
        return f;
    };
    for (int i = 1; i <= n - 3; ++i)
        dict.a_expansions[i] = {sum_containing(IndexSet{i, n - 2}), sum_containing(IndexSet{i, n - 1}),
                                sum_containing(IndexSet{i, n})};
    for (int i = 1; i <= n - 3; ++i)
        for (int j = i + 1; j <= n - 3; ++j)
            dict.pair_expansions[{i, j}] = sum_containing(IndexSet{i, j});

    for (IndexSet t : dict.divisors) {
        if (t.size() >= 3) {
            dict.backward[t] = d_var(t);
            continue;
        }
        const int s = special_element(t, n);
        Polynomial p;
        if (s != 0) {
            p = a_var((t - IndexSet{s}).min());
        } else {
            p = a_var(t.min()) + a_var(t.max());
        }
        for (IndexSet I : admissible_supersets(t, n))
            p -= d_var(I);
        dict.backward[t] = p;
    }

    // ij|kl - ik|jl and ij|kl - il|jk for each 4-subset
    auto separating = [&](int i, int j, int k, int l) {
        KeelLinearForm f;
        const IndexSet a{i, j}, b{k, l};
        for (IndexSet t : dict.divisors)
            if ((a.is_subset_of(t) && !t.intersects(b)) || (b.is_subset_of(t) && !t.intersects(a)))
                f[t] += 1;
        return f;
    };
    auto difference = [](KeelLinearForm x, const KeelLinearForm& y) {
        for (const auto& [t, c] : y) {
            x[t] -= c;
            if (x[t] == 0)
                x.erase(t);
        }
        return x;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    const auto p1 = separating(i, j, k, l);
                    dict.four_point.push_back(difference(p1, separating(i, k, j, l)));
                    dict.four_point.push_back(difference(p1, separating(i, l, j, k)));
                }

    // D_T D_T' = 0 unless the underlying partitions are compatible
    for (std::size_t x = 0; x < dict.divisors.size(); ++x)
        for (std::size_t y = x + 1; y < dict.divisors.size(); ++y) {
            const IndexSet t = dict.divisors[x], u = dict.divisors[y];
            const IndexSet tc = all - t;
            const bool ok = t.is_subset_of(u) || u.is_subset_of(t) || !t.intersects(u) || tc.is_subset_of(u) ||
                            u.is_subset_of(tc) || !tc.intersects(u);
            if (!ok)
                dict.incompatible.emplace_back(t, u);
        }
    return dict;
}

Polynomial translate(const KeelLinearForm& form, const KeelDictionary& dict)
{
    Polynomial p;
    for (const auto& [t, c] : form) {
        auto it = dict.backward.find(t);
        if (it == dict.backward.end())
            throw std::invalid_argument(t.to_string() + " is not a normalized boundary divisor");
        p += it->second * c;
    }
    return p;
}

}  // namespace m0n
