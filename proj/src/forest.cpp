#include "m0n/forest.hpp"

#include <stdexcept>

namespace m0n {

Forest Forest::build(std::span<const IndexSet> sets, int n)
{
    return *checked(sets, n, true);
}

std::optional<Forest> Forest::try_build(std::span<const IndexSet> sets, int n)
{
    return checked(sets, n, false);
}

std::optional<Forest> Forest::checked(std::span<const IndexSet> sets, int n, bool throw_on_incompatible)
{
    for (IndexSet s : sets)
        if (!is_admissible(s, n))
            throw std::invalid_argument("forest vertex " + s.to_string() + " is not admissible");
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (sets[i] == sets[j])
                throw std::invalid_argument("duplicate forest vertex " + sets[i].to_string());
            if (!is_compatible(sets[i], sets[j])) {
                if (throw_on_incompatible)
                    throw std::invalid_argument("sets " + sets[i].to_string() + " and " + sets[j].to_string() +
                                                " are neither nested nor disjoint");
                return std::nullopt;
            }
        }
    return assemble(sets, n);
}

Forest Forest::assemble(std::span<const IndexSet> sets, int n)
{
    Forest f;
    f.n_ = n;
    f.sets_.assign(sets.begin(), sets.end());
    const std::size_t m = sets.size();
    f.parent_.assign(m, npos);
    f.children_.assign(m, {});
    // in a laminar family the parent is the smallest strict superset
    for (std::size_t v = 0; v < m; ++v) {
        for (std::size_t w = 0; w < m; ++w) {
            if (w == v || !sets[v].is_proper_subset_of(sets[w]))
                continue;
            if (f.parent_[v] == npos || sets[w].is_proper_subset_of(sets[f.parent_[v]]))
                f.parent_[v] = w;
        }
    }
    for (std::size_t v = 0; v < m; ++v)
        if (f.parent_[v] != npos)
            f.children_[f.parent_[v]].push_back(v);
    return f;
}

std::optional<std::size_t> Forest::parent(std::size_t v) const
{
    if (parent_[v] == npos)
        return std::nullopt;
    return parent_[v];
}

std::vector<std::size_t> Forest::roots() const
{
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < size(); ++v)
        if (is_root(v))
            out.push_back(v);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Forest::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t v = 0; v < size(); ++v)
        for (std::size_t c : children_[v])
            out.emplace_back(v, c);
    return out;
}

std::vector<std::size_t> Forest::closure(std::size_t v) const
{
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < size(); ++w)
        if (sets_[w].is_subset_of(sets_[v]))
            out.push_back(w);
    return out;
}

IndexSet Forest::union_below(std::size_t v) const
{
    IndexSet u;
    for (std::size_t c : children_[v])
        u |= sets_[c];
    return u;
}

IndexSet Forest::union_all() const
{
    IndexSet u;
    for (IndexSet s : sets_)
        u |= s;
    return u;
}

int Forest::exponent_cap(std::size_t v) const
{
    return sets_[v].size() - union_below(v).size() + degree(v) - 2;
}

IndexSet support_set(const Forest& f)
{
    const int n = f.markings();
    IndexSet s;
    for (std::size_t r : f.roots()) {
        const IndexSet root = f.set(r);
        if (!root.intersects(special_markings(n)))
            s.insert(root.min());
    }
    return s | (IndexSet::range(1, n) - f.union_all() - special_markings(n));
}

}  // namespace m0n
