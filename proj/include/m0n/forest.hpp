#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "m0n/index_set.hpp"

namespace m0n {

/// Containment forest of a pairwise nested-or-disjoint family of admissible
/// sets.  There is an edge (r, s) when I_s is inclusion-maximal among the sets
/// strictly inside I_r, so every non-root vertex has exactly one parent.
/// Roots are the inclusion-maximal sets; external vertices are the childless ones.
class Forest {
public:
    Forest() = default;

    /// Vertices keep the input order.  Throws std::invalid_argument on
    /// duplicate, inadmissible or incompatible sets.
    static Forest build(std::span<const IndexSet> sets, int n);
    /// As build(), but returns nullopt for an incompatible family.
    static std::optional<Forest> try_build(std::span<const IndexSet> sets, int n);

    int markings() const { return n_; }
    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    IndexSet set(std::size_t v) const { return sets_[v]; }
    const std::vector<IndexSet>& sets() const { return sets_; }

    std::optional<std::size_t> parent(std::size_t v) const;
    const std::vector<std::size_t>& children(std::size_t v) const { return children_[v]; }
    int degree(std::size_t v) const { return static_cast<int>(children_[v].size()); }
    bool is_root(std::size_t v) const { return parent_[v] == npos; }
    bool is_external(std::size_t v) const { return children_[v].empty(); }

    std::vector<std::size_t> roots() const;
    /// (parent, child) pairs, ordered by parent then child index.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    /// Vertices whose set is contained in I_v, v included, ascending.
    std::vector<std::size_t> closure(std::size_t v) const;

    /// Union of the sets strictly below v.
    IndexSet union_below(std::size_t v) const;
    /// Union of every vertex set.
    IndexSet union_all() const;

    /// |I_v| - |union below v| + deg(v) - 2: the largest exponent of D_{I_v}
    /// in a standard monomial with this forest.
    int exponent_cap(std::size_t v) const;

private:
    static Forest assemble(std::span<const IndexSet> sets, int n);
    static std::optional<Forest> checked(std::span<const IndexSet> sets, int n, bool throw_on_incompatible);

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    int n_ = 0;
    std::vector<IndexSet> sets_;
    std::vector<std::size_t> parent_;
    std::vector<std::vector<std::size_t>> children_;
};

/// S = { min J : J a root free of special markings }
///     ∪ ( {1..n} minus the union of all sets, minus the specials ).
IndexSet support_set(const Forest& f);

/// Calls visit(family) for every pairwise compatible subfamily of `sets`
/// with at most max_size members, the empty family included.  Members keep
/// the order of `sets`.
template <class Visit>
void for_each_laminar_family(const std::vector<IndexSet>& sets, int max_size, Visit&& visit)
{
    std::vector<IndexSet> chosen;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        visit(chosen);
        if (static_cast<int>(chosen.size()) == max_size)
            return;
        for (std::size_t k = start; k < sets.size(); ++k) {
            const IndexSet cand = sets[k];
            bool ok = true;
            for (IndexSet c : chosen)
                if (!is_compatible(c, cand)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            chosen.push_back(cand);
            self(self, k + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace m0n
