#include "m0n/index_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace m0n {

IndexSet::IndexSet(std::initializer_list<int> elems)
    : IndexSet(std::span<const int>(elems.begin(), elems.size()))
{
}

IndexSet::IndexSet(std::span<const int> elems)
{
    for (int i : elems)
        insert(i);
}

IndexSet IndexSet::range(int lo, int hi)
{
    IndexSet s;
    for (int i = lo; i <= hi; ++i)
        s.insert(i);
    return s;
}

void IndexSet::insert(int i)
{
    if (i < 1 || i > 32)
        throw std::out_of_range("index set element out of range: " + std::to_string(i));
    bits_ |= 1u << (i - 1);
}

void IndexSet::erase(int i)
{
    if (i >= 1 && i <= 32)
        bits_ &= ~(1u << (i - 1));
}

std::vector<int> IndexSet::elements() const
{
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b; b &= b - 1)
        out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string IndexSet::to_string() const
{
    std::string s = "{";
    bool first = true;
    for (int i : elements()) {
        if (!first)
            s += ',';
        s += std::to_string(i);
        first = false;
    }
    s += '}';
    return s;
}

IndexSet special_markings(int n)
{
    return IndexSet{n - 2, n - 1, n};
}

int special_element(IndexSet set, int n)
{
    for (int s = n - 2; s <= n; ++s)
        if (set.contains(s))
            return s;
    return 0;
}

void check_marking_count(int n)
{
    if (n < 3 || n > kMaxMarkings)
        throw std::invalid_argument("marking count must lie in [3, " + std::to_string(kMaxMarkings) +
                                    "], got " + std::to_string(n));
}

bool is_admissible(IndexSet set, int n)
{
    check_marking_count(n);
    if (!set.is_subset_of(IndexSet::range(1, n)))
        throw std::invalid_argument("index set " + set.to_string() + " is not contained in {1.." +
                                    std::to_string(n) + "}");
    const int size = set.size();
    return (set & special_markings(n)).size() <= 1 && size >= 3 && size <= n - 2;
}

std::vector<IndexSet> admissible_sets(int n)
{
    check_marking_count(n);
    if (n > 20)
        throw std::invalid_argument("admissible_sets: n too large to enumerate");
    std::vector<IndexSet> out;
    const std::uint32_t ordinary = (1u << (n - 3)) - 1u;
    // at most one special element: enumerate subsets of the ordinary markings,
    // then optionally add one special
    for (std::uint32_t b = 0; b <= ordinary; ++b) {
        const IndexSet base(b);
        if (base.size() >= 3 && base.size() <= n - 2)
            out.push_back(base);
        for (int s = n - 2; s <= n; ++s) {
            IndexSet with = base;
            with.insert(s);
            if (with.size() >= 3 && with.size() <= n - 2)
                out.push_back(with);
        }
    }
    std::sort(out.begin(), out.end(), SubsetLess{});
    return out;
}

}  // namespace m0n
