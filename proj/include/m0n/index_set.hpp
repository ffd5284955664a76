#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace m0n {

/// Largest marking count representable by the bitmask encoding of IndexSet.
inline constexpr int kMaxMarkings = 31;

/// A subset of the markings {1,...,n}; element i is stored in bit i-1.
class IndexSet {
public:
    constexpr IndexSet() = default;
    constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
    IndexSet(std::initializer_list<int> elems);
    explicit IndexSet(std::span<const int> elems);

    /// {lo, lo+1, ..., hi}; empty when hi < lo.
    static IndexSet range(int lo, int hi);

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int i) const { return i >= 1 && i <= 32 && ((bits_ >> (i - 1)) & 1u); }
    /// Smallest element; 0 for the empty set.
    constexpr int min() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
    /// Largest element; 0 for the empty set.
    constexpr int max() const { return bits_ ? 32 - std::countl_zero(bits_) : 0; }

    constexpr bool is_subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool is_proper_subset_of(IndexSet o) const { return is_subset_of(o) && bits_ != o.bits_; }
    constexpr bool intersects(IndexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
    constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
    constexpr IndexSet operator-(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }
    IndexSet& operator|=(IndexSet o) { bits_ |= o.bits_; return *this; }

    void insert(int i);
    void erase(int i);

    std::vector<int> elements() const;

    /// "{1,2,3}".
    std::string to_string() const;

    constexpr bool operator==(const IndexSet&) const = default;
    /// Structural order on the bit pattern; only for use as a container key.
    constexpr auto operator<=>(const IndexSet&) const = default;

private:
    std::uint32_t bits_ = 0;
};

/// The special markings {n-2, n-1, n}.
IndexSet special_markings(int n);

constexpr bool is_special(int i, int n) { return i >= n - 2 && i <= n; }

/// The special element of I, or 0 when I contains none.  Assumes at most one.
int special_element(IndexSet set, int n);

/// Throws std::invalid_argument unless 3 <= n <= kMaxMarkings.
void check_marking_count(int n);

/// Condition (*): |I ∩ {n-2,n-1,n}| <= 1 and 3 <= |I| <= n-2.
/// Throws std::invalid_argument when I has elements outside {1..n}.
bool is_admissible(IndexSet set, int n);

/// Nested or disjoint.
constexpr bool is_compatible(IndexSet a, IndexSet b)
{
    return a.is_subset_of(b) || b.is_subset_of(a) || !a.intersects(b);
}

/// The order on subsets: smaller cardinality first; for equal cardinality
/// the set owning the smallest element of the symmetric difference is smaller.
/// Returns false when a == b.
constexpr bool subset_less(IndexSet a, IndexSet b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    const std::uint32_t diff = a.bits() ^ b.bits();
    if (diff == 0)
        return false;
    const std::uint32_t lowest = diff & (~diff + 1u);
    return (a.bits() & lowest) != 0;
}

struct SubsetLess {
    constexpr bool operator()(IndexSet a, IndexSet b) const { return subset_less(a, b); }
};

struct SubsetGreater {
    constexpr bool operator()(IndexSet a, IndexSet b) const { return subset_less(b, a); }
};

/// All admissible subsets for n markings, ascending in subset_less.
/// Exponential in n; intended for n up to about 12.
std::vector<IndexSet> admissible_sets(int n);

}  // namespace m0n
