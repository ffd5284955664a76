#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "m0n/index_set.hpp"

namespace m0n {

/// Which end of the subset order the monomial comparison scans first.
/// Descending: largest subsets first.  Ascending: smallest subsets first.
/// In both, at the first subset where the D-exponents differ the smaller
/// exponent gives the smaller monomial.
enum class OrderConvention { Descending, Ascending };

/// The convention under which the pairing and filtration checks certify.
inline constexpr OrderConvention kDefaultConvention = OrderConvention::Ascending;

std::string_view to_string(OrderConvention c);
/// Accepts "desc" / "asc".
OrderConvention parse_order_convention(std::string_view s);

/// A degree-one generator: a_i (1 <= i <= n-3) or D_I (I admissible).
struct Generator {
    enum class Kind { A, D };
    Kind kind = Kind::A;
    int index = 0;
    IndexSet set;

    static Generator a(int i) { return {Kind::A, i, {}}; }
    static Generator d(IndexSet s) { return {Kind::D, 0, s}; }

    bool operator==(const Generator&) const = default;
};

/// The degree-one generators for n markings: a_1..a_{n-3}, then every
/// admissible D_I ascending in the subset order.
std::vector<Generator> generators(int n);

/// Exponent map over the generators.  a-factors are kept ascending by index,
/// D-factors descending in the subset order (largest set first), so the
/// factorisation v = a(v) * D(v) is explicit.  Exponents are unbounded; whether
/// a monomial is standard is a separate predicate.
class Monomial {
public:
    using AFactor = std::pair<int, int>;
    using DFactor = std::pair<IndexSet, int>;

    Monomial() = default;

    static Monomial a(int i, int exponent = 1);
    static Monomial d(IndexSet set, int exponent = 1);
    static Monomial of(const Generator& g, int exponent = 1);
    /// Merges repeated factors and drops zero exponents.
    static Monomial from_factors(std::vector<AFactor> a, std::vector<DFactor> d);

    const std::vector<AFactor>& a_factors() const { return a_; }
    const std::vector<DFactor>& d_factors() const { return d_; }

    int degree() const { return a_degree() + d_degree(); }
    int a_degree() const;
    int d_degree() const;
    int a_exponent(int i) const;
    int d_exponent(IndexSet set) const;
    bool is_one() const { return a_.empty() && d_.empty(); }

    Monomial a_part() const;
    Monomial d_part() const;
    /// Indices carrying a positive a-exponent.
    IndexSet a_support() const;
    std::vector<IndexSet> d_sets() const;

    Monomial operator*(const Monomial& o) const;
    /// The quotient this / o when o divides this.
    std::optional<Monomial> divide(const Monomial& o) const;

    /// Throws std::invalid_argument unless every a-index lies in 1..n-3 and
    /// every D-set is admissible.
    void validate(int n) const;

    std::size_t hash() const;

    bool operator==(const Monomial&) const = default;
    /// Structural order; only for container keys.  Use monomial_less for the
    /// mathematical order.
    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<AFactor> a_;
    std::vector<DFactor> d_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Compares the D-parts only: -1, 0 or +1.
int compare_d_parts(const Monomial& lhs, const Monomial& rhs, OrderConvention c);

/// Fixed total order on a-monomials: lexicographic on the sorted support, then
/// total degree, then the exponent sequence.
bool a_part_less(const Monomial& lhs, const Monomial& rhs);

/// Strict total order on monomials: D-parts first, a-parts on a D-tie.
bool monomial_less(const Monomial& lhs, const Monomial& rhs,
                   OrderConvention c = kDefaultConvention);

/// lhs << rhs: lhs < D_I for every D_I dividing rhs.
bool monomial_much_less(const Monomial& lhs, const Monomial& rhs,
                        OrderConvention c = kDefaultConvention);

struct MonomialOrder {
    OrderConvention convention = kDefaultConvention;
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b, convention); }
};

/// D-factors from larger sets to smaller, equal sizes ascending.
std::vector<Monomial::DFactor> display_order(const Monomial& m);

/// Canonical text: "1", "a1*a3", "a2*D{1,2,3,4}^2*D{1,2,3}*D{4,5,6}".
/// D-factors come in display_order.
std::string render(const Monomial& m);

}  // namespace m0n
