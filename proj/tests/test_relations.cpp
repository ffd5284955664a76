#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "m0n/keel_oracle.hpp"
#include "m0n/oracle.hpp"
#include "m0n/reduction.hpp"
#include "m0n/relations.hpp"
#include "support.hpp"

using namespace m0n;
using testing::poly;

namespace {

/// Image in Z[a]/(a_i^2): drops every term with a squared a or any D.
Polynomial square_free_part(const Polynomial& p)
{
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        if (!m.d_factors().empty())
            continue;
        const auto& a = m.a_factors();
        if (std::all_of(a.begin(), a.end(), [](const auto& f) { return f.second == 1; }))
            out.add_term(m, c);
    }
    return out;
}

bool has_relation(const RelationSet& rs, RelationFamily f, const Polynomial& p)
{
    return std::any_of(rs.relations.begin(), rs.relations.end(),
                       [&](const Relation& r) { return r.family == f && (r.poly == p || r.poly == -p); });
}

}  // namespace

TEST_CASE("ambient classes")
{
    const int n = 6;
    // product of the defining divisor classes, computed independently
    Polynomial prod = Polynomial::constant(1);
    for (const auto& c : defining_divisors(IndexSet{1, 2, 3}, n))
        prod = prod * c.cls;
    CHECK(square_free_part(prod) == poly("a1*a2 + a1*a3 + a2*a3", n));
    CHECK(ambient_class(IndexSet{1, 2, 3}, n).poly == poly("a1*a2 + a1*a3 + a2*a3", n));
    CHECK(ambient_class(IndexSet{2, 3, 4}, n).poly == poly("a2*a3", n));
    CHECK(ambient_class(IndexSet{1, 2, 3, 4}, n).poly == poly("a1*a2*a3", n));

    for (int m = 5; m <= 8; ++m)
        for (IndexSet s : admissible_sets(m)) {
            Polynomial q = Polynomial::constant(1);
            for (const auto& c : defining_divisors(s, m))
                q = q * c.cls;
            const auto amb = ambient_class(s, m).poly;
            REQUIRE(square_free_part(q) == amb);
            REQUIRE(amb.homogeneous_degree() == s.size() - 1);
        }
}

TEST_CASE("kernel generators")
{
    const auto k7 = kernel_generators(IndexSet{1, 2, 3}, 7);
    CHECK(std::find(k7.begin(), k7.end(), poly("a1 - a2", 7)) != k7.end());
    CHECK(kernel_generators(IndexSet{2, 3, 4}, 6) == std::vector<Polynomial>{poly("a2", 6), poly("a3", 6)});
    CHECK(kernel_generators(IndexSet{1, 2, 3, 4}, 6) ==
          std::vector<Polynomial>{poly("a1", 6), poly("a2", 6), poly("a3", 6)});
}

TEST_CASE("kernel generators annihilate the ambient class")
{
    for (int n = 5; n <= 8; ++n)
        for (IndexSet s : admissible_sets(n)) {
            const auto amb = ambient_class(s, n).poly;
            for (const auto& g : kernel_generators(s, n))
                REQUIRE(square_free_part(g * amb).is_zero());
        }
}

TEST_CASE("closed-form kernels equal brute-force kernels")
{
    for (int n = 5; n <= 7; ++n)
        for (IndexSet s : admissible_sets(n)) {
            const auto k = compare_kernel(s, n);
            REQUIRE(k.generators_in_kernel);
            REQUIRE(k.generators_span_kernel);
        }
}

TEST_CASE("defining divisors")
{
    const int n = 6;
    const auto d123 = defining_divisors(IndexSet{1, 2, 3}, n);
    REQUIRE(d123.size() == 2);
    CHECK(d123[0].cls == poly("a1 + a2", n));
    CHECK(d123[0].pair == IndexSet{1, 2});
    CHECK(d123[1].cls == poly("a1 + a3", n));
    CHECK(d123[1].pair == IndexSet{1, 3});

    const auto d234 = defining_divisors(IndexSet{2, 3, 4}, n);
    REQUIRE(d234.size() == 2);
    CHECK(d234[0].cls == poly("a2", n));
    CHECK(d234[0].pair == IndexSet{2, 4});
    CHECK(d234[1].cls == poly("a3", n));
    CHECK(d234[1].pair == IndexSet{3, 4});

    const auto d1234 = defining_divisors(IndexSet{1, 2, 3, 4}, n);
    REQUIRE(d1234.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(d1234[i].cls == Polynomial(Monomial::a(i + 1)));
        CHECK(d1234[i].pair == IndexSet{i + 1, 4});
    }
}

TEST_CASE("full Chern relations")
{
    CHECK(chern_relation_full(IndexSet{1, 2, 3, 4}, 6) ==
          poly("(a1 - D{1,2,3,4})*(a2 - D{1,2,3,4})*(a3 - D{1,2,3,4})", 6));
    const Polynomial r234 = chern_relation_full(IndexSet{2, 3, 4}, 6);
    CHECK(r234 == poly("(a2 - D{2,3,4} - D{1,2,3,4})*(a3 - D{2,3,4} - D{1,2,3,4})", 6));
    // equal to (D{1,2,3,4}+D{2,3,4})^2 + a2 a3 modulo the kernel relations
    const Reducer red6(6);
    CHECK(red6.kernel_reduce(r234 - poly("(D{1,2,3,4}+D{2,3,4})^2 + a2*a3", 6)).is_zero());
    CHECK(chern_relation_full(IndexSet{1, 2, 3}, 5) == poly("(a1 - D{1,2,3})*(a2 - D{1,2,3})", 5));
}

TEST_CASE("mixed Chern relations")
{
    const Polynomial r = chern_relation_mixed(IndexSet{1, 2, 3, 4}, IndexSet{1, 2, 3}, 6);
    CHECK(r == poly("(a1 - D{1,2,3,4})*D{1,2,3}", 6));
    // a1 D{1,2,3} = D{1,2,3,4} D{1,2,3} in the boundary presentation
    KeelRing keel(6);
    CHECK(keel.vanishes(poly("a1*D{1,2,3} - D{1,2,3,4}*D{1,2,3}", 6)));
    CHECK_FALSE(keel.vanishes(poly("a1*D{1,2,3}", 6)));
    // and D{1,2,3,4}^2 D{1,2,3} = 0 by linear algebra in degree 3
    const LinearReducer lin(6, 3);
    REQUIRE(lin.complete());
    CHECK(lin.normal_form(testing::mono("D{1,2,3,4}^2*D{1,2,3}", 6)).is_zero());

    const std::vector<IndexSet> none;
    CHECK(chern_relation_split(IndexSet{2, 3, 4}, none, 6) == chern_relation_full(IndexSet{2, 3, 4}, 6));
    CHECK_THROWS_AS(chern_relation_mixed(IndexSet{1, 2, 3}, IndexSet{1, 2, 4}, 6), std::invalid_argument);
}

TEST_CASE("generated relation sets")
{
    const RelationSet r5 = generate_relations(5, 2);
    CHECK(has_relation(r5, RelationFamily::Incompatible, poly("D{1,2,3}*D{1,2,4}", 5)));
    CHECK(has_relation(r5, RelationFamily::Kernel, poly("a1*D{1,2,3}", 5)));
    CHECK(has_relation(r5, RelationFamily::Square, poly("a1^2", 5)));

    const RelationSet r4 = generate_relations(4, 1);
    const RelationSet r4top = generate_relations(4, 2);
    CHECK(r4.relations.empty());
    REQUIRE(r4top.relations.size() == 1);
    CHECK(r4top.relations[0].poly == poly("a1^2", 4));

    for (const auto& r : generate_relations(6, 3).relations)
        REQUIRE(r.poly.homogeneous_degree() <= 3);
}

TEST_CASE("boundary dictionary")
{
    const auto k4 = keel_dictionary(4);
    for (int t = 0; t < 3; ++t) {
        const auto& form = k4.a_expansions.at(1)[t];
        REQUIRE(form.size() == 1);
        CHECK(form.begin()->first.size() == 2);
        CHECK(form.begin()->first.contains(1));
    }
    std::set<IndexSet> pairs;
    for (const auto& form : k4.a_expansions.at(1))
        pairs.insert(form.begin()->first);
    CHECK(pairs == std::set<IndexSet>{IndexSet{1, 2}, IndexSet{1, 3}, IndexSet{1, 4}});

    const auto k5 = keel_dictionary(5);
    CHECK(k5.a_expansions.at(1)[0] == KeelLinearForm{{IndexSet{1, 3}, 1}, {IndexSet{1, 2, 3}, 1}});
    CHECK(k5.a_expansions.at(1)[1] == KeelLinearForm{{IndexSet{1, 4}, 1}, {IndexSet{1, 2, 4}, 1}});
    CHECK(k5.a_expansions.at(1)[2] == KeelLinearForm{{IndexSet{1, 5}, 1}, {IndexSet{1, 2, 5}, 1}});

    const auto k6 = keel_dictionary(6);
    CHECK(k6.a_expansions.at(1)[0] == KeelLinearForm{{IndexSet{1, 4}, 1},
                                                     {IndexSet{1, 2, 4}, 1},
                                                     {IndexSet{1, 3, 4}, 1},
                                                     {IndexSet{1, 2, 3, 4}, 1}});
}

TEST_CASE("boundary relations reduce to zero")
{
    for (int n = 4; n <= 6; ++n) {
        const auto dict = keel_dictionary(n);
        const Reducer red(n);
        for (const auto& rel : dict.four_point)
            REQUIRE(red.normal_form(translate(rel, dict)).is_zero());
        for (int i = 1; i <= n - 3; ++i) {
            const auto& e = dict.a_expansions.at(i);
            const Polynomial a = Polynomial(Monomial::a(i));
            for (const auto& form : e)
                REQUIRE(red.normal_form(translate(form, dict) - a).is_zero());
        }
    }
}

TEST_CASE("every relation vanishes in the boundary presentation")
{
    for (int n = 4; n <= 6; ++n) {
        KeelRing keel(n);
        RelationOptions multi;
        multi.multi_split = true;
        for (const auto& r : generate_relations(n, n - 3, multi).relations)
            REQUIRE_MESSAGE(keel.vanishes(r.poly), family_tag(r.family) << " " << render(r.poly));
    }
}
