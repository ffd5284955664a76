#include <doctest.h>

#include <random>
#include <stdexcept>
#include <thread>

#include "m0n/certify.hpp"
#include "m0n/oracle.hpp"
#include "m0n/reduction.hpp"
#include "m0n/relations.hpp"
#include "support.hpp"

using namespace m0n;
using testing::mono;
using testing::poly;

namespace {

const IndexSet I1 = IndexSet::range(1, 11);

Polynomial standard_combination(int n, int d, std::mt19937_64& rng)
{
    const auto basis = enumerate_standard(n, d);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-4, 4);
    Polynomial p;
    for (int k = 0; k < 4; ++k)
        p.add_term(basis[pick(rng)].monomial(), coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("normal forms")
{
    CHECK(Reducer(5).normal_form(poly("D{1,2,3}^2", 5)) == poly("-a1*a2", 5));
    const Reducer r6(6);
    CHECK(r6.normal_form(poly("D{1,2,3,4}^3", 6)) == poly("a1*a2*a3", 6));
    CHECK(r6.normal_form(poly("D{1,2,3,5}^3", 6)) == poly("a1*a2*a3", 6));
    CHECK(r6.normal_form(poly("D{1,2,3,6}^3", 6)) == poly("a1*a2*a3", 6));
    CHECK(r6.normal_form(poly("(D{1,2,3,4}+D{2,3,4})^2 + a2*a3", 6)).is_zero());
    for (int s = 4; s <= 6; ++s)
        for (int i = 1; i <= 3; ++i)
            CHECK(r6.normal_form(Monomial::a(i) * Monomial::d(IndexSet{1, 2, 3, s})).is_zero());
    // above the top degree everything vanishes
    CHECK(Reducer(5).normal_form(poly("D{1,2,3}^3", 5)).is_zero());
    CHECK(Reducer(5).normal_form(poly("a1*a2*D{1,2,4}", 5)).is_zero());
}

TEST_CASE("twenty points: a1 a2 D_{1..11} dies in the kernel pass")
{
    // oracle: a1 a2 annihilates the ambient class of {1..11} in Z[a]/(a_i^2)
    const Polynomial prod = poly("a1*a2", 20) * ambient_class(I1, 20).poly;
    for (const auto& [m, c] : prod.terms()) {
        bool squared = false;
        for (const auto& [i, e] : m.a_factors())
            squared = squared || e > 1;
        REQUIRE(squared);
    }
    const Reducer r(20);
    const Monomial m = Monomial::a(1) * Monomial::a(2) * Monomial::d(I1);
    CHECK_FALSE(r.kernel_reduce(m).has_value());
    CHECK(r.normal_form(m).is_zero());
}

TEST_CASE("the five-point relations")
{
    const int n = 5;
    const Reducer r(n);
    for (const char* e : {"a1*D{1,2,3}", "a2*D{1,2,5}", "D{1,2,3}*D{1,2,4}",
                          "D{1,2,4}*D{1,2,5}", "D{1,2,3}^2 + a1*a2", "D{1,2,4}^2 + a1*a2", "D{1,2,5}^2 + a1*a2"}) {
        CHECK_MESSAGE(r.normal_form(poly(e, n)).is_zero(), e);
    }
}

TEST_CASE("integrals")
{
    CHECK(Reducer(6).integral(poly("a1*a2*a3", 6)) == 1);
    CHECK(Reducer(5).integral(poly("D{1,2,3}^2", 5)) == -1);
    CHECK(Reducer(6).integral(poly("D{1,2,3,4}^3", 6)) == 1);
    CHECK_THROWS_AS(Reducer(6).integral(poly("a1*a2", 6)), std::invalid_argument);
    const Reducer r(6);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        const Polynomial p = testing::random_polynomial(6, 3, rng), q = testing::random_polynomial(6, 3, rng);
        REQUIRE(r.integral(p + 2 * q) == r.integral(p) + 2 * r.integral(q));
    }
}

TEST_CASE("graded oracle ranks")
{
    const auto o51 = graded_rank_oracle(5, 1);
    CHECK(o51.rank == 5);
    CHECK(o51.torsion_free);
    const auto o62 = graded_rank_oracle(6, 2);
    CHECK(o62.rank == 16);
    CHECK(o62.torsion_free);
    CHECK(graded_rank_oracle(4, 1).rank == 1);
    CHECK(count_standard(6, 1) == 16);
    CHECK(count_standard(6, 0) == 1);
    const auto o72 = graded_rank_oracle(7, 2);
    CHECK(o72.torsion_free);
    CHECK(count_standard(7, 2) == o72.rank);
    CHECK(o72.rank == 127);

    for (int n = 3; n <= 6; ++n)
        for (int d = 0; d <= n - 3; ++d) {
            const auto rep = graded_rank_oracle(n, d);
            REQUIRE(rep.rank == count_standard(n, d));
            REQUIRE(rep.torsion_free);
            REQUIRE(rep.other_factors.empty());
        }
}

TEST_CASE("oracle budget is explicit")
{
    CHECK_THROWS_AS(graded_rank_oracle(7, 3, {}, Budget(1e-9)), BudgetExceeded);
}

TEST_CASE("normal form is a ring map onto the standard span")
{
    std::mt19937_64 rng(17);
    for (int n = 4; n <= 6; ++n) {
        const Reducer r(n);
        for (int k = 0; k < 150; ++k) {
            const int d1 = static_cast<int>(rng() % (n - 2));
            const int d2 = static_cast<int>(rng() % (n - 2 - d1));
            const Polynomial p = testing::random_polynomial(n, d1, rng), q = testing::random_polynomial(n, d2, rng);
            const Polynomial lhs = r.normal_form(p * q);
            REQUIRE(lhs == r.normal_form(r.normal_form(p) * r.normal_form(q)));
            REQUIRE(r.normal_form(p + q) == r.normal_form(p) + r.normal_form(q));
            for (const auto& [m, c] : lhs.terms())
                REQUIRE(is_standard(m, n));
        }
        for (int d = 0; d <= n - 3; ++d) {
            const Polynomial s = standard_combination(n, d, rng);
            REQUIRE(r.normal_form(s) == s);
        }
    }
}

TEST_CASE("relations reduce to zero")
{
    VerifyOptions opt;
    for (int n = 4; n <= 6; ++n) {
        const auto c = check_relations_vanish(n, opt, Budget::unlimited());
        CHECK_MESSAGE(c.passed, n);
    }
    // n = 7: seeded sample of relation multiples
    opt.samples = 1000;
    CHECK(check_relations_vanish(7, opt, Budget::unlimited()).passed);
}

TEST_CASE("rewriting agrees with linear algebra")
{
    for (int n = 4; n <= 7; ++n) {
        const auto c = check_linear_agreement(n, {}, Budget::unlimited());
        CHECK_MESSAGE(c.passed, n);
    }
}

TEST_CASE("shared reducer under concurrent use")
{
    const Reducer shared(6);
    const auto ms = kernel_reduced_monomials(6, 3);
    std::vector<std::vector<Polynomial>> results(4);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < results.size(); ++t)
        pool.emplace_back([&, t] {
            for (const auto& m : ms)
                results[t].push_back(shared.normal_form(m));
        });
    for (auto& th : pool)
        th.join();
    const Reducer fresh(6);
    for (std::size_t k = 0; k < ms.size(); ++k) {
        const Polynomial want = fresh.normal_form(ms[k]);
        for (const auto& res : results)
            REQUIRE(res[k] == want);
    }
}

TEST_CASE("memo snapshot and seeding")
{
    Reducer a(6);
    for (const auto& m : kernel_reduced_monomials(6, 2))
        a.normal_form(m);
    const auto snap = a.memo_snapshot();
    CHECK(snap.size() == a.memo_size());
    Reducer b(6);
    for (const auto& [m, p] : snap)
        b.seed(m, p);
    CHECK(b.memo_size() == snap.size());
    for (const auto& m : kernel_reduced_monomials(6, 2))
        REQUIRE(b.normal_form(m) == a.normal_form(m));
}
