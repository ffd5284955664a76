// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "m0n/certify.hpp"
#include "m0n/keel_oracle.hpp"
#include "m0n/oracle.hpp"
#include "m0n/pairing.hpp"
#include "m0n/reduction.hpp"
#include "m0n/standard.hpp"
#include "m0n/text.hpp"

using namespace m0n;

namespace {

/// Collects failure notes for one criterion.
struct Sheet {
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            notes.push_back(what);
    }
    void expect_eq(const std::string& got, const std::string& want, const std::string& what)
    {
        if (got != want)
            notes.push_back(what + ": got '" + got + "', want '" + want + "'");
    }
    void absorb(const CheckResult& c, int n)
    {
        if (!c.passed)
            notes.push_back("n=" + std::to_string(n) + " " + c.name +
                            (c.counterexamples.empty() ? "" : " (" + c.counterexamples.front() + ")"));
    }
};

std::string nf(const Reducer& r, const std::string& text)
{
    return render(r.normal_form(parse_polynomial(text, r.markings())));
}

std::vector<std::size_t> ranks(int n)
{
    std::vector<std::size_t> out;
    for (int d = 0; d <= n - 3; ++d)
        out.push_back(count_standard(n, d));
    return out;
}

std::set<std::string> rendered_basis(int n, int d)
{
    std::set<std::string> out;
    for (const auto& v : enumerate_standard(n, d))
        out.insert(render(v.monomial()));
    return out;
}

void pairing_shape(Sheet& s, int n, int d, const Reducer& r, std::size_t plus, std::size_t minus)
{
    const auto rep = pairing_matrix(n, d, r);
    const auto cert = verify_block_triangular(rep);
    const std::string tag = "pairing n=" + std::to_string(n) + " d=" + std::to_string(d);
    s.expect(cert.passed(), tag + " certificate");
    s.expect(cert.diagonal_matrix, tag + " diagonal");
    s.expect(cert.plus_count == plus && cert.minus_count == minus,
             tag + " signs +" + std::to_string(cert.plus_count) + "/-" + std::to_string(cert.minus_count));
    s.expect(rep.abs_det == 1, tag + " |det| = " + rep.abs_det.get_str());
}

void criterion_1(Sheet& s)
{
    const int n = 4;
    s.expect(ranks(n) == std::vector<std::size_t>{1, 1}, "ranks (1,1)");
    s.expect(admissible_sets(n).empty(), "D-alphabet empty");
    s.expect(rendered_basis(n, 1) == std::set<std::string>{"a1"}, "A^1 spanned by a1");
    const Reducer r(n);
    s.expect_eq(nf(r, "a1^2"), "0", "a1^2");
    s.expect(r.integral(parse_polynomial("a1", n)) == 1, "a1 is the point class");
    const auto dict = keel_dictionary(n);
    s.expect(dict.divisors.size() == 3, "three boundary divisors");
    for (const char* t : {"12", "13", "14"}) {
        const IndexSet set{t[0] - '0', t[1] - '0'};
        const auto it = dict.backward.find(set);
        s.expect(it != dict.backward.end(), std::string("D_") + t + " in dictionary");
        if (it != dict.backward.end())
            s.expect_eq(render(r.normal_form(it->second)), "a1", std::string("D_") + t);
    }
}

void criterion_2(Sheet& s)
{
    const int n = 5;
    const Reducer r(n);
    s.expect(ranks(n) == std::vector<std::size_t>{1, 5, 1}, "ranks (1,5,1)");
    s.expect(rendered_basis(n, 1) == std::set<std::string>{"a1", "a2", "D{1,2,3}", "D{1,2,4}", "D{1,2,5}"},
             "A^1 basis");
    for (int i = 3; i <= 5; ++i)
        s.expect_eq(nf(r, "D{1,2," + std::to_string(i) + "}^2"), "-a1*a2", "D{1,2," + std::to_string(i) + "}^2");
    const auto rs = generate_relations(n, n - 3, RelationOptions{true});
    for (const auto& rel : rs.relations)
        s.expect(r.normal_form(rel.poly).is_zero(), "relation " + render(rel.poly));
    pairing_shape(s, n, 1, r, 2, 3);
}

void criterion_3(Sheet& s)
{
    const int n = 6;
    const Reducer r(n);
    const std::vector<std::size_t> want{1, 16, 16, 1};
    s.expect(ranks(n) == want, "standard counts");
    for (int d = 0; d <= n - 3; ++d) {
        const auto o = graded_rank_oracle(n, d);
        s.expect(o.rank == want[d], "Smith rank d=" + std::to_string(d));
        s.expect(o.torsion_free, "torsion-free d=" + std::to_string(d));
    }
    for (int t = 4; t <= 6; ++t) {
        const std::string big = "D{1,2,3," + std::to_string(t) + "}";
        s.expect_eq(nf(r, big + "^3"), "a1*a2*a3", big + "^3");
        for (int i = 1; i <= 3; ++i)
            s.expect_eq(nf(r, "a" + std::to_string(i) + "*" + big), "0", "a" + std::to_string(i) + "*" + big);
    }
    s.expect_eq(nf(r, "(D{1,2,3,4}+D{2,3,4})^2+a2*a3"), "0", "(D1234+D234)^2+a2a3");

    std::vector<std::pair<std::string, std::string>> table{
        {"1", "a1*a2*a3"}, {"a1", "a2*a3"}, {"a2", "a1*a3"}, {"a3", "a1*a2"}, {"D{1,2,3}", "a1*D{1,2,3}"}};
    for (int t = 4; t <= 6; ++t) {
        const std::string ts = std::to_string(t);
        table.push_back({"D{1,2,3," + ts + "}", "D{1,2,3," + ts + "}^2"});
        table.push_back({"D{1,2," + ts + "}", "a3*D{1,2," + ts + "}"});
        table.push_back({"D{1,3," + ts + "}", "a2*D{1,3," + ts + "}"});
        table.push_back({"D{2,3," + ts + "}", "a1*D{2,3," + ts + "}"});
    }
    std::size_t covered = 0;
    for (const auto& [v, w] : table) {
        const auto sv = StandardMonomial::from(parse_monomial(v, n), n);
        s.expect_eq(render(dual(sv).monomial()), w, v + "*");
        covered += sv.degree() == 1;
    }
    s.expect(covered == 16, "table covers the degree-one basis");
    pairing_shape(s, n, 1, r, 6, 10);
}

void criterion_4(Sheet& s, int n, const Budget& budget)
{
    const Reducer r(n);
    const auto rk = ranks(n);
    for (int d = 0; d <= n - 3; ++d) {
        s.expect(rk[d] == rk[n - 3 - d], "rank symmetry d=" + std::to_string(d));
        const auto rep = pairing_matrix(n, d, r, kDefaultConvention, budget);
        const auto cert = verify_block_triangular(rep);
        s.absorb(cert.block_zero, n);
        s.absorb(cert.diagonal_blocks, n);
        s.absorb(cert.unimodular, n);
        s.expect(rep.abs_det == 1, "|det| d=" + std::to_string(d));
    }
}

void criterion_5(Sheet& s)
{
    const auto t = verify_twenty_point_example();
    s.expect(t.product_vanishes, "v1*v2^* vanishes in the kernel pass");
    s.expect_eq(render(t.v1_dual),
                "a1*a12*a13*a14*a15*a16*a17*D{1,2,3,4,5,6,7,8,9,10,11}^3*D{1,2,3}*D{4,5,6}*D{7,8,9}", "v1*");
    s.expect_eq(render(t.v2_dual), "a1*a2*a3*a4*a5*a6*a7*a8*a9*a10*D{12,13,18}*D{14,15,19}*D{16,17,20}", "v2*");
}

void criterion_6(Sheet& s)
{
    const VerifyOptions opt;
    const Budget none = Budget::unlimited();
    std::size_t instances = 0;
    for (int n = 3; n <= 7; ++n) {
        s.absorb(check_duality(n), n);
        s.absorb(check_degree_bookkeeping(n), n);
        s.absorb(check_kernels(n), n);
    }
    for (int n = 4; n <= 6; ++n) {
        std::size_t k = 0;
        s.absorb(check_filtration_vanishing(n, opt, none, &k), n);
        instances += k;
        s.absorb(check_boundary_presentation(n, opt, none), n);
        s.absorb(check_sign_formula(n, none), n);
    }
    s.expect(instances >= 1000, "filtration instances " + std::to_string(instances) + " < 1000");
}

void criterion_7(Sheet& s)
{
    for (int n = 4; n <= 6; ++n) {
        const Reducer r(n);
        const auto dict = keel_dictionary(n);
        for (const auto& rel : dict.four_point)
            s.expect(r.normal_form(translate(rel, dict)).is_zero(), "four-point relation n=" + std::to_string(n));
        for (const auto& [i, forms] : dict.a_expansions)
            for (const auto& f : forms)
                s.expect_eq(render(r.normal_form(translate(f, dict))), "a" + std::to_string(i),
                            "boundary expansion n=" + std::to_string(n));
        KeelRing keel(n);
        for (int d = 0; d <= n - 3; ++d)
            s.expect(keel.rank(d) == count_standard(n, d),
                     "boundary ring rank n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
}

bool report(const std::string& label, double limit, const std::function<void(Sheet&)>& body)
{
    Sheet s;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(s);
    } catch (const std::exception& e) {
        s.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs > limit)
        s.notes.push_back("took longer than " + std::to_string(limit) + "s");
    const bool ok = s.notes.empty();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS " : "FAIL ") << label << " (" << secs << "s";
    if (limit > 0)
        line << ", limit " << limit << "s";
    line << ")";
    for (std::size_t k = 0; k < s.notes.size() && k < 5; ++k)
        line << "\n    " << s.notes[k];
    std::cout << line.str() << std::endl;
    return ok;
}

}  // namespace

int main()
{
    bool ok = true;
    ok &= report("criterion 1: four points", 1, criterion_1);
    ok &= report("criterion 2: five points", 5, criterion_2);
    ok &= report("criterion 3: six points", 60, criterion_3);
    ok &= report("criterion 4: seven-point pairings", 600,
                 [](Sheet& s) { criterion_4(s, 7, Budget::unlimited()); });
    ok &= report("criterion 5: twenty-point example", 5, criterion_5);
    ok &= report("criterion 6: property suites", 900, criterion_6);
    ok &= report("criterion 7: boundary-divisor cross-check", 0, criterion_7);

    // eight points is a stretch target; running out of budget is reported, not failed
    Sheet stretch;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        criterion_4(stretch, 8, Budget(600));
        std::cout << (stretch.notes.empty() ? "PASS" : "FAIL") << " stretch: eight-point pairings";
        for (const auto& note : stretch.notes)
            std::cout << "\n    " << note;
    } catch (const BudgetExceeded& e) {
        std::cout << "SKIP stretch: eight-point pairings (" << e.what() << ")";
    }
    std::cout.setf(std::ios::fixed);
    std::cout.precision(2);
    std::cout << " [" << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "s]"
              << std::endl;
    ok &= stretch.notes.empty();
    return ok ? 0 : 1;
}
