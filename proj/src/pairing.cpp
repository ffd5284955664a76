#include "m0n/pairing.hpp"

#include <stdexcept>

#include "m0n/linalg.hpp"

namespace m0n {

int epsilon_exponent(const Forest& f)
{
    int e = f.union_all().size();
    for (std::size_t v = 0; v < f.size(); ++v)
        e += f.degree(v);
    return e;
}

int sign_epsilon(const Forest& f)
{
    return epsilon_exponent(f) % 2 == 0 ? 1 : -1;
}

Monomial maximal_d_part(const Forest& f)
{
    std::vector<Monomial::DFactor> dfs;
    for (std::size_t v = 0; v < f.size(); ++v)
        dfs.emplace_back(f.set(v), f.exponent_cap(v) + 1);
    return Monomial::from_factors({}, std::move(dfs));
}

Polynomial top_product_fast(const Polynomial& f, const Monomial& d_part, int n)
{
    if (d_part.a_degree() != 0)
        throw std::invalid_argument("expected a pure D-part, got " + render(d_part));
    const auto sets = d_part.d_sets();
    const Forest forest = Forest::build(sets, n);
    if (!(maximal_d_part(forest) == d_part))
        throw std::invalid_argument(render(d_part) + " does not carry the maximal exponents of its forest");
    const IndexSet s = support_set(forest);
    Monomial rest;
    for (int i = 1; i <= n - 3; ++i)
        if (!s.contains(i))
            rest = rest * Monomial::a(i);
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        if (!m.d_factors().empty() || m.a_degree() != s.size() || !m.a_support().is_subset_of(s) ||
            m.a_support().size() != s.size())
            throw std::invalid_argument("term " + render(m) + " is not the square-free product over S");
        out.add_term(m * rest, checked_mul(c, sign_epsilon(forest)));
    }
    return out;
}

void CheckResult::fail(std::string example)
{
    passed = false;
    if (counterexamples.size() < 8)
        counterexamples.push_back(std::move(example));
}

PairingReport pairing_matrix(int n, int d, const Reducer& reducer, OrderConvention c, const Budget& budget)
{
    if (reducer.markings() != n)
        throw std::invalid_argument("reducer built for a different n");
    if (d < 0 || d > n - 3)
        throw std::invalid_argument("degree out of range");
    PairingReport r;
    r.n = n;
    r.d = d;
    r.convention = c;
    for (const auto& v : enumerate_standard(n, d, c)) {
        r.basis.push_back(v.monomial());
        r.duals.push_back(dual(v).monomial());
        r.expected_signs.push_back(sign_epsilon(v.forest()));
    }
    const std::size_t k = r.basis.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (i == 0 || !(r.basis[i].d_part() == r.basis[i - 1].d_part()))
            r.blocks.emplace_back(i, i + 1);
        else
            r.blocks.back().second = i + 1;
    }
    r.matrix.assign(k, std::vector<Coeff>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            r.matrix[i][j] = reducer.integral(Polynomial(r.basis[i] * r.duals[j]));
        budget.check("pairing row " + std::to_string(i));
    }
    for (std::size_t i = 0; i < k; ++i)
        r.diagonal.push_back(r.matrix[i][i]);
    r.abs_det = abs_determinant(r.matrix);
    return r;
}

PairingCertificate verify_block_triangular(const PairingReport& r)
{
    PairingCertificate cert;
    const std::size_t k = r.basis.size();
    std::vector<std::size_t> block_of(k);
    for (std::size_t b = 0; b < r.blocks.size(); ++b)
        for (std::size_t i = r.blocks[b].first; i < r.blocks[b].second; ++i)
            block_of[i] = b;
    cert.diagonal_matrix = true;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const Coeff m = r.matrix[i][j];
            if (i != j && m != 0)
                cert.diagonal_matrix = false;
            const std::string where =
                render(r.basis[i]) + " . (" + render(r.basis[j]) + ")* = " + std::to_string(m);
            if (block_of[i] != block_of[j]) {
                if (compare_d_parts(r.basis[i], r.basis[j], r.convention) < 0 && m != 0)
                    cert.block_zero.fail(where);
            } else {
                const Coeff want = i == j ? r.expected_signs[i] : 0;
                if (m != want)
                    cert.diagonal_blocks.fail(where + ", expected " + std::to_string(want));
            }
        }
    for (Coeff x : r.diagonal) {
        if (x == 1)
            ++cert.plus_count;
        else if (x == -1)
            ++cert.minus_count;
    }
    if (r.abs_det != 1)
        cert.unimodular.fail("|det| = " + r.abs_det.get_str());
    return cert;
}

TwentyPointCheck verify_twenty_point_example()
{
    constexpr int n = 20;
    const IndexSet i1 = IndexSet::range(1, 11), i2{1, 2, 3}, i3{4, 5, 6}, i4{7, 8, 9};
    const IndexSet j1{12, 13, 18}, j2{14, 15, 19}, j3{16, 17, 20};
    TwentyPointCheck c;
    c.v1 = Monomial::from_factors({}, {{i1, 1}, {i2, 1}, {i3, 1}, {i4, 1}});
    c.v2 = Monomial::from_factors({{11, 1}}, {{j1, 1}, {j2, 1}, {j3, 1}});
    const auto s1 = StandardMonomial::from(c.v1, n);
    const auto s2 = StandardMonomial::from(c.v2, n);
    c.v1_dual = dual(s1).monomial();
    c.v2_dual = dual(s2).monomial();
    c.v1_degree = c.v1.degree();
    c.v2_dual_degree = c.v2_dual.degree();
    c.v1_dual_top_exponent = c.v1_dual.d_exponent(i1);
    c.epsilon = epsilon_exponent(s1.forest());
    c.product_vanishes = !Reducer(n).kernel_reduce(c.v1 * c.v2_dual).has_value();
    return c;
}

}  // namespace m0n
