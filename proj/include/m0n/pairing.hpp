#pragma once

#include <string>
#include <vector>

#include "m0n/budget.hpp"
#include "m0n/forest.hpp"
#include "m0n/reduction.hpp"
#include "m0n/standard.hpp"

namespace m0n {

/// |union of the vertex sets| + sum of vertex degrees.
int epsilon_exponent(const Forest& f);

/// (-1)^epsilon_exponent(f).
int sign_epsilon(const Forest& f);

/// The D-part carrying the largest exponents allowed for the forest: cap + 1
/// at every vertex.  These are the D-parts of the products v * v*.
Monomial maximal_d_part(const Forest& f);

/// f * D evaluated directly as (-1)^eps * f * prod_{i <= n-3, i not in S} a_i.
/// D must be a maximal D-part; f a square-free polynomial in the a_i, i in S,
/// of degree |S|.  Throws std::invalid_argument otherwise.
Polynomial top_product_fast(const Polynomial& f, const Monomial& d_part, int n);

struct PairingReport {
    int n = 0;
    int d = 0;
    OrderConvention convention = kDefaultConvention;
    /// Ascending in the monomial order.
    std::vector<Monomial> basis;
    std::vector<Monomial> duals;
    /// matrix[i][j] = integral(basis[i] * duals[j]).
    std::vector<std::vector<Coeff>> matrix;
    /// [begin, end) ranges of basis elements sharing a D-part.
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    /// sign_epsilon of each basis element's forest.
    std::vector<int> expected_signs;
    /// matrix[i][i].
    std::vector<Coeff> diagonal;
    BigInt abs_det = 0;
};

/// M[i][j] = integral(v_i * v_j*) over the standard basis of degree d.
/// Throws BudgetExceeded when out of time.
PairingReport pairing_matrix(int n, int d, const Reducer& reducer,
                             OrderConvention c = kDefaultConvention,
                             const Budget& budget = Budget::unlimited());

struct CheckResult {
    std::string name;
    bool passed = true;
    std::vector<std::string> counterexamples;

    /// Records a failure; keeps at most a handful of examples.
    void fail(std::string example);
};

struct PairingCertificate {
    CheckResult block_zero{"block_zero", true, {}};
    CheckResult diagonal_blocks{"diagonal_blocks", true, {}};
    CheckResult unimodular{"unimodular", true, {}};
    /// The matrix is diagonal, i.e. permutation-similar to diag(I_k, -I_l).
    bool diagonal_matrix = false;
    std::size_t plus_count = 0;
    std::size_t minus_count = 0;

    bool passed() const { return block_zero.passed && diagonal_blocks.passed && unimodular.passed; }
};

/// (i) M[i][j] = 0 when D(v_i) < D(v_j); (ii) each same-D block is
/// sign_epsilon * identity; (iii) |det M| = 1.
PairingCertificate verify_block_triangular(const PairingReport& r);

/// The two monomials of the n = 20 example and what the targeted check found.
struct TwentyPointCheck {
    Monomial v1, v2, v1_dual, v2_dual;
    int v1_degree = 0;
    int v2_dual_degree = 0;
    int v1_dual_top_exponent = 0;
    int epsilon = 0;
    /// v1 * v2* vanishes already in the kernel pass.
    bool product_vanishes = false;
};

TwentyPointCheck verify_twenty_point_example();

}  // namespace m0n
