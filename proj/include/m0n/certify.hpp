#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "m0n/budget.hpp"
#include "m0n/pairing.hpp"
#include "m0n/relations.hpp"

namespace m0n {

struct VerifyOptions {
    OrderConvention convention = kDefaultConvention;
    RelationOptions relations;
    /// Seed for the sampled checks (relation multiples at n >= 7).
    std::uint64_t seed = 20240607;
    /// Number of sampled relation multiples when exhaustive checking is too large.
    std::size_t samples = 1000;
};

struct VerifyReport {
    int n = 0;
    OrderConvention convention = kDefaultConvention;
    std::vector<CheckResult> checks;

    bool passed() const;
    const CheckResult* find(const std::string& name) const;
};

// Individual checks; each returns a named pass/fail with counterexamples.

/// rank(n,d) = rank(n,n-3-d) for every d.
CheckResult check_count_symmetry(int n);
/// v* standard, v** = v, deg v + deg v* = n-3, and the closure sums of the
/// exponents of v and v* equal |I| - 1 at every vertex.
CheckResult check_duality(int n);
/// deg(D(v) D(v*)) = sum over roots (|J| - 1).
CheckResult check_degree_bookkeeping(int n);
/// Closed-form kernel generators against the brute-force kernel.
CheckResult check_kernels(int n);
/// Every relation of degree <= n-3 times kernel-reduced monomials reduces to
/// zero: exhaustively for n <= 6, else a seeded sample.
CheckResult check_relations_vanish(int n, const VerifyOptions& opt, const Budget& budget);
/// Graded Smith-form ranks equal the standard counts, no torsion.
CheckResult check_oracle_ranks(int n, const VerifyOptions& opt, const Budget& budget);
/// Rewriting normal forms equal linear-algebra normal forms.
CheckResult check_linear_agreement(int n, const VerifyOptions& opt, const Budget& budget);
/// The boundary-divisor presentation: relation images vanish, graded ranks
/// agree, four-point relations translate to zero, boundary expansions of a_i agree.
CheckResult check_boundary_presentation(int n, const VerifyOptions& opt, const Budget& budget);
/// Pairing matrices certify for every degree.
CheckResult check_pairings(int n, const VerifyOptions& opt, const Budget& budget);
/// sign_epsilon and top_product_fast against normal forms for every forest
/// carrying its maximal exponents.
CheckResult check_sign_formula(int n, const Budget& budget);

/// Instances (v, w) with v standard, w << v and p(v) + deg w > n-3; all must
/// multiply to zero.  Returns the check and the number of instances tested.
CheckResult check_filtration_vanishing(int n, const VerifyOptions& opt, const Budget& budget,
                                       std::size_t* instances = nullptr);

/// Runs every check that applies to n.  Throws BudgetExceeded when out of time.
VerifyReport verify(int n, const VerifyOptions& opt = {}, const Budget& budget = Budget::unlimited());

}  // namespace m0n
