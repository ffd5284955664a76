#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "m0n/budget.hpp"
#include "m0n/linalg.hpp"
#include "m0n/polynomial.hpp"
#include "m0n/relations.hpp"

namespace m0n {

/// Every monomial of degree d in the generators of n markings, ascending in
/// the structural order.
std::vector<Monomial> all_monomials(int n, int d);

/// Monomials surviving the kernel pass: compatible D-part and a square-free
/// a-part supported in S.  These span A^d together with the Chern relations.
std::vector<Monomial> kernel_reduced_monomials(int n, int d);

enum class OracleColumns {
    /// The free module on all degree-d monomials, all relation multiples.
    AllMonomials,
    /// Kernel-reduced monomials only; Chern relations times kernel-reduced
    /// monomials, each product passed through the kernel pass.
    KernelReduced,
};

struct OracleOptions {
    OracleColumns columns = OracleColumns::AllMonomials;
    RelationOptions relations;
};

struct GradedOracleReport {
    int n = 0;
    int d = 0;
    OracleColumns columns = OracleColumns::AllMonomials;
    std::size_t monomials = 0;
    std::size_t relation_rows = 0;
    /// Nonzero Smith invariant factors equal to 1.
    std::size_t unit_factors = 0;
    /// The remaining nonzero invariant factors, ascending.
    std::vector<BigInt> other_factors;
    /// monomials - rank of the relation span.
    std::size_t rank = 0;
    bool torsion_free = true;
};

/// Rank and torsion of the degree-d part of the presentation by exact Smith
/// form of the relation matrix.  Throws BudgetExceeded when out of time.
GradedOracleReport graded_rank_oracle(int n, int d, const OracleOptions& options = {},
                                      const Budget& budget = Budget::unlimited());

/// Normal forms by linear algebra in one degree: rows are the Chern relation
/// multiples over kernel-reduced monomials; every nonstandard column must
/// become a unit pivot, standard columns never do.
class LinearReducer {
public:
    LinearReducer(int n, int d, RelationOptions relations = {}, const Budget& budget = Budget::unlimited());

    int markings() const { return n_; }
    int degree() const { return d_; }
    /// Every nonstandard column is a pivot and no row is left over.
    bool complete() const { return complete_; }
    std::size_t columns() const { return columns_.size(); }
    std::size_t rows() const { return rows_; }

    /// Throws std::logic_error unless complete().
    Polynomial normal_form(const Monomial& m) const;

private:
    int n_;
    int d_;
    std::vector<Monomial> columns_;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
    SparseEchelon echelon_;
    std::size_t rows_ = 0;
    bool complete_ = false;
};

/// The kernel of multiplication by the ambient class of I in Z[a]/(a_i^2),
/// by exact linear algebra over the square-free monomials: returns its rank
/// and whether the closed-form generators' degree pieces span it.
struct KernelComparison {
    IndexSet set;
    /// Per degree d = 0..n-3: rank of the brute-force kernel.
    std::vector<std::size_t> kernel_ranks;
    bool generators_in_kernel = true;
    bool generators_span_kernel = true;
};

KernelComparison compare_kernel(IndexSet set, int n);

}  // namespace m0n
