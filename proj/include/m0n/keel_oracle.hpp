#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "m0n/budget.hpp"
#include "m0n/linalg.hpp"
#include "m0n/relations.hpp"

namespace m0n {

/// The boundary-divisor presentation: polynomials in the normalized boundary
/// divisors D_T modulo the four-point linear relations and the products of
/// crossing pairs.  Linear relations are solved first, leaving a polynomial
/// ring on a Z-basis of the Picard group; each graded piece is then cut by
/// the quadratic relations using exact elimination.
///
/// Only the forward images a_i -> sum of D_T over T containing i and n-2,
/// D_I -> D_I touch the other presentation.
class KeelRing {
public:
    explicit KeelRing(int n);

    int markings() const { return n_; }
    const KeelDictionary& dictionary() const { return dict_; }
    /// Number of free divisors after solving the linear relations.
    std::size_t pic_rank() const { return free_.size(); }
    /// The divisors kept as polynomial variables.
    const std::vector<IndexSet>& free_divisors() const { return free_; }

    /// Rank of the degree-d piece.
    std::size_t rank(int d, const Budget& budget = Budget::unlimited());
    /// Nonzero invariant factors of the degree-d relation span, ascending.
    std::vector<BigInt> invariant_factors(int d, const Budget& budget = Budget::unlimited());

    /// Whether a homogeneous polynomial in a_i, D_I maps to zero.
    /// Throws std::logic_error when membership cannot be decided by unit pivots.
    bool vanishes(const Polynomial& p, const Budget& budget = Budget::unlimited());

private:
    using Vars = std::vector<std::uint16_t>;
    using KPoly = std::map<Vars, Coeff>;
    struct Piece {
        std::vector<Vars> columns;
        std::map<Vars, std::uint32_t> index;
        std::unique_ptr<SparseEchelon> echelon;
    };

    KPoly linear(IndexSet divisor) const;
    KPoly image(const Monomial& m) const;
    static KPoly multiply(const KPoly& p, const KPoly& q);
    Piece& piece(int d, const Budget& budget);

    int n_;
    KeelDictionary dict_;
    std::vector<IndexSet> free_;
    /// Every divisor as a combination of free variables.
    std::map<IndexSet, std::vector<std::pair<std::uint16_t, Coeff>>> expansion_;
    std::vector<KPoly> quadrics_;
    std::map<int, Piece> pieces_;
    std::mutex mutex_;
};

}  // namespace m0n
