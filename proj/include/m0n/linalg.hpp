#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "m0n/integer.hpp"

namespace m0n {

/// Sparse integer row: (column, value) pairs, strictly increasing columns, no zeros.
using SparseRow = std::vector<std::pair<std::uint32_t, BigInt>>;

using DenseMatrix = std::vector<std::vector<BigInt>>;

/// Incremental row echelon over Z restricted to unit pivots.
///
/// Rows are reduced against the existing pivots; a row with a ±1 entry in an
/// eligible column becomes a new pivot row (scaled so the pivot is +1), any
/// other nonzero remainder is parked.  finalize() retries parked rows until
/// nothing changes; what is left is a "hard" block handed to a dense Smith
/// form.  Pivot rows are kept fully reduced against earlier pivots only, so
/// reduce() follows pivots through a priority queue.
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t columns);

    /// Per-column pivot preference: smaller is preferred, negative means the
    /// column never becomes a pivot.  Default: every column has preference 0.
    void set_pivot_preference(std::vector<int> preference);

    void add_row(SparseRow row);
    void add_row(const std::map<std::uint32_t, BigInt>& row);

    /// Retry parked rows; after this the parked rows have no eligible unit entry.
    void finalize();

    std::size_t columns() const { return columns_; }
    std::size_t pivot_count() const { return pivot_rows_.size(); }
    bool is_pivot(std::uint32_t col) const { return pivot_of_[col] >= 0; }
    /// Rows left without a unit pivot after finalize(), reduced.
    const std::vector<SparseRow>& hard_rows() const { return parked_; }

    /// v minus the combination of pivot rows that clears every pivot column.
    SparseRow reduce(SparseRow v) const;

    /// Rank of the row span: pivots plus the rank of the hard block.
    std::size_t rank() const;
    /// Nonzero Smith invariant factors of the row span, ascending.
    std::vector<BigInt> invariant_factors() const;

    /// The hard rows as a dense matrix over the columns they touch
    /// (ascending; written to *cols when given).
    DenseMatrix hard_block(std::vector<std::uint32_t>* cols = nullptr) const;

private:
    bool try_pivot(SparseRow& row);

    std::size_t columns_;
    std::vector<int> preference_;
    std::vector<int> pivot_of_;
    std::vector<SparseRow> pivot_rows_;
    std::vector<std::uint32_t> pivot_cols_;
    std::vector<SparseRow> parked_;
};

/// Nonzero diagonal of the Smith normal form, ascending (each divides the next).
std::vector<BigInt> smith_invariant_factors(DenseMatrix m);

/// Rank over Q.
std::size_t matrix_rank(DenseMatrix m);

/// Fraction-free Bareiss determinant of a square matrix.
BigInt bareiss_determinant(DenseMatrix m);

/// |det| of a square integer matrix: unit-pivot sparse elimination, then
/// Bareiss on whatever block remains.
BigInt abs_determinant(const std::vector<std::vector<Coeff>>& m);

}  // namespace m0n
