#include "m0n/linalg.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace m0n {

namespace {

using Work = std::map<std::uint32_t, BigInt>;

SparseRow to_row(const Work& w)
{
    SparseRow r;
    r.reserve(w.size());
    for (const auto& [c, v] : w)
        if (v != 0)
            r.emplace_back(c, v);
    return r;
}

}  // namespace

SparseEchelon::SparseEchelon(std::size_t columns)
    : columns_(columns), preference_(columns, 0), pivot_of_(columns, -1)
{
}

void SparseEchelon::set_pivot_preference(std::vector<int> preference)
{
    if (preference.size() != columns_)
        throw std::invalid_argument("pivot preference size mismatch");
    if (!pivot_rows_.empty() || !parked_.empty())
        throw std::logic_error("pivot preference must be set before adding rows");
    preference_ = std::move(preference);
}

SparseRow SparseEchelon::reduce(SparseRow v) const
{
    Work w;
    using Item = std::pair<int, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> todo;
    for (auto& [c, x] : v) {
        if (c >= columns_)
            throw std::out_of_range("column index out of range");
        if (pivot_of_[c] >= 0)
            todo.emplace(pivot_of_[c], c);
        w.emplace(c, std::move(x));
    }
    while (!todo.empty()) {
        const auto [k, col] = todo.top();
        todo.pop();
        auto it = w.find(col);
        if (it == w.end())
            continue;
        const BigInt f = it->second;
        for (const auto& [c, x] : pivot_rows_[k]) {
            auto [jt, fresh] = w.try_emplace(c, 0);
            jt->second -= f * x;
            if (jt->second == 0)
                w.erase(jt);
            else if (fresh && pivot_of_[c] >= 0)
                todo.emplace(pivot_of_[c], c);
        }
    }
    return to_row(w);
}

bool SparseEchelon::try_pivot(SparseRow& row)
{
    std::size_t best = row.size();
    for (std::size_t t = 0; t < row.size(); ++t) {
        const auto c = row[t].first;
        if (preference_[c] < 0 || abs(row[t].second) != 1)
            continue;
        if (best == row.size() || preference_[c] < preference_[row[best].first])
            best = t;
    }
    if (best == row.size())
        return false;
    if (row[best].second < 0)
        for (auto& e : row)
            e.second = -e.second;
    const auto col = row[best].first;
    pivot_of_[col] = static_cast<int>(pivot_rows_.size());
    pivot_cols_.push_back(col);
    pivot_rows_.push_back(std::move(row));
    return true;
}

void SparseEchelon::add_row(SparseRow row)
{
    row = reduce(std::move(row));
    if (row.empty())
        return;
    if (!try_pivot(row))
        parked_.push_back(std::move(row));
}

void SparseEchelon::add_row(const std::map<std::uint32_t, BigInt>& row)
{
    add_row(to_row(row));
}

void SparseEchelon::finalize()
{
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<SparseRow> keep;
        for (auto& r : parked_) {
            r = reduce(std::move(r));
            if (r.empty())
                continue;
            if (try_pivot(r))
                changed = true;
            else
                keep.push_back(std::move(r));
        }
        parked_ = std::move(keep);
    }
}

DenseMatrix SparseEchelon::hard_block(std::vector<std::uint32_t>* cols_out) const
{
    std::vector<std::uint32_t> cols;
    for (const auto& r : parked_)
        for (const auto& e : r)
            cols.push_back(e.first);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    DenseMatrix m(parked_.size(), std::vector<BigInt>(cols.size(), 0));
    for (std::size_t i = 0; i < parked_.size(); ++i)
        for (const auto& [c, v] : parked_[i])
            m[i][std::lower_bound(cols.begin(), cols.end(), c) - cols.begin()] = v;
    if (cols_out)
        *cols_out = std::move(cols);
    return m;
}

std::size_t SparseEchelon::rank() const
{
    return pivot_rows_.size() + (parked_.empty() ? 0 : matrix_rank(hard_block()));
}

std::vector<BigInt> SparseEchelon::invariant_factors() const
{
    std::vector<BigInt> out(pivot_rows_.size(), BigInt(1));
    if (!parked_.empty()) {
        auto rest = smith_invariant_factors(hard_block());
        out.insert(out.end(), rest.begin(), rest.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BigInt> smith_invariant_factors(DenseMatrix a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // smallest nonzero entry of the trailing block as pivot
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows)
            break;
        std::swap(a[t], a[pi]);
        for (auto& row : a)
            std::swap(row[t], row[pj]);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                const BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                const BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0)
                    clean = false;
            }
            if (!clean) {
                // move the smallest remainder in row/column t to the pivot
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) {
                        bi = t;
                        bj = j;
                    }
                std::swap(a[t], a[bi]);
                for (auto& row : a)
                    std::swap(row[t], row[bj]);
                continue;
            }
            // divisibility of the trailing block
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            for (std::size_t j = t; j < cols; ++j)
                a[t][j] += a[bad][j];
        }
        diag.push_back(abs(a[t][t]));
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

std::size_t matrix_rank(DenseMatrix a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

BigInt bareiss_determinant(DenseMatrix a)
{
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0)
        return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

BigInt abs_determinant(const std::vector<std::vector<Coeff>>& m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant of a non-square matrix");
    SparseEchelon e(n);
    std::size_t zero_rows = 0;
    for (const auto& row : m) {
        SparseRow r;
        for (std::size_t j = 0; j < n; ++j)
            if (row[j] != 0)
                r.emplace_back(static_cast<std::uint32_t>(j), BigInt(static_cast<long>(row[j])));
        if (r.empty())
            ++zero_rows;
        e.add_row(std::move(r));
    }
    e.finalize();
    if (zero_rows > 0 || e.rank() < n)
        return 0;
    std::vector<std::uint32_t> cols;
    DenseMatrix hard = e.hard_block(&cols);
    if (hard.empty())
        return 1;
    return abs(bareiss_determinant(std::move(hard)));
}

}  // namespace m0n
