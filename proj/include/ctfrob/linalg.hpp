#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace ctf {

/// Sparse vector: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<int, mpq_class>>;

SparseRow row_scale(const SparseRow& r, const mpq_class& c);
/// a + c * b
SparseRow row_axpy(const SparseRow& a, const mpq_class& c, const SparseRow& b);

/// Incremental reduced row echelon form. `pivot_max` selects the largest
/// column of a row as its pivot instead of the smallest; the stored basis is
/// kept fully reduced either way, so `reduce` returns canonical normal forms.
class RowReducer {
public:
    explicit RowReducer(bool pivot_max = false) : pivot_max_(pivot_max) {}

    /// Eliminates every known pivot from `r`.
    SparseRow reduce(SparseRow r) const;
    /// Reduces and, if nonzero, installs the result as a new pivot row.
    /// Returns false when `r` was already in the row space.
    bool add_row(SparseRow r);

    int rank() const { return static_cast<int>(pivots_.size()); }
    const std::map<int, SparseRow>& pivot_rows() const { return pivots_; }
    bool is_pivot(int col) const { return pivots_.count(col) != 0; }

private:
    bool pivot_max_;
    std::map<int, SparseRow> pivots_;  // pivot column -> row with coefficient 1 there
};

int rank(const std::vector<SparseRow>& rows);

/// Basis of {x : rows * x = 0} in reduced echelon form, one vector per free
/// column, free columns ascending.
std::vector<SparseRow> nullspace(const std::vector<SparseRow>& rows, int num_cols);

}  // namespace ctf
