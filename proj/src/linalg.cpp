#include "ctfrob/linalg.hpp"

#include <algorithm>

namespace ctf {

SparseRow row_scale(const SparseRow& r, const mpq_class& c) {
    if (c == 0) return {};
    SparseRow out;
    out.reserve(r.size());
    for (const auto& [col, v] : r) out.push_back({col, v * c});
    return out;
}

SparseRow row_axpy(const SparseRow& a, const mpq_class& c, const SparseRow& b) {
    if (c == 0) return a;
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back({b[j].first, c * b[j].second});
            ++j;
        } else {
            mpq_class v = a[i].second + c * b[j].second;
            if (v != 0) out.push_back({a[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

SparseRow RowReducer::reduce(SparseRow r) const {
    // A pivot column appears in `r` at most once per pass; eliminating it
    // cannot reintroduce it (pivot rows are reduced against each other), so a
    // single sweep in pivot order suffices.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [col, v] : r) {
            auto it = pivots_.find(col);
            if (it == pivots_.end()) continue;
            r = row_axpy(r, -v, it->second);
            changed = true;
            break;
        }
    }
    return r;
}

bool RowReducer::add_row(SparseRow r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    auto lead = pivot_max_ ? r.back() : r.front();
    SparseRow norm = row_scale(r, 1 / lead.second);
    int col = lead.first;
    for (auto& [pc, row] : pivots_) {
        for (const auto& [c2, v2] : row) {
            if (c2 == col) {
                row = row_axpy(row, -v2, norm);
                break;
            }
        }
    }
    pivots_[col] = std::move(norm);
    return true;
}

int rank(const std::vector<SparseRow>& rows) {
    RowReducer rr;
    for (const SparseRow& r : rows) rr.add_row(r);
    return rr.rank();
}

std::vector<SparseRow> nullspace(const std::vector<SparseRow>& rows, int num_cols) {
    RowReducer rr;
    for (const SparseRow& r : rows) rr.add_row(r);
    std::vector<SparseRow> basis;
    for (int f = 0; f < num_cols; ++f) {
        if (rr.is_pivot(f)) continue;
        SparseRow v{{f, mpq_class(1)}};
        for (const auto& [pc, row] : rr.pivot_rows()) {
            for (const auto& [c2, coeff] : row) {
                if (c2 == f) {
                    v.push_back({pc, -coeff});
                    break;
                }
            }
        }
        std::sort(v.begin(), v.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ctf
