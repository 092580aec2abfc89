#include "ctfrob/algebra.hpp"

#include <algorithm>

namespace ctf {

namespace {

bool path_less(const Path& a, const Path& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool ends_with(const Path& p, const Path& suffix) {
    return p.size() >= suffix.size() &&
           std::equal(suffix.begin(), suffix.end(), p.end() - suffix.size());
}

bool has_zero_suffix(const std::vector<Path>& zeros, const Path& p) {
    for (const Path& z : zeros)
        if (ends_with(p, z)) return true;
    return false;
}

// Paths containing a relation monomial that is set to zero outright are
// dropped on the fly: they vanish in the quotient, and pruning them keeps
// the enumeration small even when the quiver has long cycles.
std::vector<std::vector<Path>> enumerate_paths(const Quiver& q, int maxlen,
                                               const std::vector<Path>& zeros) {
    std::vector<std::vector<Path>> by_len(maxlen + 1);
    for (int v = 1; v <= q.num_vertices(); ++v) by_len[0].push_back({v});
    for (int l = 1; l <= maxlen; ++l) {
        for (const Path& p : by_len[l - 1]) {
            for (int w : q.out_neighbors(p.back())) {
                Path e = p;
                e.push_back(w);
                if (has_zero_suffix(zeros, e)) continue;
                by_len[l].push_back(std::move(e));
            }
        }
    }
    return by_len;
}

Path compose(const Path& a, const Path& b) {
    Path out = a;
    out.insert(out.end(), b.begin() + 1, b.end());
    return out;
}

struct Block {
    std::vector<Path> cols;       // length-lex ascending
    std::map<Path, int> col_of;
    RowReducer red{true};         // pivot on the greatest path
};

bool contains_any(const std::vector<Path>& zeros, const Path& p) {
    for (const Path& z : zeros) {
        if (z.size() > p.size()) continue;
        for (std::size_t i = 0; i + z.size() <= p.size(); ++i)
            if (std::equal(z.begin(), z.end(), p.begin() + i)) return true;
    }
    return false;
}

}  // namespace

PathAlgebra PathAlgebra::build(const BoundQuiver& bq) {
    const Quiver& q = bq.quiver;
    for (const Relation& r : bq.relations) validate_relation(q, r);
    const int n = q.num_vertices();

    std::vector<Path> zeros;
    for (const Relation& r : bq.relations)
        if (r.kind == Relation::Kind::Zero) zeros.push_back(r.first);

    for (int L = n;; L *= 2) {
        if (L > 8 * n)
            throw QuiverError(
                "path reduction does not stabilize; the relations do not cut the "
                "algebra down to finite dimension");
        const int T = L + 1;
        // Headroom above the truncation: a commutativity relation may certify
        // the elimination of a path only through intermediate paths longer
        // than the path it eliminates.
        const int P = T + n;
        auto by_len = enumerate_paths(q, P, zeros);

        std::map<std::pair<int, int>, Block> blocks;
        std::vector<std::vector<Path>> from(n + 1), into(n + 1);
        for (int l = 0; l <= P; ++l) {
            for (const Path& p : by_len[l]) {
                Block& b = blocks[{p.front(), p.back()}];
                b.col_of[p] = static_cast<int>(b.cols.size());
                b.cols.push_back(p);
                from[p.front()].push_back(p);
                into[p.back()].push_back(p);
            }
        }

        // Zero relations act entirely through the pruning above; the rows come
        // from the commutativity relations. A monomial that was pruned is zero
        // in the quotient and drops out of its row; a monomial too long to
        // enumerate makes the whole row unusable.
        for (const Relation& r : bq.relations) {
            if (r.kind != Relation::Kind::Comm) continue;
            const int x = r.first.front(), y = r.first.back();
            const int span = std::min<int>(static_cast<int>(r.first.size()),
                                           static_cast<int>(r.second.size())) - 1;
            for (const Path& left : into[x]) {
                const int ll = static_cast<int>(left.size()) - 1;
                if (ll + span > P) continue;
                for (const Path& right : from[y]) {
                    if (ll + span + static_cast<int>(right.size()) - 1 > P) continue;
                    auto bit = blocks.find({left.front(), right.back()});
                    if (bit == blocks.end()) continue;  // every such path pruned
                    Block& b = bit->second;
                    SparseRow row;
                    bool usable = true;
                    for (const auto& [mono, coeff] :
                         {std::pair<const Path&, int>{r.first, 1}, {r.second, -1}}) {
                        Path c = compose(compose(left, mono), right);
                        auto it = b.col_of.find(c);
                        if (it != b.col_of.end()) {
                            row = row_axpy(row, mpq_class(coeff),
                                           {{it->second, mpq_class(1)}});
                        } else if (static_cast<int>(c.size()) - 1 > P &&
                                   !contains_any(zeros, c)) {
                            usable = false;
                            break;
                        }
                    }
                    if (usable && !row.empty()) b.red.add_row(std::move(row));
                }
            }
        }

        // Stable when every path of length T is eliminated in favor of
        // strictly shorter paths.
        bool stable = true;
        for (const Path& p : by_len[T]) {
            const Block& b = blocks.at({p.front(), p.back()});
            auto it = b.red.pivot_rows().find(b.col_of.at(p));
            if (it == b.red.pivot_rows().end()) {
                stable = false;
                break;
            }
            for (const auto& [col, v] : it->second) {
                if (col != it->first && static_cast<int>(b.cols[col].size()) - 1 > L) {
                    stable = false;
                    break;
                }
            }
            if (!stable) break;
        }
        if (!stable) continue;

        PathAlgebra alg(bq);
        alg.trunc_ = L;
        alg.zero_monomials_ = zeros;
        // Once every path of length T reduces below the truncation, so does
        // every longer one; columns in the headroom above T are scaffolding.
        for (const auto& [key, b] : blocks)
            for (int c = 0; c < static_cast<int>(b.cols.size()); ++c)
                if (!b.red.is_pivot(c) && static_cast<int>(b.cols[c].size()) - 1 <= L)
                    alg.basis_.push_back(b.cols[c]);
        std::sort(alg.basis_.begin(), alg.basis_.end(), path_less);
        for (int i = 0; i < static_cast<int>(alg.basis_.size()); ++i)
            alg.index_[alg.basis_[i]] = i;
        for (const auto& [key, b] : blocks) {
            for (const auto& [pc, row] : b.red.pivot_rows()) {
                if (static_cast<int>(b.cols[pc].size()) - 1 > T) continue;
                std::vector<std::pair<mpq_class, Path>> nf;
                for (const auto& [col, v] : row)
                    if (col != pc) nf.push_back({-v, b.cols[col]});
                alg.rewrite_[b.cols[pc]] = std::move(nf);
            }
        }

        // Nilpotency: iterate spanning sets of the powers of the arrow ideal
        // until they vanish.
        std::vector<AlgebraElement> span_set;
        for (const Arrow& a : q.arrows()) {
            AlgebraElement e = alg.path_element({a.src, a.tgt});
            if (!e.empty()) span_set.push_back(std::move(e));
        }
        int r = 1;
        while (!span_set.empty()) {
            if (r > 8 * n + 1) throw QuiverError("arrow ideal is not nilpotent");
            RowReducer next;
            for (const AlgebraElement& x : span_set) {
                for (const Arrow& a : q.arrows()) {
                    std::vector<std::pair<mpq_class, Path>> terms;
                    for (const auto& [i, c] : x) {
                        const Path& bpath = alg.basis_[i];
                        if (bpath.back() != a.src) continue;
                        Path ext = bpath;
                        ext.push_back(a.tgt);
                        terms.push_back({c, std::move(ext)});
                    }
                    next.add_row(alg.normal_form(std::move(terms)));
                }
            }
            span_set.clear();
            for (const auto& [pc, row] : next.pivot_rows()) span_set.push_back(row);
            ++r;
        }
        alg.nilpotency_ = r;
        return alg;
    }
}

bool PathAlgebra::contains_zero_monomial(const Path& p) const {
    return contains_any(zero_monomials_, p);
}

AlgebraElement PathAlgebra::normal_form(std::vector<std::pair<mpq_class, Path>> terms) const {
    std::map<int, mpq_class> acc;
    while (!terms.empty()) {
        auto [c, p] = std::move(terms.back());
        terms.pop_back();
        if (c == 0) continue;
        auto it = index_.find(p);
        if (it != index_.end()) {
            acc[it->second] += c;
            continue;
        }
        auto rw = rewrite_.find(p);
        if (rw != rewrite_.end()) {
            for (const auto& [c2, b] : rw->second) acc[index_.at(b)] += c * c2;
            continue;
        }
        if (contains_zero_monomial(p)) continue;
        if (static_cast<int>(p.size()) - 1 <= trunc_ + 1)
            throw QuiverError("normal_form: not a path of the quiver");
        // Rewrite the leading segment; it always shortens, so this terminates.
        Path head(p.begin(), p.begin() + trunc_ + 2);
        Path tail(p.begin() + trunc_ + 1, p.end());
        auto hw = rewrite_.find(head);
        if (hw == rewrite_.end()) throw QuiverError("normal_form: not a path of the quiver");
        for (const auto& [c2, b] : hw->second) terms.push_back({c * c2, compose(b, tail)});
    }
    AlgebraElement out;
    for (const auto& [i, c] : acc)
        if (c != 0) out.push_back({i, c});
    return out;
}

int PathAlgebra::basis_index(const Path& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

AlgebraElement PathAlgebra::idempotent(int v) const {
    return {{index_.at({v}), mpq_class(1)}};
}

AlgebraElement PathAlgebra::unit() const {
    AlgebraElement out;
    for (int v = 1; v <= quiver().num_vertices(); ++v)
        out = row_axpy(out, mpq_class(1), idempotent(v));
    return out;
}

AlgebraElement PathAlgebra::arrow_element(int src, int tgt) const {
    if (!quiver().has_arrow(src, tgt)) throw QuiverError("arrow_element: no such arrow");
    return {{index_.at({src, tgt}), mpq_class(1)}};
}

AlgebraElement PathAlgebra::path_element(const Path& p) const {
    if (!quiver().is_path(p)) throw QuiverError("path_element: not a path of the quiver");
    return normal_form({{mpq_class(1), p}});
}

AlgebraElement PathAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
    std::vector<std::pair<mpq_class, Path>> terms;
    for (const auto& [i, ci] : x) {
        for (const auto& [j, cj] : y) {
            const Path& a = basis_[i];
            const Path& b = basis_[j];
            if (a.back() != b.front()) continue;
            terms.push_back({ci * cj, compose(a, b)});
        }
    }
    return normal_form(std::move(terms));
}

int PathAlgebra::count_from(int v) const {
    int c = 0;
    for (const Path& p : basis_)
        if (p.front() == v) ++c;
    return c;
}

int PathAlgebra::count_into(int v) const {
    int c = 0;
    for (const Path& p : basis_)
        if (p.back() == v) ++c;
    return c;
}

int PathAlgebra::max_len_from(int v) const {
    int m = 0;
    for (const Path& p : basis_)
        if (p.front() == v) m = std::max<int>(m, static_cast<int>(p.size()) - 1);
    return m;
}

int PathAlgebra::max_len_into(int v) const {
    int m = 0;
    for (const Path& p : basis_)
        if (p.back() == v) m = std::max<int>(m, static_cast<int>(p.size()) - 1);
    return m;
}

int PathAlgebra::dim_hom(int v, int w) const {
    int c = 0;
    for (const Path& p : basis_)
        if (p.front() == v && p.back() == w) ++c;
    return c;
}

}  // namespace ctf
