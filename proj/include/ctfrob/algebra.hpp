#pragma once

#include <map>
#include <vector>

#include "ctfrob/linalg.hpp"
#include "ctfrob/relations.hpp"

namespace ctf {

/// Element of the quotient algebra in the path basis: sparse (basis index,
/// coefficient) pairs, indices ascending.
using AlgebraElement = SparseRow;

/// Finite-dimensional quotient of the path algebra by the ideal generated by
/// the relations. Paths are reduced to normal forms: combinations of basis
/// paths, where the basis is the set of paths not expressible through
/// greater-path elimination (ordering: length, then lexicographic).
class PathAlgebra {
public:
    static PathAlgebra build(const BoundQuiver& bq);

    const Quiver& quiver() const { return bq_.quiver; }
    const std::vector<Relation>& relations() const { return bq_.relations; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Path>& basis() const { return basis_; }
    int basis_index(const Path& p) const;  // -1 if p is not a basis path
    /// Truncation length the construction stabilized at.
    int truncation() const { return trunc_; }
    /// Smallest r such that every path of length >= r is zero in the algebra.
    int nilpotency_index() const { return nilpotency_; }

    AlgebraElement idempotent(int v) const;
    AlgebraElement unit() const;
    AlgebraElement arrow_element(int src, int tgt) const;
    /// Normal form of an arbitrary-length path; empty if zero.
    AlgebraElement path_element(const Path& p) const;
    bool path_is_zero(const Path& p) const { return path_element(p).empty(); }

    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;

    /// Basis paths with the given source/target vertex.
    int count_from(int v) const;
    int count_into(int v) const;
    /// Longest basis path with the given source/target vertex.
    int max_len_from(int v) const;
    int max_len_into(int v) const;
    /// Basis paths from v to w.
    int dim_hom(int v, int w) const;

private:
    explicit PathAlgebra(BoundQuiver bq) : bq_(std::move(bq)) {}

    BoundQuiver bq_;
    std::vector<Path> zero_monomials_;  // paths the relations kill outright
    int trunc_ = 0;
    int nilpotency_ = 0;
    std::vector<Path> basis_;                 // length-lex order
    std::map<Path, int> index_;               // basis path -> position
    // Pivot path -> its normal form over basis paths. Paths of length up to
    // truncation()+1 are either here or basis paths.
    std::map<Path, std::vector<std::pair<mpq_class, Path>>> rewrite_;

    AlgebraElement normal_form(std::vector<std::pair<mpq_class, Path>> terms) const;
    bool contains_zero_monomial(const Path& p) const;
};

}  // namespace ctf
