#pragma once

#include <optional>
#include <vector>

#include "ctfrob/algebra.hpp"
#include "ctfrob/classify.hpp"

namespace ctf {

/// Space of solutions z in A (x) A of (x (x) 1) z = z (1 (x) x) for all x.
/// Tensor coordinates are pairs of algebra basis indices, ordered
/// lexicographically; basis tensors are in reduced echelon form.
struct FrobeniusSpace {
    int algebra_dim = 0;
    std::vector<std::vector<std::pair<std::pair<int, int>, mpq_class>>> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

struct SpecialProduct {
    int vertex = 0;
    int into = 0;  // paths ending at the vertex (length or count, per class)
    int from = 0;  // paths starting at the vertex
};

struct FormulaResult {
    enum class Kind { Exact, LowerBound, NotApplicable };
    Kind kind = Kind::NotApplicable;
    int value = 0;
    std::vector<Path> basis_paths;
    std::vector<SpecialProduct> specials;
};

/// Valency-2 vertices whose through-composition vanishes in the algebra;
/// with a D sub-type II witness, also c and d when they have valency 3.
std::vector<int> special_vertices(const PathAlgebra& a,
                                  const std::optional<DWitness>& extended = std::nullopt);

/// Maximal nonzero paths whose endpoints are special or valency-1 vertices;
/// `excluded` drops every path visiting that vertex. A single-vertex quiver
/// contributes its stationary path.
std::vector<Path> basis_paths(const PathAlgebra& a, const std::vector<int>& specials,
                              std::optional<int> excluded = std::nullopt);

FormulaResult frobdim_formula(const PathAlgebra& a, const ClassLabel& label);

/// Exact nullspace of the bimodule constraints imposed for every idempotent
/// and every arrow; with `all_generators` the constraints run over the whole
/// basis instead (same space, used as a self-test).
FrobeniusSpace frobdim_oracle(const PathAlgebra& a, bool all_generators = false);

/// (x (x) 1) applied to the z-th basis tensor.
std::vector<std::pair<std::pair<int, int>, mpq_class>> coproduct_of(const FrobeniusSpace& s,
                                                                    int z_index,
                                                                    const AlgebraElement& x,
                                                                    const PathAlgebra& a);

struct VerifyReport {
    ClassLabel label;
    FormulaResult formula;
    int oracle_dim = 0;
    bool pass = false;
};

/// Formula and oracle side by side; pass iff Exact values agree and lower
/// bounds are met. NotApplicable passes on the oracle alone.
VerifyReport verify(const BoundQuiver& bq);

}  // namespace ctf
