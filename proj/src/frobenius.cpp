#include "ctfrob/frobenius.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ctf {

std::vector<int> special_vertices(const PathAlgebra& a,
                                  const std::optional<DWitness>& extended) {
    const Quiver& q = a.quiver();
    std::set<int> out;
    for (int v = 1; v <= q.num_vertices(); ++v) {
        if (q.valency(v) != 2) continue;
        const auto& in = q.in_neighbors(v);
        const auto& on = q.out_neighbors(v);
        if (in.size() != 1 || on.size() != 1) continue;
        if (a.path_is_zero({in[0], v, on[0]})) out.insert(v);
    }
    if (extended) {
        if (extended->subtype != 2)
            throw QuiverError("extended special vertices need a sub-type II witness");
        for (int z : {extended->c, extended->d})
            if (q.valency(z) == 3) out.insert(z);
    }
    return {out.begin(), out.end()};
}

std::vector<Path> basis_paths(const PathAlgebra& a, const std::vector<int>& specials,
                              std::optional<int> excluded) {
    const Quiver& q = a.quiver();
    if (q.num_vertices() == 1) return {Path{1}};

    std::set<int> endpoint(specials.begin(), specials.end());
    for (int v = 1; v <= q.num_vertices(); ++v)
        if (q.valency(v) == 1) endpoint.insert(v);

    auto maximal = [&](const Path& p) {
        for (int u : q.in_neighbors(p.front())) {
            Path e{u};
            e.insert(e.end(), p.begin(), p.end());
            if (!a.path_is_zero(e)) return false;
        }
        for (int w : q.out_neighbors(p.back())) {
            Path e = p;
            e.push_back(w);
            if (!a.path_is_zero(e)) return false;
        }
        return true;
    };

    std::vector<Path> out;
    for (int s : endpoint) {
        std::vector<Path> work{{s}};
        while (!work.empty()) {
            Path p = std::move(work.back());
            work.pop_back();
            if (p.size() > 1 && endpoint.count(p.back()) && maximal(p))
                out.push_back(p);
            for (int w : q.out_neighbors(p.back())) {
                Path e = p;
                e.push_back(w);
                if (!a.path_is_zero(e)) work.push_back(std::move(e));
            }
        }
    }
    if (excluded) {
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [&](const Path& p) {
                                     return std::count(p.begin(), p.end(), *excluded) > 0;
                                 }),
                  out.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

FormulaResult frobdim_formula(const PathAlgebra& a, const ClassLabel& label) {
    using Tag = ClassLabel::Tag;
    FormulaResult r;
    switch (label.tag) {
        case Tag::TypeA:
        case Tag::TypeD_I: {
            auto sp = special_vertices(a);
            std::optional<int> excluded;
            if (label.tag == Tag::TypeD_I) excluded = label.d->c;
            r.basis_paths = basis_paths(a, sp, excluded);
            r.kind = FormulaResult::Kind::Exact;
            r.value = static_cast<int>(r.basis_paths.size());
            for (int b : sp) {
                SpecialProduct p{b, a.max_len_into(b), a.max_len_from(b)};
                r.value += p.into * p.from;
                r.specials.push_back(p);
            }
            break;
        }
        case Tag::TypeD_II: {
            auto sp = special_vertices(a, label.d);
            r.basis_paths = basis_paths(a, sp);
            r.kind = FormulaResult::Kind::Exact;
            r.value = static_cast<int>(r.basis_paths.size());
            for (int b : sp) {
                SpecialProduct p{b, a.count_into(b) - 1, a.count_from(b) - 1};
                r.value += p.into * p.from;
                r.specials.push_back(p);
            }
            break;
        }
        case Tag::TypeD_III:
            r.kind = FormulaResult::Kind::LowerBound;
            r.value = 2;
            break;
        case Tag::TypeD_IV:
            r.kind = FormulaResult::Kind::LowerBound;
            r.value = static_cast<int>(label.d->central.size());
            break;
        case Tag::TypeE6:
            if (!label.hereditary) {
                r.kind = FormulaResult::Kind::LowerBound;
                r.value = 1;
            }
            break;
        case Tag::Unknown:
            break;
    }
    return r;
}

FrobeniusSpace frobdim_oracle(const PathAlgebra& a, bool all_generators) {
    const int d = a.dim();
    const auto& basis = a.basis();

    // The idempotent constraints say exactly that a tensor is supported on
    // pairs (p, q) with source(p) = target(q); solve over those columns only.
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> col_of;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (basis[i].front() == basis[j].back()) {
                col_of[{i, j}] = static_cast<int>(pairs.size());
                pairs.push_back({i, j});
            }

    std::vector<AlgebraElement> gens;
    if (all_generators) {
        for (int i = 0; i < d; ++i) gens.push_back({{i, mpq_class(1)}});
    } else {
        for (const Arrow& ar : a.quiver().arrows())
            gens.push_back(a.arrow_element(ar.src, ar.tgt));
    }

    std::vector<SparseRow> rows;
    for (const AlgebraElement& x : gens) {
        std::vector<AlgebraElement> lmul(d), rmul(d);
        for (int i = 0; i < d; ++i) {
            lmul[i] = a.multiply(x, {{i, mpq_class(1)}});
            rmul[i] = a.multiply({{i, mpq_class(1)}}, x);
        }
        std::map<std::pair<int, int>, std::map<int, mpq_class>> acc;
        for (int c = 0; c < static_cast<int>(pairs.size()); ++c) {
            auto [i, j] = pairs[c];
            for (const auto& [k, ck] : lmul[i]) acc[{k, j}][c] += ck;
            for (const auto& [l, cl] : rmul[j]) acc[{i, l}][c] -= cl;
        }
        for (auto& [out_pair, entries] : acc) {
            SparseRow row;
            for (const auto& [c, v] : entries)
                if (v != 0) row.push_back({c, v});
            if (!row.empty()) rows.push_back(std::move(row));
        }
    }

    FrobeniusSpace s;
    s.algebra_dim = d;
    for (const SparseRow& v : nullspace(rows, static_cast<int>(pairs.size()))) {
        std::vector<std::pair<std::pair<int, int>, mpq_class>> tensor;
        for (const auto& [c, coeff] : v) tensor.push_back({pairs[c], coeff});
        std::sort(tensor.begin(), tensor.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        s.basis.push_back(std::move(tensor));
    }
    return s;
}

std::vector<std::pair<std::pair<int, int>, mpq_class>> coproduct_of(const FrobeniusSpace& s,
                                                                    int z_index,
                                                                    const AlgebraElement& x,
                                                                    const PathAlgebra& a) {
    if (z_index < 0 || z_index >= s.dim()) throw QuiverError("coproduct_of: index out of range");
    std::map<std::pair<int, int>, mpq_class> acc;
    for (const auto& [pair, c] : s.basis[z_index]) {
        AlgebraElement left = a.multiply(x, {{pair.first, mpq_class(1)}});
        for (const auto& [k, ck] : left) acc[{k, pair.second}] += c * ck;
    }
    std::vector<std::pair<std::pair<int, int>, mpq_class>> out;
    for (const auto& [pair, c] : acc)
        if (c != 0) out.push_back({pair, c});
    return out;
}

VerifyReport verify(const BoundQuiver& bq) {
    VerifyReport rep;
    rep.label = classify(bq.quiver);
    PathAlgebra alg = PathAlgebra::build(bq);
    rep.formula = frobdim_formula(alg, rep.label);
    rep.oracle_dim = frobdim_oracle(alg).dim();
    switch (rep.formula.kind) {
        case FormulaResult::Kind::Exact:
            rep.pass = rep.formula.value == rep.oracle_dim;
            break;
        case FormulaResult::Kind::LowerBound:
            rep.pass = rep.oracle_dim >= rep.formula.value;
            break;
        case FormulaResult::Kind::NotApplicable:
            rep.pass = true;
            break;
    }
    return rep;
}

}  // namespace ctf
