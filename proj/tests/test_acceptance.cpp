// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "ctfrob/frobenius.hpp"
#include "ctfrob/generators.hpp"

using namespace ctf;

namespace {

// Every algebra built by criteria 1-9 lands here for the property suite.
std::vector<BoundQuiver> g_corpus;

struct Eval {
    ClassLabel label;
    FormulaResult formula;
    int oracle = 0;
};

Eval eval(const Quiver& q) {
    BoundQuiver bq = bound_quiver(q);
    g_corpus.push_back(bq);
    PathAlgebra a = PathAlgebra::build(bq);
    Eval e;
    e.label = classify(q);
    e.formula = frobdim_formula(a, e.label);
    e.oracle = frobdim_oracle(a).dim();
    return e;
}

bool exact(const Eval& e, int value) {
    return e.formula.kind == FormulaResult::Kind::Exact && e.formula.value == value &&
           e.oracle == value;
}

using Tensor = std::vector<std::pair<std::pair<int, int>, mpq_class>>;

Tensor left_mul(const Tensor& t, const AlgebraElement& x, const PathAlgebra& a) {
    std::map<std::pair<int, int>, mpq_class> acc;
    for (const auto& [pair, c] : t) {
        AlgebraElement left = a.multiply(x, {{pair.first, mpq_class(1)}});
        for (const auto& [k, ck] : left) acc[{k, pair.second}] += c * ck;
    }
    Tensor out;
    for (const auto& [pair, c] : acc)
        if (c != 0) out.push_back({pair, c});
    return out;
}

Tensor right_mul(const Tensor& t, const AlgebraElement& x, const PathAlgebra& a) {
    std::map<std::pair<int, int>, mpq_class> acc;
    for (const auto& [pair, c] : t) {
        AlgebraElement right = a.multiply({{pair.second, mpq_class(1)}}, x);
        for (const auto& [l, cl] : right) acc[{pair.first, l}] += c * cl;
    }
    Tensor out;
    for (const auto& [pair, c] : acc)
        if (c != 0) out.push_back({pair, c});
    return out;
}

bool criterion1() {
    bool ok = true;
    for (int n = 2; n <= 8; ++n) ok = ok && exact(eval(gen::linear_A(n)), 1);
    for (int n = 3; n <= 6; ++n) {
        const unsigned full = (1u << (n - 1)) - 1;
        for (unsigned mask = 1; mask < full; ++mask)
            ok = ok && exact(eval(gen::linear_A(n, mask)), 0);
    }
    return ok;
}

bool criterion2() {
    bool ok = true;
    for (int n = 3; n <= 7; ++n) {
        for (const Quiver& q : enumerate_mutation_class(gen::linear_A(n), 100000)) {
            Eval e = eval(q);
            ok = ok && e.label.tag == ClassLabel::Tag::TypeA &&
                 e.formula.kind == FormulaResult::Kind::Exact && e.formula.value == e.oracle;
        }
    }
    return ok;
}

bool criterion3() {
    Quiver first = gen::example_pair_first();
    bool ok = is_isomorphic(mutate(first, 4), gen::example_pair_first_mutated()).has_value();
    ok = ok && exact(eval(first), 4);
    ok = ok && exact(eval(gen::example_pair_first_mutated()), 6);
    ok = ok && exact(eval(gen::example_pair_second()), 0);
    ok = ok && exact(eval(gen::example_pair_second_mutated()), 7);
    return ok;
}

bool criterion4() { return exact(eval(gen::big_example()), 0); }

bool criterion5() {
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
        Quiver q = gen::lineal_freecycle(n);
        ok = ok && exact(eval(q), 2 + (n + 1) + 1);

        PathAlgebra a = PathAlgebra::build(bound_quiver(q));
        FrobeniusSpace s = frobdim_oracle(a);
        // Coproduct rows of the table: with F the coefficient of the tensor
        // (full cycle path) (x) e_1, every structure has
        // Delta(e_1) = F a_1..a_n g_1 (x) e_1 and Delta(e_a) = F g_1 (x) a_1..a_n.
        Path full;  // 1 -> ... -> a -> b
        for (int v = 1; v <= n + 2; ++v) full.push_back(v);
        Path alpha(full.begin(), full.end() - 1);  // 1 -> ... -> a
        const int i_full = a.basis_index(full);
        const int i_e1 = a.basis_index({1});
        const int i_g1 = a.basis_index({n + 1, n + 2});
        const int i_alpha = a.basis_index(alpha);
        if (i_full < 0 || i_g1 < 0 || i_alpha < 0) return false;
        bool seen_f = false;
        for (int k = 0; k < s.dim(); ++k) {
            mpq_class f = 0;
            for (const auto& [pair, c] : s.basis[k])
                if (pair == std::make_pair(i_full, i_e1)) f = c;
            if (f != 0) seen_f = true;
            Tensor want_e1, want_ea;
            if (f != 0) {
                want_e1.push_back({{i_full, i_e1}, f});
                want_ea.push_back({{i_g1, i_alpha}, f});
            }
            ok = ok && coproduct_of(s, k, a.idempotent(1), a) == want_e1;
            ok = ok && coproduct_of(s, k, a.idempotent(n + 1), a) == want_ea;
        }
        ok = ok && seen_f;
    }
    return ok;
}

bool criterion6() {
    bool ok = true;
    for (int m = 1; m <= 4; ++m) {
        // x-chain of m vertices, two-vertex y-chain. The closed form
        // 1 + 4(m+1) holds from m = 2 on; at m = 1 the chain end x_1 turns
        // special and adds five structures, so the value is 14 there.
        Eval e = eval(gen::d2_example(1, m - 1));
        int want = m == 1 ? 14 : 1 + 4 * (m + 1);
        ok = ok && e.label.tag == ClassLabel::Tag::TypeD_II && exact(e, want);
    }
    return ok;
}

bool criterion7() {
    Eval worked = eval(gen::d3_example(1, 1, 1, 1));
    bool ok = worked.label.tag == ClassLabel::Tag::TypeD_III &&
              worked.formula.kind == FormulaResult::Kind::LowerBound &&
              worked.formula.value == 2 && worked.oracle == 2;
    for (int n = 0; n <= 3 && ok; ++n)
        for (int m = 0; m <= 3 && ok; ++m)
            for (int np = 0; np <= 3 && ok; ++np)
                for (int mp = 0; mp <= 3 && ok; ++mp)
                    ok = eval(gen::d3_example(n, m, np, mp)).oracle >= 2;
    return ok;
}

bool criterion8() {
    bool ok = true;
    for (int k = 3; k <= 6 && ok; ++k)
        for (unsigned mask = 0; mask < (1u << k) && ok; ++mask)
            ok = eval(gen::d4_cycle(k, mask)).oracle >= k;
    return ok;
}

bool criterion9() {
    auto cls = enumerate_mutation_class(gen::e6_tree(), 100000);
    bool ok = cls.size() == 67;
    int non_hereditary = 0;
    for (const Quiver& q : cls) {
        auto m = match_E6(q);
        if (!m) return false;
        if (q.acyclic() != (m->template_index == 1)) return false;
        if (q.acyclic()) {
            g_corpus.push_back(bound_quiver(q));
            continue;
        }
        ++non_hereditary;
        Eval e = eval(q);
        ok = ok && e.label.tag == ClassLabel::Tag::TypeE6 &&
             e.formula.kind == FormulaResult::Kind::LowerBound && e.formula.value == 1 &&
             e.oracle >= 1;
    }
    return ok && non_hereditary > 0;
}

bool check_properties(const BoundQuiver& bq, bool sufficiency) {
    PathAlgebra a = PathAlgebra::build(bq);
    const int d = a.dim();
    const int nv = a.quiver().num_vertices();

    // Admissibility witness: relations sit inside the arrow-ideal square and
    // some power of the arrow ideal vanishes.
    for (const Relation& r : bq.relations)
        if (r.first.size() < 3) return false;
    // The basis need not be length-graded: a commutativity relation can make
    // a long path equal to a shorter basis path, so the nilpotency index may
    // exceed the longest basis path by more than one.
    int max_len = 0;
    for (const Path& p : a.basis()) max_len = std::max<int>(max_len, (int)p.size() - 1);
    if (a.nilpotency_index() < max_len + 1) return false;

    // Peirce decomposition and the schurian property.
    int peirce = 0;
    for (int v = 1; v <= nv; ++v)
        for (int w = 1; w <= nv; ++w) {
            int h = a.dim_hom(v, w);
            if (h > 1) return false;
            peirce += h;
        }
    if (peirce != d) return false;

    // Associativity on all basis triples, via cached pairwise products.
    std::vector<std::vector<AlgebraElement>> table(d, std::vector<AlgebraElement>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            table[i][j] = a.multiply({{i, mpq_class(1)}}, {{j, mpq_class(1)}});
    auto mul_elem = [&](const AlgebraElement& x, int j) {
        AlgebraElement out;
        for (const auto& [i, c] : x) out = row_axpy(out, c, table[i][j]);
        return out;
    };
    auto elem_mul = [&](int i, const AlgebraElement& y) {
        AlgebraElement out;
        for (const auto& [j, c] : y) out = row_axpy(out, c, table[i][j]);
        return out;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                if (mul_elem(table[i][j], k) != elem_mul(i, table[j][k])) return false;

    FrobeniusSpace s = frobdim_oracle(a);

    // Bimodule property on all basis triples: with Delta(x) = (x (x) 1) z,
    // Delta(a x b) = (a (x) 1) Delta(x) (1 (x) b).
    if (d <= 40) {
        for (int z = 0; z < s.dim(); ++z) {
            std::vector<Tensor> lz(d);
            for (int i = 0; i < d; ++i)
                lz[i] = left_mul(s.basis[z], {{i, mpq_class(1)}}, a);
            auto delta = [&](const AlgebraElement& x) {
                std::map<std::pair<int, int>, mpq_class> acc;
                for (const auto& [i, c] : x)
                    for (const auto& [pair, ci] : lz[i]) acc[pair] += c * ci;
                Tensor out;
                for (const auto& [pair, c] : acc)
                    if (c != 0) out.push_back({pair, c});
                return out;
            };
            for (int i = 0; i < d; ++i) {
                for (int x = 0; x < d; ++x) {
                    const AlgebraElement& ax = table[i][x];
                    if (ax.empty()) continue;
                    Tensor axz = delta(ax);
                    for (int b = 0; b < d; ++b) {
                        Tensor lhs = delta(mul_elem(ax, b));
                        Tensor rhs = right_mul(axz, {{b, mpq_class(1)}}, a);
                        if (lhs != rhs) return false;
                    }
                }
            }
        }
    }

    if (sufficiency && frobdim_oracle(a, true).dim() != s.dim()) return false;
    return true;
}

bool criterion10() {
    if (g_corpus.size() < 10) return false;
    std::mt19937 rng(271828);
    std::set<std::size_t> chosen;
    std::uniform_int_distribution<std::size_t> pick(0, g_corpus.size() - 1);
    while (chosen.size() < 10) chosen.insert(pick(rng));
    for (std::size_t i = 0; i < g_corpus.size(); ++i)
        if (!check_properties(g_corpus[i], chosen.count(i) != 0)) return false;
    return true;
}

int run(int num, const char* what, bool (*fn)()) {
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        std::printf("criterion %d: FAIL - %s (%s)\n", num, what, e.what());
        return 1;
    }
    std::printf("criterion %d: %s - %s\n", num, ok ? "PASS" : "FAIL", what);
    return ok ? 0 : 1;
}

}  // namespace

int main() {
    int failures = 0;
    failures += run(1, "linear orientations have dimension 1, other acyclic ones 0", criterion1);
    failures += run(2, "formula equals oracle across the A_3..A_7 mutation classes", criterion2);
    failures += run(3, "five- and six-vertex mutation pairs give (4,6) and (0,7)", criterion3);
    failures += run(4, "twenty-vertex example has dimension 0", criterion4);
    failures += run(5, "freecycle family dimensions and coproduct table", criterion5);
    failures += run(6, "sub-type II worked family gives 1+4(m+1)", criterion6);
    failures += run(7, "sub-type III example is exactly 2; corner sweep stays >= 2", criterion7);
    failures += run(8, "sub-type IV spiked cycles reach the bound k", criterion8);
    failures += run(9, "E6 class has 67 members matching the templates", criterion9);
    failures += run(10, "algebra and oracle property suite over the whole corpus", criterion10);
    if (failures) std::printf("%d criteria failed\n", failures);
    return failures ? 1 : 0;
}
