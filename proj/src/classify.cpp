#include "ctfrob/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ctf {

namespace {

std::string cycle_str(const std::vector<int>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s;
}

}  // namespace

ACheck is_mutation_class_A(const Quiver& q) {
    if (!q.connected()) throw QuiverError("is_mutation_class_A requires a connected quiver");
    for (const auto& cyc : q.simple_cycles())
        if (cyc.size() != 3)
            return {false, "non-trivial cycle of length " + std::to_string(cyc.size()) +
                               " (" + cycle_str(cyc) + ")"};
    for (int v = 1; v <= q.num_vertices(); ++v) {
        int val = q.valency(v);
        if (val > 4)
            return {false, "vertex " + std::to_string(v) + " has valency " + std::to_string(val)};
        if (val <= 2) continue;
        // Arrows at v that lie on a 3-cycle through v, paired by cycle.
        std::vector<std::pair<int, int>> cycle_pairs;  // (in-neighbor, out-neighbor)
        for (int u : q.in_neighbors(v))
            for (int w : q.out_neighbors(v))
                if (q.has_arrow(w, u)) cycle_pairs.push_back({u, w});
        if (val == 3) {
            if (cycle_pairs.size() != 1)
                return {false, "vertex " + std::to_string(v) +
                                   " has valency three without a unique adjacent 3-cycle"};
            int u = cycle_pairs[0].first, w = cycle_pairs[0].second;
            // The remaining arrow must not belong to any 3-cycle.
            for (int x : q.in_neighbors(v))
                if (x != u && q.on_three_cycle(x, v))
                    return {false, "vertex " + std::to_string(v) +
                                       ": third arrow lies on a 3-cycle"};
            for (int x : q.out_neighbors(v))
                if (x != w && q.on_three_cycle(v, x))
                    return {false, "vertex " + std::to_string(v) +
                                       ": third arrow lies on a 3-cycle"};
        } else {  // val == 4
            if (cycle_pairs.size() != 2)
                return {false, "vertex " + std::to_string(v) +
                                   " has valency four without two adjacent 3-cycles"};
            auto [u1, w1] = cycle_pairs[0];
            auto [u2, w2] = cycle_pairs[1];
            if (u1 == u2 || w1 == w2)
                return {false, "vertex " + std::to_string(v) +
                                   ": the two adjacent 3-cycles share an arrow"};
        }
    }
    return {true, ""};
}

std::vector<int> connecting_vertices(const Quiver& q) {
    std::vector<int> out;
    for (int v = 1; v <= q.num_vertices(); ++v) {
        int val = q.valency(v);
        if (val == 1) {
            out.push_back(v);
        } else if (val == 2) {
            bool on_cycle = false;
            for (int u : q.in_neighbors(v))
                if (q.on_three_cycle(u, v)) on_cycle = true;
            for (int w : q.out_neighbors(v))
                if (q.on_three_cycle(v, w)) on_cycle = true;
            if (on_cycle) out.push_back(v);
        }
    }
    return out;
}

namespace {

struct Induced {
    Quiver quiver;
    std::vector<int> to_orig;                 // new vertex (1-based) -> original
    std::map<int, int> to_new;                // original -> new
};

Induced induced_subquiver(const Quiver& q, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    Induced r{Quiver(1, {}), {0}, {}};
    for (int v : verts) {
        r.to_new[v] = static_cast<int>(r.to_orig.size());
        r.to_orig.push_back(v);
    }
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows())
        if (r.to_new.count(a.src) && r.to_new.count(a.tgt))
            arrows.push_back({a.name, r.to_new[a.src], r.to_new[a.tgt]});
    r.quiver = Quiver(static_cast<int>(verts.size()), std::move(arrows));
    return r;
}

// Connected components of Q minus `core`, with the set of core vertices each
// component touches.
struct Component {
    std::vector<int> verts;
    std::set<int> attach;
};

std::vector<Component> components_outside(const Quiver& q, const std::set<int>& core) {
    std::vector<char> seen(q.num_vertices() + 1, 0);
    std::vector<Component> comps;
    for (int s = 1; s <= q.num_vertices(); ++s) {
        if (seen[s] || core.count(s)) continue;
        Component comp;
        std::vector<int> work{s};
        seen[s] = 1;
        while (!work.empty()) {
            int v = work.back();
            work.pop_back();
            comp.verts.push_back(v);
            auto visit = [&](int w) {
                if (core.count(w)) {
                    comp.attach.insert(w);
                } else if (!seen[w]) {
                    seen[w] = 1;
                    work.push_back(w);
                }
            };
            for (int w : q.out_neighbors(v)) visit(w);
            for (int w : q.in_neighbors(v)) visit(w);
        }
        std::sort(comp.verts.begin(), comp.verts.end());
        comps.push_back(comp);
    }
    return comps;
}

// Checks that {anchor} together with its attached components is in M^A with
// `anchor` a connecting vertex (waived when the residual is the single
// vertex).
bool residual_ok(const Quiver& q, int anchor, const std::vector<Component>& comps) {
    std::vector<int> verts{anchor};
    for (const Component& c : comps)
        if (c.attach.count(anchor))
            verts.insert(verts.end(), c.verts.begin(), c.verts.end());
    if (verts.size() == 1) return true;
    Induced sub = induced_subquiver(q, verts);
    if (!sub.quiver.connected()) return false;
    if (!is_mutation_class_A(sub.quiver).ok) return false;
    auto cv = connecting_vertices(sub.quiver);
    return std::find(cv.begin(), cv.end(), sub.to_new[anchor]) != cv.end();
}

// All components must attach to exactly one vertex in `anchors` and nothing
// else in the core.
bool attachments_ok(const std::vector<Component>& comps, const std::set<int>& anchors) {
    for (const Component& c : comps) {
        if (c.attach.size() != 1) return false;
        if (!anchors.count(*c.attach.begin())) return false;
    }
    return true;
}

int induced_arrow_count(const Quiver& q, const std::set<int>& verts) {
    int count = 0;
    for (const Arrow& a : q.arrows())
        if (verts.count(a.src) && verts.count(a.tgt)) ++count;
    return count;
}

std::optional<DWitness> try_type_IV(const Quiver& q) {
    auto cycles = q.simple_cycles();
    // Prefer the longest central cycle; ties by vertex sequence.
    std::stable_sort(cycles.begin(), cycles.end(), [](const auto& x, const auto& y) {
        return x.size() > y.size();
    });
    for (const auto& cyc : cycles) {
        const int k = static_cast<int>(cyc.size());
        if (k < 3) continue;
        std::set<int> central(cyc.begin(), cyc.end());
        if (induced_arrow_count(q, central) != k) continue;  // chord
        // Spikes: per central arrow v_i -> v_{i+1}, a vertex c off the cycle
        // closing an oriented 3-cycle the other way.
        std::vector<int> spike(k, 0);
        bool bad = false;
        for (int i = 0; i < k && !bad; ++i) {
            int s = cyc[i], t = cyc[(i + 1) % k];
            std::vector<int> cands;
            for (int w : q.out_neighbors(t))
                if (!central.count(w) && q.has_arrow(w, s)) cands.push_back(w);
            if (cands.size() > 1) bad = true;
            else if (cands.size() == 1) spike[i] = cands[0];
        }
        if (bad) continue;
        std::set<int> hat = central;
        std::set<int> spikes;
        for (int c : spike)
            if (c) {
                if (!hat.insert(c).second) bad = true;  // one vertex spiking two arrows
                spikes.insert(c);
            }
        if (bad) continue;
        // The full subquiver on the central cycle plus spikes must be exactly
        // the pattern: k cycle arrows plus 2 per spike.
        if (induced_arrow_count(q, hat) != k + 2 * static_cast<int>(spikes.size())) continue;
        auto comps = components_outside(q, hat);
        if (!attachments_ok(comps, spikes)) continue;
        bool all_ok = true;
        for (int c : spikes)
            if (!residual_ok(q, c, comps)) all_ok = false;
        if (!all_ok) continue;
        DWitness w;
        w.subtype = 4;
        w.central = cyc;
        w.spike = spike;
        return w;
    }
    return std::nullopt;
}

std::optional<DWitness> try_type_II(const Quiver& q) {
    // Core: shared arrow mu: d -> c with two 3-cycles d->c->b->d and
    // d->c->a->d; a and b have valency 2 in Q.
    for (const Arrow& mu : q.arrows()) {
        int d = mu.src, c = mu.tgt;
        std::vector<int> thirds;
        for (int x : q.out_neighbors(c))
            if (x != d && q.has_arrow(x, d) && q.valency(x) == 2) thirds.push_back(x);
        if (thirds.size() != 2) continue;
        int b = std::min(thirds[0], thirds[1]);
        int a = std::max(thirds[0], thirds[1]);
        std::set<int> hat{a, b, c, d};
        if (induced_arrow_count(q, hat) != 5) continue;
        auto comps = components_outside(q, hat);
        if (!attachments_ok(comps, {c, d})) continue;
        if (!residual_ok(q, c, comps) || !residual_ok(q, d, comps)) continue;
        DWitness w;
        w.subtype = 2;
        w.a = a;
        w.b = b;
        w.c = c;
        w.d = d;
        return w;
    }
    return std::nullopt;
}

std::optional<DWitness> try_type_III(const Quiver& q) {
    // Chordless oriented 4-cycle c->b->d->a->c with a, b of valency 2.
    for (const auto& cyc : q.simple_cycles()) {
        if (cyc.size() != 4) continue;
        std::set<int> central(cyc.begin(), cyc.end());
        if (induced_arrow_count(q, central) != 4) continue;
        for (int r = 0; r < 4; ++r) {
            int c = cyc[r], b = cyc[(r + 1) % 4], d = cyc[(r + 2) % 4], a = cyc[(r + 3) % 4];
            if (q.valency(a) != 2 || q.valency(b) != 2) continue;
            auto comps = components_outside(q, central);
            if (!attachments_ok(comps, {c, d})) continue;
            if (!residual_ok(q, c, comps) || !residual_ok(q, d, comps)) continue;
            DWitness w;
            w.subtype = 3;
            w.a = a;
            w.b = b;
            w.c = c;
            w.d = d;
            return w;
        }
    }
    return std::nullopt;
}

std::optional<DWitness> try_type_I(const Quiver& q) {
    if (q.num_vertices() < 4) return std::nullopt;
    for (int c = 1; c <= q.num_vertices(); ++c) {
        std::vector<int> sinks, sources;
        for (int x : q.out_neighbors(c))
            if (q.valency(x) == 1) sinks.push_back(x);
        for (int x : q.in_neighbors(c))
            if (q.valency(x) == 1) sources.push_back(x);
        for (const auto& pair_pool : {sinks, sources}) {
            if (pair_pool.size() != 2) continue;
            int a = pair_pool[0], b = pair_pool[1];
            std::vector<int> rest;
            for (int v = 1; v <= q.num_vertices(); ++v)
                if (v != a && v != b) rest.push_back(v);
            Induced sub = induced_subquiver(q, rest);
            if (!sub.quiver.connected()) continue;
            if (!is_mutation_class_A(sub.quiver).ok) continue;
            auto cv = connecting_vertices(sub.quiver);
            if (std::find(cv.begin(), cv.end(), sub.to_new[c]) == cv.end()) continue;
            DWitness w;
            w.subtype = 1;
            w.a = a;
            w.b = b;
            w.c = c;
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<DWitness> classify_D(const Quiver& q) {
    if (auto w = try_type_IV(q)) return w;
    if (auto w = try_type_II(q)) return w;
    if (auto w = try_type_III(q)) return w;
    if (auto w = try_type_I(q)) return w;
    return std::nullopt;
}

std::string to_string(ClassLabel::Tag t) {
    switch (t) {
        case ClassLabel::Tag::TypeA: return "TypeA";
        case ClassLabel::Tag::TypeD_I: return "TypeD_I";
        case ClassLabel::Tag::TypeD_II: return "TypeD_II";
        case ClassLabel::Tag::TypeD_III: return "TypeD_III";
        case ClassLabel::Tag::TypeD_IV: return "TypeD_IV";
        case ClassLabel::Tag::TypeE6: return "TypeE6";
        case ClassLabel::Tag::Unknown: return "Unknown";
    }
    return "Unknown";
}

ClassLabel classify(const Quiver& q) {
    if (!q.connected()) throw QuiverError("classify requires a connected quiver");
    ClassLabel label;
    label.hereditary = q.acyclic();
    if (is_mutation_class_A(q).ok) {
        label.tag = ClassLabel::Tag::TypeA;
        return label;
    }
    if (auto w = classify_D(q)) {
        switch (w->subtype) {
            case 1: label.tag = ClassLabel::Tag::TypeD_I; break;
            case 2: label.tag = ClassLabel::Tag::TypeD_II; break;
            case 3: label.tag = ClassLabel::Tag::TypeD_III; break;
            default: label.tag = ClassLabel::Tag::TypeD_IV; break;
        }
        label.d = w;
        return label;
    }
    if (q.num_vertices() == 6) {
        if (auto m = match_E6(q)) {
            label.tag = ClassLabel::Tag::TypeE6;
            label.e6 = m;
            return label;
        }
    }
    label.tag = ClassLabel::Tag::Unknown;
    return label;
}

}  // namespace ctf
