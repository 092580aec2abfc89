#include "ctfrob/relations.hpp"

#include <algorithm>
#include <set>

#include "ctfrob/classify.hpp"

namespace ctf {

namespace {

Relation zero(Path p) {
    Relation r;
    r.kind = Relation::Kind::Zero;
    r.first = std::move(p);
    return r;
}

Relation comm(Path p, Path q) {
    Relation r;
    r.kind = Relation::Kind::Comm;
    r.first = std::move(p);
    r.second = std::move(q);
    return r;
}

// Three length-two zeros killing every composite along a 3-cycle.
void saturate(std::vector<Relation>& out, const std::array<int, 3>& cyc) {
    auto [u, v, w] = cyc;
    out.push_back(zero({u, v, w}));
    out.push_back(zero({v, w, u}));
    out.push_back(zero({w, u, v}));
}

void finish(std::vector<Relation>& out) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace

void validate_relation(const Quiver& q, const Relation& r) {
    auto check_path = [&](const Path& p) {
        if (p.size() < 3) throw QuiverError("relation path needs length >= 2");
        if (!q.is_path(p)) {
            std::string s;
            for (std::size_t i = 0; i < p.size(); ++i)
                s += (i ? " " : "") + std::to_string(p[i]);
            throw QuiverError("'" + s + "' is not a path");
        }
    };
    check_path(r.first);
    if (r.kind == Relation::Kind::Comm) {
        check_path(r.second);
        if (r.first.front() != r.second.front() || r.first.back() != r.second.back())
            throw QuiverError("'comm' paths must share both endpoints");
    }
}

std::vector<Relation> relations_A(const Quiver& q) {
    auto check = is_mutation_class_A(q);
    if (!check.ok) throw QuiverError("relations_A: " + check.reason);
    std::vector<Relation> out;
    for (const auto& cyc : q.three_cycles()) saturate(out, cyc);
    finish(out);
    return out;
}

std::vector<Relation> relations_D(const Quiver& q, const DWitness& w) {
    std::vector<Relation> out;
    switch (w.subtype) {
        case 1: {
            for (const auto& cyc : q.three_cycles()) saturate(out, cyc);
            break;
        }
        case 2: {
            out.push_back(comm({w.c, w.b, w.d}, {w.c, w.a, w.d}));
            out.push_back(zero({w.d, w.c, w.b}));
            out.push_back(zero({w.d, w.c, w.a}));
            out.push_back(zero({w.b, w.d, w.c}));
            out.push_back(zero({w.a, w.d, w.c}));
            for (const auto& cyc : q.three_cycles())
                if (!std::count(cyc.begin(), cyc.end(), w.a) &&
                    !std::count(cyc.begin(), cyc.end(), w.b))
                    saturate(out, cyc);
            break;
        }
        case 3: {
            out.push_back(zero({w.c, w.b, w.d, w.a}));
            out.push_back(zero({w.b, w.d, w.a, w.c}));
            out.push_back(zero({w.d, w.a, w.c, w.b}));
            out.push_back(zero({w.a, w.c, w.b, w.d}));
            for (const auto& cyc : q.three_cycles()) saturate(out, cyc);
            break;
        }
        case 4: {
            const int k = static_cast<int>(w.central.size());
            std::set<int> central(w.central.begin(), w.central.end());
            for (int i = 0; i < k; ++i) {
                int s = w.central[i], t = w.central[(i + 1) % k];
                Path longway;  // the other way around the cycle, t back to s
                for (int j = 1; j <= k; ++j) longway.push_back(w.central[(i + j) % k]);
                if (int c = w.spike[i]) {
                    out.push_back(comm(longway, {t, c, s}));
                    out.push_back(zero({s, t, c}));
                    out.push_back(zero({c, s, t}));
                } else {
                    out.push_back(zero(longway));
                }
            }
            for (const auto& cyc : q.three_cycles()) {
                bool touches = false;
                for (int v : cyc)
                    if (central.count(v)) touches = true;
                if (!touches) saturate(out, cyc);
            }
            break;
        }
        default:
            throw QuiverError("relations_D: invalid witness");
    }
    finish(out);
    return out;
}

std::vector<Relation> relations_E6(const Quiver& q, const E6Match& m) {
    const auto& templates = e6_templates();
    if (m.template_index < 1 || m.template_index > static_cast<int>(templates.size()))
        throw QuiverError("relations_E6: invalid template index");
    const E6Template& e = templates[m.template_index - 1];
    std::vector<Relation> out;
    auto transport = [&](const Path& p) {
        Path q2;
        for (int v : p) q2.push_back(m.map[v]);
        return q2;
    };
    for (const Relation& r : e.relations) {
        Relation s;
        s.kind = r.kind;
        s.first = transport(r.first);
        if (r.kind == Relation::Kind::Comm) s.second = transport(r.second);
        validate_relation(q, s);
        out.push_back(s);
    }
    finish(out);
    return out;
}

BoundQuiver bound_quiver(const Quiver& q, const std::vector<Relation>& explicit_relations) {
    if (!explicit_relations.empty()) {
        for (const Relation& r : explicit_relations) validate_relation(q, r);
        return {q, explicit_relations};
    }
    ClassLabel label = classify(q);
    switch (label.tag) {
        case ClassLabel::Tag::TypeA:
            return {q, relations_A(q)};
        case ClassLabel::Tag::TypeD_I:
        case ClassLabel::Tag::TypeD_II:
        case ClassLabel::Tag::TypeD_III:
        case ClassLabel::Tag::TypeD_IV:
            return {q, relations_D(q, *label.d)};
        case ClassLabel::Tag::TypeE6:
            return {q, relations_E6(q, *label.e6)};
        default:
            throw QuiverError("no relations known for this quiver; supply them explicitly");
    }
}

}  // namespace ctf
