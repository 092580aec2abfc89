#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ctfrob/classify.hpp"
#include "ctfrob/io.hpp"

namespace ctf {

namespace {

Relation Z(Path p) {
    Relation r;
    r.kind = Relation::Kind::Zero;
    r.first = std::move(p);
    return r;
}

Relation C(Path p, Path q) {
    Relation r;
    r.kind = Relation::Kind::Comm;
    r.first = std::move(p);
    r.second = std::move(q);
    return r;
}

using VP = std::vector<std::pair<int, int>>;

std::vector<E6Template> build_templates() {
    std::vector<E6Template> t;
    auto add = [&](VP arrows, VP edges, std::vector<Relation> rels) {
        E6Template e;
        e.index = static_cast<int>(t.size()) + 1;
        e.arrows = std::move(arrows);
        e.edges = std::move(edges);
        e.relations = std::move(rels);
        t.push_back(std::move(e));
    };

    add({}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}}, {});

    add({{3, 4}, {5, 3}, {2, 3}, {4, 5}, {4, 2}}, {{1, 2}, {5, 6}},
        {Z({2, 3, 4}), Z({3, 4, 2}), Z({5, 3, 4}), Z({3, 4, 5}), C({4, 2, 3}, {4, 5, 3})});

    add({{6, 5}, {5, 2}, {2, 6}, {2, 3}, {3, 5}}, {{1, 2}, {3, 4}},
        {Z({3, 5, 2}), Z({5, 2, 3}), Z({6, 5, 2}), Z({5, 2, 6}), C({2, 6, 5}, {2, 3, 5})});

    add({{1, 4}, {1, 2}, {4, 3}, {2, 3}, {3, 1}}, {{5, 2}, {3, 6}},
        {Z({2, 3, 1}), Z({3, 1, 2}), Z({4, 3, 1}), Z({3, 1, 4}), C({1, 2, 3}, {1, 4, 3})});

    add({{3, 4}, {2, 6}, {2, 3}, {4, 2}, {5, 2}, {6, 5}, {6, 4}}, {{1, 2}},
        {Z({3, 4, 2}), Z({4, 2, 3}), Z({4, 2, 6}), Z({2, 6, 5}), Z({5, 2, 6}),
         C({2, 3, 4}, {2, 6, 4}), C({6, 4, 2}, {6, 5, 2})});

    add({{3, 4}, {2, 3}, {2, 6}, {4, 2}, {4, 5}, {6, 4}, {5, 6}}, {{1, 2}},
        {Z({3, 4, 2}), Z({4, 2, 3}), Z({6, 4, 2}), Z({5, 6, 4}), Z({6, 4, 5}),
         C({2, 3, 4}, {2, 6, 4}), C({4, 2, 6}, {4, 5, 6})});

    add({{6, 2}, {2, 5}, {5, 6}, {5, 3}, {3, 4}, {3, 2}, {4, 5}}, {{1, 2}},
        {Z({2, 5, 6}), Z({6, 2, 5}), Z({2, 5, 3}), Z({4, 5, 3}), Z({5, 3, 4}),
         C({5, 6, 2}, {5, 3, 2}), C({3, 2, 5}, {3, 4, 5})});

    add({{1, 2}, {2, 4}, {2, 6}, {3, 2}, {4, 1}, {4, 5}, {5, 2}, {6, 3}, {6, 5}}, {},
        {Z({1, 2, 4}), Z({2, 4, 1}), Z({5, 2, 4}), Z({5, 2, 6}), Z({2, 6, 3}), Z({3, 2, 6}),
         C({4, 1, 2}, {4, 5, 2}), C({2, 4, 5}, {2, 6, 5}), C({6, 3, 2}, {6, 5, 2})});

    add({{1, 2}, {2, 3}, {2, 4}, {3, 6}, {4, 1}, {4, 5}, {5, 2}, {6, 5}}, {},
        {Z({1, 2, 4}), Z({2, 4, 1}), Z({5, 2, 4}), Z({3, 6, 5, 2}), Z({6, 5, 2, 3}),
         Z({5, 2, 3, 6}), C({4, 1, 2}, {4, 5, 2}), C({2, 4, 5}, {2, 3, 6, 5})});

    add({{2, 1}, {3, 4}, {3, 5}, {3, 2}, {5, 6}, {1, 3}, {4, 6}, {4, 1}, {6, 3}}, {},
        {Z({1, 3, 2}), Z({2, 1, 3}), Z({1, 3, 4}), Z({6, 3, 4}), Z({6, 3, 5}), Z({5, 6, 3}),
         C({3, 2, 1}, {3, 4, 1}), C({3, 4, 6}, {3, 5, 6}), C({4, 1, 3}, {4, 6, 3})});

    add({{1, 2}, {2, 3}, {2, 5}, {3, 6}, {4, 1}, {5, 6}, {5, 4}, {6, 2}}, {},
        {Z({3, 6, 2}), Z({6, 2, 3}), Z({6, 2, 5}), Z({1, 2, 5, 4}), Z({2, 5, 4, 1}),
         Z({4, 1, 2, 5}), C({2, 3, 6}, {2, 5, 6}), C({5, 6, 2}, {5, 4, 1, 2})});

    add({{1, 2}, {2, 4}, {2, 3}, {3, 5}, {4, 1}, {4, 5}, {5, 6}, {5, 2}, {6, 3}}, {},
        {Z({1, 2, 4}), Z({2, 4, 1}), Z({5, 2, 4}), Z({3, 5, 2}), Z({3, 5, 6}), Z({6, 3, 5}),
         C({2, 4, 5}, {2, 3, 5}), C({4, 1, 2}, {4, 5, 2}), C({5, 2, 3}, {5, 6, 3})});

    add({{3, 4}, {2, 3}, {2, 5}, {4, 2}, {5, 6}, {6, 4}}, {{1, 2}},
        {Z({3, 4, 2}), Z({4, 2, 3}), Z({5, 6, 4, 2}), Z({6, 4, 2, 5}), Z({4, 2, 5, 6}),
         C({2, 3, 4}, {2, 5, 6, 4})});

    add({{6, 2}, {2, 3}, {3, 6}, {3, 4}, {4, 5}, {5, 2}}, {{1, 2}},
        {Z({2, 3, 6}), Z({6, 2, 3}), Z({4, 5, 2, 3}), Z({5, 2, 3, 4}), Z({2, 3, 4, 5}),
         C({3, 6, 2}, {3, 4, 5, 2})});

    add({{6, 3}, {3, 4}, {4, 6}, {4, 5}, {5, 2}, {2, 3}}, {{1, 2}},
        {Z({3, 4, 6}), Z({6, 3, 4}), Z({5, 2, 3, 4}), Z({2, 3, 4, 5}), Z({3, 4, 5, 2}),
         C({4, 6, 3}, {4, 5, 2, 3})});

    add({{6, 4}, {5, 6}, {5, 2}, {4, 5}, {2, 3}, {3, 4}}, {{1, 2}},
        {Z({4, 5, 6}), Z({6, 4, 5}), Z({2, 3, 4, 5}), Z({3, 4, 5, 2}), Z({4, 5, 2, 3}),
         C({5, 6, 4}, {5, 2, 3, 4})});

    add({{1, 2}, {2, 5}, {3, 2}, {4, 1}, {5, 4}, {5, 6}, {6, 3}}, {},
        {Z({1, 2, 5, 4}), Z({2, 5, 4, 1}), Z({4, 1, 2, 5}), Z({3, 2, 5, 6}), Z({2, 5, 6, 3}),
         Z({6, 3, 2, 5}), C({5, 4, 1, 2}, {5, 6, 3, 2})});

    add({{4, 2}, {6, 2}, {3, 4}, {2, 5}, {2, 3}, {5, 6}}, {{1, 2}},
        {Z({2, 3, 4}), Z({3, 4, 2}), Z({4, 2, 3}), Z({2, 5, 6}), Z({5, 6, 2}), Z({6, 2, 5})});

    add({{3, 4}, {4, 5}, {5, 3}}, {{1, 2}, {2, 3}, {3, 6}},
        {Z({3, 4, 5}), Z({4, 5, 3}), Z({5, 3, 4})});

    add({{5, 2}, {6, 5}, {2, 4}, {4, 6}}, {{1, 2}, {3, 4}},
        {Z({2, 4, 6, 5}), Z({4, 6, 5, 2}), Z({6, 5, 2, 4}), Z({5, 2, 4, 6})});

    add({{6, 2}, {5, 6}, {4, 5}, {2, 3}, {3, 4}}, {{1, 2}},
        {Z({2, 3, 4, 5, 6}), Z({3, 4, 5, 6, 2}), Z({4, 5, 6, 2, 3}), Z({5, 6, 2, 3, 4}),
         Z({6, 2, 3, 4, 5})});

    // Every relation path must run along directed template arrows.
    for (const E6Template& e : t) {
        auto has = [&](int s, int u) {
            return std::find(e.arrows.begin(), e.arrows.end(), std::make_pair(s, u)) !=
                   e.arrows.end();
        };
        auto check_path = [&](const Path& p) {
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                if (!has(p[i], p[i + 1]))
                    throw std::logic_error("template " + std::to_string(e.index) +
                                           ": relation path uses a missing arrow " +
                                           std::to_string(p[i]) + "->" +
                                           std::to_string(p[i + 1]));
        };
        for (const Relation& r : e.relations) {
            check_path(r.first);
            if (r.kind == Relation::Kind::Comm) check_path(r.second);
        }
    }
    return t;
}

}  // namespace

const std::vector<E6Template>& e6_templates() {
    static const std::vector<E6Template> t = build_templates();
    return t;
}

std::string e6_template_data_text() {
    std::ostringstream os;
    for (const E6Template& e : e6_templates()) {
        os << "template " << e.index << "\n";
        os << "vertices 6\n";
        for (auto [s, t] : e.arrows)
            os << "arrow a" << s << "_" << t << " " << s << " " << t << "\n";
        for (auto [s, t] : e.edges) os << "edge " << s << " " << t << "\n";
        for (const Relation& r : e.relations) os << print_relation(r) << "\n";
        os << "\n";
    }
    return os.str();
}

std::optional<E6Match> match_E6(const Quiver& q) {
    if (q.num_vertices() != 6) return std::nullopt;
    const int num_arrows = static_cast<int>(q.arrows().size());
    std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};  // perm[i] = image of template vertex i
    for (const E6Template& e : e6_templates()) {
        if (static_cast<int>(e.arrows.size() + e.edges.size()) != num_arrows) continue;
        std::sort(perm.begin() + 1, perm.end());
        do {
            bool ok = true;
            for (auto [s, t] : e.arrows)
                if (!q.has_arrow(perm[s], perm[t])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            std::vector<std::pair<int, int>> orient;
            for (auto [s, t] : e.edges) {
                if (q.has_arrow(perm[s], perm[t])) {
                    orient.push_back({s, t});
                } else if (q.has_arrow(perm[t], perm[s])) {
                    orient.push_back({t, s});
                } else {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            E6Match m;
            m.template_index = e.index;
            m.map = perm;
            m.orientations = orient;
            return m;
        } while (std::next_permutation(perm.begin() + 1, perm.end()));
    }
    return std::nullopt;
}

}  // namespace ctf
