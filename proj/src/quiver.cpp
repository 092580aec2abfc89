#include "ctfrob/quiver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ctf {

Quiver::Quiver(int num_vertices, std::vector<Arrow> arrows)
    : n_(num_vertices), arrows_(std::move(arrows)) {
    if (n_ < 1) throw QuiverError("quiver needs at least one vertex");
    out_.assign(n_ + 1, {});
    in_.assign(n_ + 1, {});
    arrow_at_.assign(n_ + 1, std::vector<int>(n_ + 1, -1));
    std::set<std::string> names;
    for (int i = 0; i < static_cast<int>(arrows_.size()); ++i) {
        const Arrow& a = arrows_[i];
        if (!has_vertex(a.src) || !has_vertex(a.tgt))
            throw QuiverError("arrow " + a.name + " uses unknown vertex");
        if (a.src == a.tgt)
            throw QuiverError("loop at vertex " + std::to_string(a.src));
        if (arrow_at_[a.tgt][a.src] >= 0)
            throw QuiverError("2-cycle between " + std::to_string(a.src) + " and " +
                              std::to_string(a.tgt));
        if (arrow_at_[a.src][a.tgt] >= 0)
            throw QuiverError("parallel arrow " + std::to_string(a.src) + " -> " +
                              std::to_string(a.tgt));
        if (!names.insert(a.name).second)
            throw QuiverError("duplicate arrow name " + a.name);
        arrow_at_[a.src][a.tgt] = i;
        out_[a.src].push_back(a.tgt);
        in_[a.tgt].push_back(a.src);
    }
    for (int v = 1; v <= n_; ++v) {
        std::sort(out_[v].begin(), out_[v].end());
        std::sort(in_[v].begin(), in_[v].end());
    }
}

bool Quiver::has_arrow(int s, int t) const { return arrow_index(s, t) >= 0; }

int Quiver::arrow_index(int s, int t) const {
    if (!has_vertex(s) || !has_vertex(t)) return -1;
    return arrow_at_[s][t];
}

const std::vector<int>& Quiver::out_neighbors(int v) const {
    if (!has_vertex(v)) throw QuiverError("unknown vertex " + std::to_string(v));
    return out_[v];
}

const std::vector<int>& Quiver::in_neighbors(int v) const {
    if (!has_vertex(v)) throw QuiverError("unknown vertex " + std::to_string(v));
    return in_[v];
}

int Quiver::valency(int v) const {
    return static_cast<int>(out_neighbors(v).size() + in_neighbors(v).size());
}

bool Quiver::is_path(const Path& p) const {
    if (p.empty()) return false;
    if (!has_vertex(p.front())) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!has_arrow(p[i], p[i + 1])) return false;
    return true;
}

bool Quiver::connected() const {
    std::vector<char> seen(n_ + 1, 0);
    std::deque<int> work{1};
    seen[1] = 1;
    int count = 1;
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        auto visit = [&](int w) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                work.push_back(w);
            }
        };
        for (int w : out_[v]) visit(w);
        for (int w : in_[v]) visit(w);
    }
    return count == n_;
}

bool Quiver::acyclic() const {
    std::vector<int> indeg(n_ + 1, 0);
    for (const Arrow& a : arrows_) ++indeg[a.tgt];
    std::deque<int> work;
    for (int v = 1; v <= n_; ++v)
        if (indeg[v] == 0) work.push_back(v);
    int removed = 0;
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        ++removed;
        for (int w : out_[v])
            if (--indeg[w] == 0) work.push_back(w);
    }
    return removed == n_;
}

std::vector<std::array<int, 3>> Quiver::three_cycles() const {
    std::vector<std::array<int, 3>> out;
    for (int a = 1; a <= n_; ++a)
        for (int b : out_[a]) {
            if (b < a) continue;
            for (int c : out_[b]) {
                if (c < a) continue;
                if (has_arrow(c, a)) out.push_back({a, b, c});
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool Quiver::on_three_cycle(int s, int t) const {
    if (!has_arrow(s, t)) return false;
    for (int c : out_[t])
        if (has_arrow(c, s)) return true;
    return false;
}

std::vector<std::vector<int>> Quiver::simple_cycles() const {
    std::vector<std::vector<int>> cycles;
    std::vector<int> stack;
    std::vector<char> on_stack(n_ + 1, 0);
    // Johnson-style restriction: only explore vertices >= the cycle root, so
    // every cycle is found exactly once, rooted at its smallest vertex.
    auto dfs = [&](auto&& self, int root, int v) -> void {
        for (int w : out_[v]) {
            if (w == root) {
                cycles.push_back(stack);
            } else if (w > root && !on_stack[w]) {
                stack.push_back(w);
                on_stack[w] = 1;
                self(self, root, w);
                on_stack[w] = 0;
                stack.pop_back();
            }
        }
    };
    for (int root = 1; root <= n_; ++root) {
        stack = {root};
        on_stack[root] = 1;
        dfs(dfs, root, root);
        on_stack[root] = 0;
    }
    std::sort(cycles.begin(), cycles.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return cycles;
}

bool Quiver::operator==(const Quiver& o) const {
    if (n_ != o.n_ || arrows_.size() != o.arrows_.size()) return false;
    for (const Arrow& a : arrows_)
        if (!o.has_arrow(a.src, a.tgt)) return false;
    return true;
}

Quiver mutate(const Quiver& q, int k) {
    if (!q.has_vertex(k)) throw QuiverError("unknown vertex " + std::to_string(k));
    const int n = q.num_vertices();
    std::vector<std::vector<int>> b(n + 1, std::vector<int>(n + 1, 0));
    for (const Arrow& a : q.arrows()) {
        b[a.src][a.tgt] = 1;
        b[a.tgt][a.src] = -1;
    }
    std::vector<std::vector<int>> nb = b;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == k || j == k)
                nb[i][j] = -b[i][j];
            else if (b[i][k] > 0 && b[k][j] > 0)
                nb[i][j] = b[i][j] + b[i][k] * b[k][j];
            else if (b[i][k] < 0 && b[k][j] < 0)
                nb[i][j] = b[i][j] - b[i][k] * b[k][j];
        }
    std::vector<Arrow> arrows;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (nb[i][j] > 1)
                throw QuiverError("mutation at " + std::to_string(k) +
                                  " creates a parallel arrow " + std::to_string(i) + " -> " +
                                  std::to_string(j));
            if (nb[i][j] == 1)
                arrows.push_back({"a" + std::to_string(i) + "_" + std::to_string(j), i, j});
        }
    return Quiver(n, std::move(arrows));
}

namespace {

// Isomorphism-invariant vertex signatures, refined a la 1-WL until stable.
std::vector<std::string> vertex_signatures(const Quiver& q) {
    const int n = q.num_vertices();
    std::vector<std::string> sig(n + 1);
    for (int v = 1; v <= n; ++v)
        sig[v] = std::to_string(q.out_neighbors(v).size()) + "," +
                 std::to_string(q.in_neighbors(v).size());
    for (int round = 0; round < n; ++round) {
        std::vector<std::string> next(n + 1);
        for (int v = 1; v <= n; ++v) {
            std::vector<std::string> outs, ins;
            for (int w : q.out_neighbors(v)) outs.push_back(sig[w]);
            for (int w : q.in_neighbors(v)) ins.push_back(sig[w]);
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            std::string s = sig[v] + "|o";
            for (auto& x : outs) s += "(" + x + ")";
            s += "i";
            for (auto& x : ins) s += "(" + x + ")";
            next[v] = s;
        }
        std::set<std::string> before(sig.begin() + 1, sig.end());
        std::set<std::string> after(next.begin() + 1, next.end());
        sig = next;
        if (after.size() == before.size()) break;
    }
    return sig;
}

std::string encode(const Quiver& q, const std::vector<int>& pos) {
    // pos[v] = position of vertex v; row-major adjacency bits.
    const int n = q.num_vertices();
    std::string enc(static_cast<std::size_t>(n) * n, '0');
    for (const Arrow& a : q.arrows())
        enc[static_cast<std::size_t>(pos[a.src]) * n + pos[a.tgt]] = '1';
    return enc;
}

}  // namespace

std::string canonical_form(const Quiver& q) {
    const int n = q.num_vertices();
    auto sig = vertex_signatures(q);
    // Group vertices into classes by signature; positions are assigned class
    // by class, permuting only within a class.
    std::map<std::string, std::vector<int>> classes;
    for (int v = 1; v <= n; ++v) classes[sig[v]].push_back(v);
    std::vector<std::vector<int>> groups;
    for (auto& [s, vs] : classes) groups.push_back(vs);

    std::string best;
    std::vector<int> pos(n + 1, -1);
    auto rec = [&](auto&& self, std::size_t gi, int base) -> void {
        if (gi == groups.size()) {
            std::string enc = encode(q, pos);
            if (best.empty() || enc < best) best = enc;
            return;
        }
        std::vector<int> perm = groups[gi];
        std::sort(perm.begin(), perm.end());
        do {
            for (int i = 0; i < static_cast<int>(perm.size()); ++i) pos[perm[i]] = base + i;
            self(self, gi + 1, base + static_cast<int>(perm.size()));
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(rec, 0, 0);
    return std::to_string(n) + ":" + best;
}

std::optional<std::vector<int>> is_isomorphic(const Quiver& q1, const Quiver& q2) {
    const int n = q1.num_vertices();
    if (n != q2.num_vertices() || q1.arrows().size() != q2.arrows().size())
        return std::nullopt;
    auto s1 = vertex_signatures(q1);
    auto s2 = vertex_signatures(q2);
    std::multiset<std::string> m1(s1.begin() + 1, s1.end());
    std::multiset<std::string> m2(s2.begin() + 1, s2.end());
    if (m1 != m2) return std::nullopt;

    std::vector<int> map(n + 1, 0);
    std::vector<char> used(n + 1, 0);
    auto compatible = [&](int v, int w) {
        if (s1[v] != s2[w]) return false;
        for (int u = 1; u <= n; ++u) {
            if (!map[u]) continue;
            if (q1.has_arrow(v, u) != q2.has_arrow(w, map[u])) return false;
            if (q1.has_arrow(u, v) != q2.has_arrow(map[u], w)) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int v) -> bool {
        if (v > n) return true;
        for (int w = 1; w <= n; ++w) {
            if (used[w] || !compatible(v, w)) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            map[v] = 0;
            used[w] = 0;
        }
        return false;
    };
    if (!rec(rec, 1)) return std::nullopt;
    return map;
}

std::vector<Quiver> enumerate_mutation_class(const Quiver& q, std::size_t max_size) {
    std::set<std::string> seen;
    std::vector<Quiver> out;
    std::deque<Quiver> work;
    seen.insert(canonical_form(q));
    out.push_back(q);
    work.push_back(q);
    while (!work.empty()) {
        Quiver cur = work.front();
        work.pop_front();
        for (int k = 1; k <= cur.num_vertices(); ++k) {
            Quiver m = mutate(cur, k);
            if (seen.insert(canonical_form(m)).second) {
                if (out.size() >= max_size)
                    throw QuiverError("mutation class exceeds limit of " +
                                      std::to_string(max_size));
                out.push_back(m);
                work.push_back(m);
            }
        }
    }
    return out;
}

}  // namespace ctf
