#include "ctfrob/generators.hpp"

#include <string>
#include <vector>

namespace ctf {
namespace gen {

namespace {

Quiver make(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<Arrow> arrows;
    for (auto [s, t] : arcs)
        arrows.push_back({"a" + std::to_string(s) + "_" + std::to_string(t), s, t});
    return Quiver(n, std::move(arrows));
}

}  // namespace

Quiver linear_A(int n, unsigned mask) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i < n; ++i) {
        if (mask & (1u << (i - 1)))
            arcs.push_back({i + 1, i});
        else
            arcs.push_back({i, i + 1});
    }
    return make(n, arcs);
}

Quiver lineal_freecycle(int n) {
    const int a = n + 1, b = n + 2, c = n + 3;
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= n; ++i) arcs.push_back({i, i + 1});
    arcs.push_back({a, b});
    arcs.push_back({b, c});
    arcs.push_back({c, a});
    return make(n + 3, arcs);
}

Quiver saturated_three_cycle() { return make(3, {{1, 2}, {2, 3}, {3, 1}}); }

Quiver example_pair_first() {
    return make(5, {{1, 2}, {2, 5}, {5, 1}, {2, 3}, {4, 3}});
}

Quiver example_pair_first_mutated() {
    return make(5, {{1, 2}, {2, 5}, {5, 1}, {2, 3}, {3, 4}});
}

Quiver example_pair_second() {
    return make(6, {{2, 3}, {2, 1}, {3, 5}, {3, 4}, {5, 6}, {5, 2}});
}

Quiver example_pair_second_mutated() {
    return make(6, {{1, 2}, {2, 5}, {5, 1}, {2, 3}, {3, 4}, {4, 6}});
}

Quiver big_example() {
    return make(20, {{2, 16},  {2, 1},   {3, 2},   {4, 3},  {5, 4},   {5, 6},
                     {6, 10},  {6, 7},   {7, 8},   {8, 14}, {8, 9},   {16, 17},
                     {16, 3},  {10, 5},  {10, 11}, {14, 7}, {11, 12}, {15, 14},
                     {19, 18}, {18, 11}, {12, 18}, {12, 13}, {20, 15}});
}

Quiver d1_fork(int tail) {
    const int c = tail + 1, a = tail + 2, b = tail + 3;
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= tail; ++i) arcs.push_back({i, i + 1});
    arcs.push_back({c, a});
    arcs.push_back({c, b});
    return make(tail + 3, arcs);
}

Quiver d2_core() {
    return make(4, {{1, 2}, {2, 3}, {3, 1}, {2, 4}, {4, 1}});
}

Quiver d2_example(int n, int m) {
    const int d = 1, c = 2, b = 3, a = 4, x1 = 5, y1 = 6;
    std::vector<std::pair<int, int>> arcs{{d, c}, {c, b}, {b, d}, {c, a},
                                          {a, d}, {c, x1}, {x1, y1}, {y1, c}};
    int next = 7;
    int prev = x1;
    for (int j = 2; j <= m + 1; ++j) {
        arcs.push_back({prev, next});
        prev = next++;
    }
    prev = y1;
    for (int j = 2; j <= n + 1; ++j) {
        arcs.push_back({prev, next});
        prev = next++;
    }
    return make(next - 1, arcs);
}

Quiver d3_cycle() { return make(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }

Quiver d3_example(int n, int m, int np, int mp) {
    const int c = 1, b = 2, d = 3, a = 4, x1 = 5, y1 = 6, t1 = 7, z1 = 8;
    std::vector<std::pair<int, int>> arcs{{c, b},  {b, d},   {d, a},   {a, c},
                                          {c, x1}, {x1, y1}, {y1, c},
                                          {t1, d}, {d, z1},  {z1, t1}};
    int next = 9;
    auto tail = [&](int from, int len) {
        int prev = from;
        for (int j = 0; j < len; ++j) {
            arcs.push_back({prev, next});
            prev = next++;
        }
    };
    tail(y1, n);
    tail(x1, m);
    tail(t1, np);
    tail(z1, mp);
    return make(next - 1, arcs);
}

Quiver d4_cycle(int k, unsigned spike_mask) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= k; ++i) arcs.push_back({i, i % k + 1});
    int next = k + 1;
    for (int i = 0; i < k; ++i) {
        if (!(spike_mask & (1u << i))) continue;
        int s = i + 1, t = (i + 1) % k + 1;
        arcs.push_back({t, next});
        arcs.push_back({next, s});
        ++next;
    }
    return make(next - 1, arcs);
}

Quiver e6_tree() {
    return make(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}});
}

}  // namespace gen
}  // namespace ctf
