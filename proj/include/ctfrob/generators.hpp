#pragma once

#include "ctfrob/quiver.hpp"

namespace ctf {
namespace gen {

/// 1 -> 2 -> ... -> n; bit i of `mask` reverses the arrow between i+1 and i+2.
Quiver linear_A(int n, unsigned mask = 0);

/// Tail 1 -> ... -> n -> a plus a saturated-cycle triangle a -> b -> c -> a,
/// with a = n+1, b = n+2, c = n+3.
Quiver lineal_freecycle(int n);

Quiver saturated_three_cycle();

/// The mutation-equivalent pair with dimensions 4 and 6.
Quiver example_pair_first();
Quiver example_pair_first_mutated();
/// The mutation-equivalent pair with dimensions 0 and 7.
Quiver example_pair_second();
Quiver example_pair_second_mutated();
/// Twenty vertices, four saturated triangles, dimension 0.
Quiver big_example();

/// Fork c -> a, c -> b preceded by a linear tail 1 -> ... -> tail -> c.
/// Vertices: c = tail+1, a = tail+2, b = tail+3. Requires tail >= 1.
Quiver d1_fork(int tail);

/// The bare sub-type II core: mu: d -> c shared by triangles through b and a.
/// d = 1, c = 2, b = 3, a = 4.
Quiver d2_core();

/// Core plus a triangle at c carrying an x-tail of length m and a y-tail of
/// length n. d = 1, c = 2, b = 3, a = 4, x1 = 5, y1 = 6, x-tail 7.., y-tail
/// after it.
Quiver d2_example(int n, int m);

/// Cyclically oriented 4-cycle 1 -> 2 -> 3 -> 4 -> 1.
Quiver d3_cycle();

/// 4-cycle c -> b -> d -> a -> c with a triangle at c (x/y tails of lengths
/// m/n) and a triangle at d (z/t tails of lengths mp/np).
/// c = 1, b = 2, d = 3, a = 4, x1 = 5, y1 = 6, t1 = 7, z1 = 8.
Quiver d3_example(int n, int m, int np, int mp);

/// Central cycle 1 -> 2 -> ... -> k -> 1; bit i of `spike_mask` attaches a
/// spike vertex to the arrow i+1 -> i+2.
Quiver d4_cycle(int k, unsigned spike_mask = 0);

/// An orientation of the E6 Dynkin tree.
Quiver e6_tree();

}  // namespace gen
}  // namespace ctf
