#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctf {

/// Error thrown by parsing and by operations whose preconditions fail.
struct QuiverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

/// A path given by the sequence of vertices it traverses. Quivers here are
/// schurian (at most one arrow per ordered vertex pair), so this is
/// unambiguous. A single vertex denotes the stationary path.
using Path = std::vector<int>;

inline int path_length(const Path& p) { return static_cast<int>(p.size()) - 1; }

/// Finite directed graph on vertices 1..n with no loops, no 2-cycles and no
/// parallel arrows.
class Quiver {
public:
    Quiver() = default;
    // Validates all invariants; throws QuiverError on violation.
    Quiver(int num_vertices, std::vector<Arrow> arrows);

    int num_vertices() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_vertex(int v) const { return v >= 1 && v <= n_; }
    bool has_arrow(int s, int t) const;
    /// Index into arrows(), or -1.
    int arrow_index(int s, int t) const;

    const std::vector<int>& out_neighbors(int v) const;
    const std::vector<int>& in_neighbors(int v) const;
    int valency(int v) const;
    bool is_source(int v) const { return in_neighbors(v).empty(); }
    bool is_sink(int v) const { return out_neighbors(v).empty(); }

    bool is_path(const Path& p) const;
    bool connected() const;
    bool acyclic() const;

    /// Each oriented 3-cycle once, rotated so the smallest vertex comes first.
    std::vector<std::array<int, 3>> three_cycles() const;
    bool on_three_cycle(int s, int t) const;  // arrow s->t lies on some 3-cycle

    /// All simple directed cycles, each rotated to start at its smallest
    /// vertex, sorted by (length, vertex sequence).
    std::vector<std::vector<int>> simple_cycles() const;

    bool operator==(const Quiver& o) const;

private:
    int n_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<std::vector<int>> arrow_at_;  // arrow_at_[s][t] index or -1
};

/// Fomin-Zelevinsky mutation at vertex k. Throws on unknown vertex and if a
/// parallel arrow would be created (never happens inside Dynkin classes).
Quiver mutate(const Quiver& q, int k);

/// Vertex bijection realizing a directed-graph isomorphism q1 -> q2.
std::optional<std::vector<int>> is_isomorphic(const Quiver& q1, const Quiver& q2);

/// Deterministic canonical encoding; equal iff isomorphic.
std::string canonical_form(const Quiver& q);

/// Breadth-first closure under mutation, deduplicated up to isomorphism.
/// Throws QuiverError once more than max_size classes have been found.
std::vector<Quiver> enumerate_mutation_class(const Quiver& q, std::size_t max_size);

}  // namespace ctf
