#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctfrob/quiver.hpp"
#include "ctfrob/relations.hpp"

namespace ctf {

/// Outcome of the mutation-class-of-A membership test; on failure `reason`
/// names the violated condition and a witness vertex/cycle.
struct ACheck {
    bool ok = false;
    std::string reason;
};

/// The four conditions cutting out the mutation class of A_k (plus
/// connectedness, which is a precondition and raises instead).
ACheck is_mutation_class_A(const Quiver& q);

/// Vertices of valency 1, or of valency 2 lying on a 3-cycle.
std::vector<int> connecting_vertices(const Quiver& q);

/// Structural witness for type D sub-types I-IV.
struct DWitness {
    int subtype = 0;  // 1..4
    int a = 0, b = 0, c = 0, d = 0;
    std::vector<int> central;  // subtype IV: central cycle in arrow order
    std::vector<int> spike;    // subtype IV: spike vertex per central arrow, 0 if none
};

std::optional<DWitness> classify_D(const Quiver& q);

/// One entry of the 21-row table covering the E6 mutation class.
struct E6Template {
    int index = 0;                               // 1..21
    std::vector<std::pair<int, int>> arrows;     // directed
    std::vector<std::pair<int, int>> edges;      // undirected, any orientation
    std::vector<Relation> relations;
};

const std::vector<E6Template>& e6_templates();
/// The template table serialized in the quiver file format (one `template N`
/// section per entry, `edge` lines for undirected edges).
std::string e6_template_data_text();

struct E6Match {
    int template_index = 0;
    std::vector<int> map;  // template vertex -> quiver vertex (1-based)
    std::vector<std::pair<int, int>> orientations;  // chosen direction per undirected edge
};

std::optional<E6Match> match_E6(const Quiver& q);

struct ClassLabel {
    enum class Tag { TypeA, TypeD_I, TypeD_II, TypeD_III, TypeD_IV, TypeE6, Unknown };
    Tag tag = Tag::Unknown;
    bool hereditary = false;
    std::optional<DWitness> d;
    std::optional<E6Match> e6;
};

std::string to_string(ClassLabel::Tag t);

/// TypeA, else TypeD_x, else TypeE6, else Unknown. Throws on disconnected
/// input.
ClassLabel classify(const Quiver& q);

}  // namespace ctf
