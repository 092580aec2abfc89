#pragma once

#include <string>
#include <vector>

#include "ctfrob/quiver.hpp"

namespace ctf {

/// Zero or commutativity relation in vertex-sequence notation.
struct Relation {
    enum class Kind { Zero, Comm };
    Kind kind = Kind::Zero;
    Path first;
    Path second;  // Comm only

    bool operator==(const Relation& o) const {
        return kind == o.kind && first == o.first && second == o.second;
    }
    bool operator<(const Relation& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (first != o.first) return first < o.first;
        return second < o.second;
    }
};

struct BoundQuiver {
    Quiver quiver;
    std::vector<Relation> relations;
};

/// Checks path validity, lengths >= 2 and, for Comm, shared endpoints.
void validate_relation(const Quiver& q, const Relation& r);

struct DWitness;  // classify.hpp
struct E6Match;   // classify.hpp

/// Saturation relations of every 3-cycle: requires membership in M^A.
std::vector<Relation> relations_A(const Quiver& q);
/// Sub-type specific relations plus saturation of 3-cycles in the attached
/// type-A parts.
std::vector<Relation> relations_D(const Quiver& q, const DWitness& w);
/// The matched template's relation list transported along the vertex map.
std::vector<Relation> relations_E6(const Quiver& q, const E6Match& m);

/// Classify and dispatch; explicit relations (from the input file) take
/// precedence and suppress generation. Throws if the quiver is unclassifiable
/// and no explicit relations were given.
BoundQuiver bound_quiver(const Quiver& q, const std::vector<Relation>& explicit_relations = {});

}  // namespace ctf
