#pragma once

#include <string>
#include <vector>

#include "ctfrob/quiver.hpp"
#include "ctfrob/relations.hpp"

namespace ctf {

struct ParsedFile {
    Quiver quiver;
    std::vector<Relation> relations;  // explicit `zero`/`comm` lines, if any
};

/// Quiver file format: line-oriented UTF-8 text, '#' starts a comment.
///   vertices N
///   arrow NAME S T
///   zero V1 V2 ... Vk          (k >= 3)
///   comm V1 ... Vk = W1 ... Wm
ParsedFile parse_quiver_file(const std::string& text);

std::string print_quiver(const Quiver& q);
std::string print_relation(const Relation& r);
std::string print_path(const Path& p);

}  // namespace ctf
