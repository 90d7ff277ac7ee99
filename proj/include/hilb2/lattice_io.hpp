#pragma once

#include <iosfwd>
#include <string>

#include "hilb2/lattice.hpp"

namespace hilb2 {

// Plain structured-text lattice format, strict on parse:
//
//   rank 2
//   gram
//   6 1
//   1 -2
//   ample 1 0
//   labels L C
//
// 'labels' is optional. '#' starts a comment line. serialize() emits the
// canonical form above, which parses back bit-exactly.
PicLattice parse_lattice(std::istream& in);
PicLattice parse_lattice_string(const std::string& text);
PicLattice load_lattice_file(const std::string& path);
std::string serialize_lattice(const PicLattice& lat);

}  // namespace hilb2
