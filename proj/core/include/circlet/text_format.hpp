#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "circlet/circulant.hpp"

namespace circlet {

// Line-based text documents:
//
//   # comment
//   n 8
//   tour 1 2 3 4 5 6 7 8
//   e 1 5 1/1
//
// A document holds an instance alone, an instance with one tour, or an
// instance with edge weights. `n` may be omitted for a tour (it is then the
// tour length) but is required before any `e` line.
using Document = std::variant<Instance, Tour, FractionalPoint>;

// Throws ParseError carrying the 1-based line number.
Document parse_document(std::string_view text);

// Bit-exact serializations: canonical tour order, edges sorted by (i, j),
// weights written as p/q in lowest terms, zero weights omitted.
std::string serialize(const Instance& inst);
std::string serialize(const Tour& tour);
std::string serialize(const FractionalPoint& x);
std::string serialize(const Document& doc);

}  // namespace circlet
