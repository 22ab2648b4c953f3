#pragma once

// Text formats.
//
// Algebra file (one directive per line, '#' starts a comment):
//   flavor l-infinity | a-infinity
//   dim 3
//   parities 1 1 1
//   inner 1 0 0          (dim rows)
//   max-arity 4          optional; default: highest arity listed, at least 2
//   completion none      optional; store entries as written
//   d 2 : 1 2 3 = 1      one-based indices, rational or dual value (1/2+3t)
// Missing symmetric images are completed; an image already set to another
// value is a ParseError.
//
// Graph file:
//   kind ribbon | ordinary
//   v 0 1 2              half-edges at the next vertex, in local/cyclic order
//   e 0 3                tail and head half-edge of the next edge
//
// Chain file: lines "<coefficient> <canonical id>".

#include <iosfwd>
#include <string>
#include <string_view>

#include "graphcx/algebra.hpp"
#include "graphcx/complex.hpp"
#include "graphcx/graph.hpp"

namespace graphcx {

struct AlgebraFile {
  AlgebraSpec<DualScalar> spec;
  bool dual = false;  // some value has a nonzero t part
};

AlgebraFile parse_algebra(std::string_view text);
AlgebraFile read_algebra_file(const std::string& path);

/// Throws StructureError when some constant has a nonzero t part.
AlgebraSpec<Scalar> to_scalar(const AlgebraSpec<DualScalar>& spec);

/// One entry per symmetry orbit (its lexicographically least tuple); specs
/// violating their symmetry are written in full under "completion none".
std::string serialize_algebra(const AlgebraSpec<Scalar>& spec);
std::string serialize_algebra(const AlgebraSpec<DualScalar>& spec);

DualScalar parse_dual(const std::string& text);

OrientedGraph parse_graph(std::string_view text);
OrientedGraph read_graph_file(const std::string& path);
std::string serialize_graph(const OrientedGraph& g);

template <class F>
std::string serialize_chain(const Chain<F>& c);
Chain<DualScalar> parse_chain(std::string_view text);

/// Coordinate form: header lines "% rows R cols C", "% row i <id>",
/// "% col j <id>", then "i j value" per nonzero entry, all one-based.
std::string serialize_matrix(const BoundaryMatrix& m);

std::string read_text_file(const std::string& path);

}  // namespace graphcx
