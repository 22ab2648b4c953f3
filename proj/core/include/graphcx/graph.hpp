#pragma once

// Oriented half-edge multigraphs, ordinary and ribbon.
//
// Half-edges are 0..2e-1.  vertices[i] lists the half-edges at vertex i (its
// label is i); for ribbon graphs the list is the cyclic order, for ordinary
// graphs it is an arbitrary but fixed local order.  edges[k] = (tail, head).
// The orientation is the vertex order together with the arrows.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace graphcx {

enum class GraphKind { ordinary, ribbon };

std::string to_string(GraphKind kind);
GraphKind parse_graph_kind(const std::string& text);

struct OrientedGraph {
  GraphKind kind = GraphKind::ordinary;
  std::vector<std::vector<int>> vertices;
  std::vector<std::array<int, 2>> edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int half_edge_count() const { return 2 * edge_count(); }

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;
};

/// Per-half-edge lookup tables.
struct Incidence {
  std::vector<int> vertex_of;
  std::vector<int> position;  // index within its vertex list
  std::vector<int> partner;
  std::vector<int> edge_of;
  std::vector<int> next;      // successor in the vertex list, cyclically

  explicit Incidence(const OrientedGraph& g);
};

struct StructureRules {
  bool trivalent = true;   // every vertex has valence >= 3
  bool connected = true;
  bool external = false;   // half-edges on edges may be missing from every vertex (fragments)
};

/// Throws StructureError unless half-edges, vertices and edges are
/// consistent under the given rules.
void validate_structure(const OrientedGraph& g, StructureRules rules = {});

bool is_connected(const OrientedGraph& g);
bool has_loop(const OrientedGraph& g);

/// Number of boundary cycles: orbits of h -> next(partner(h)).  Ribbon only.
int faces(const OrientedGraph& g);
/// From v - e + faces = 2 - 2 genus.  Ribbon only.
int genus(const OrientedGraph& g);

struct CanonicalGraph {
  std::string id;                // parseable, total-order-minimal encoding
  OrientedGraph representative;  // the graph the id encodes, sign +1
  int sign = 0;                  // input = sign * representative; 0 for zero graphs
  std::uint64_t automorphisms = 1;  // half-edge automorphisms of the underlying graph
};

/// Canonical form and orientation sign.  Graphs with a loop, and graphs with
/// an orientation-reversing automorphism, get sign 0.
/// Throws StructureError unless g is connected with every valence >= 3.
CanonicalGraph canonicalize(const OrientedGraph& g);

/// Rebuilds the canonical representative from its id; throws ParseError.
OrientedGraph graph_from_id(const std::string& id);

/// Contracts a non-loop edge: the head is moved to the last label (a
/// transposition, sign -1, if needed) and merged into the tail, whose list
/// becomes its remaining half-edges after the tail half-edge followed by
/// the head's remaining ones after the head half-edge.  Half-edge ids are
/// compacted in order.  Returns the graph and the sign acquired.
/// Throws NotContractibleError for loops.
std::pair<OrientedGraph, int> contract_edge(const OrientedGraph& g, int edge);

/// Inverse of contract_edge on the last edge: splits `vertex`, moving the
/// half-edges `moved` (in that order) to a new last vertex joined to the old
/// one by a new edge whose arrow points to the new vertex.  For ribbon
/// graphs `moved` must be a contiguous arc of the cyclic order.
OrientedGraph split_vertex(const OrientedGraph& g, int vertex, const std::vector<int>& moved);

/// The same oriented graph with vertex i relabeled perm[i].
OrientedGraph relabel_vertices(const OrientedGraph& g, const std::vector<int>& perm);
OrientedGraph flip_arrow(const OrientedGraph& g, int edge);
OrientedGraph rotate_vertex(const OrientedGraph& g, int vertex, int steps);
OrientedGraph permute_edges(const OrientedGraph& g, const std::vector<int>& order);

/// All connected multigraphs with min valence 3, v - e = chi and
/// e <= max_edges, sorted by (edge count, id).  Zero graphs keep sign 0.
std::vector<CanonicalGraph> enumerate_ordinary(int chi, int max_edges, bool loop_free = false);
std::vector<CanonicalGraph> enumerate_ordinary_at(int chi, int edges, bool loop_free = false);

/// All connected ribbon graphs with min valence 3, `punctures` faces and
/// v - e + faces = 2 - 2 genus, e <= max_edges.
std::vector<CanonicalGraph> enumerate_ribbon(int genus, int punctures, int max_edges);
std::vector<CanonicalGraph> enumerate_ribbon_at(int genus, int punctures, int edges);

}  // namespace graphcx
