#pragma once

// Graph complexes over the rationals, graded by edge count.

#include <map>
#include <string>
#include <vector>

#include "graphcx/graded.hpp"
#include "graphcx/graph.hpp"
#include "graphcx/linalg.hpp"

namespace graphcx {

struct ComplexParams {
  GraphKind kind = GraphKind::ordinary;
  int chi = -1;       // ordinary: v - e
  int genus = 0;      // ribbon
  int punctures = 0;  // ribbon: number of faces

  static ComplexParams ordinary(int chi) { return {GraphKind::ordinary, chi, 0, 0}; }
  static ComplexParams ribbon(int genus, int punctures) { return {GraphKind::ribbon, 0, genus, punctures}; }

  /// v - e of every generator.
  int euler() const { return kind == GraphKind::ordinary ? chi : 2 - 2 * genus - punctures; }
  /// Generators exist only for e <= -3 * euler() (all vertices trivalent).
  int complete_max_edges() const { return -3 * euler(); }
  std::string describe() const;

  friend bool operator==(const ComplexParams&, const ComplexParams&) = default;
};

/// Every canonical graph with e edges, zero graphs included.  Cached.
const std::vector<CanonicalGraph>& graphs_at(const ComplexParams& params, int edges);
/// The basis of the chain group C_e: graphs with nonzero orientation sign.
std::vector<CanonicalGraph> generators(const ComplexParams& params, int edges);

template <class F>
struct Chain {
  std::map<std::string, F> terms;  // canonical id -> coefficient, never zero

  void add(const std::string& id, const F& value) {
    if (graphcx::is_zero(value)) return;
    auto [it, inserted] = terms.try_emplace(id, value);
    if (!inserted) {
      it->second += value;
      if (graphcx::is_zero(it->second)) terms.erase(it);
    }
  }
  F coefficient(const std::string& id) const {
    auto it = terms.find(id);
    return it == terms.end() ? F() : it->second;
  }
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Sum over non-loop edges of the signed canonical contractions; zero
/// graphs are dropped.
Chain<Scalar> boundary(const OrientedGraph& g);

/// Linear extension over canonical ids.
template <class F>
Chain<F> boundary(const Chain<F>& c);

/// Edge count of the graph behind a canonical id.
int edge_count_of(const std::string& id);

struct BoundaryMatrix {
  std::vector<std::string> rows;  // generators with e - 1 edges
  std::vector<std::string> cols;  // generators with e edges
  Matrix entries;                 // rows.size() x cols.size()
};

BoundaryMatrix boundary_matrix(const ComplexParams& params, int edges);

struct HomologyDegree {
  int edges = 0;
  int dimension = 0;      // dim C_e
  int rank_out = 0;       // rank of the boundary C_e -> C_{e-1}
  int rank_in = 0;        // rank of the boundary C_{e+1} -> C_e
  int betti = 0;
  bool truncated = false; // C_{e+1} lies beyond max_edges, so rank_in is a lower bound of 0
};

std::vector<HomologyDegree> homology_ranks(const ComplexParams& params, int max_edges);

}  // namespace graphcx
