#pragma once

// State sums Z(Gamma): one lower tensor d per vertex, one raising-form tensor
// k^{tail head} per edge, contracted with Koszul signs.

#include <span>
#include <string>
#include <vector>

#include "graphcx/algebra.hpp"
#include "graphcx/complex.hpp"
#include "graphcx/graph.hpp"

namespace graphcx {

enum class SlotKind { lower, upper };

struct Slot {
  SlotKind kind = SlotKind::lower;
  int owner = 0;      // vertex (lower) or edge (upper)
  int position = 0;   // within the owner
  int half_edge = 0;  // the index carried by the slot
};

/// Ordered slots and the perfect matching of upper with lower slots.
struct SlotWord {
  std::vector<Slot> slots;
  std::vector<int> mate;  // mate[i] = slot paired with slot i

  /// Vertex lower slots in label and local order, then per edge the upper
  /// slots (tail, head).
  static SlotWord of_graph(const OrientedGraph& g);
  /// "^a ^b _a _b": '^' marks an upper slot, '_' a lower one; slots with the
  /// same symbol are paired.  Symbol i (in order of first use) is half-edge i.
  static SlotWord parse(const std::string& pattern);

  int size() const { return static_cast<int>(slots.size()); }
  /// Throws StructureError unless mate is a perfect upper/lower matching.
  void validate() const;
};

/// Contract pairs one at a time in `order` (upper slot positions), moving each
/// lower slot to just after its upper slot; every symbol jumped contributes
/// (-1)^{pq}.  `parities` is per slot; paired slots must agree.
int contraction_sign(const SlotWord& word, std::span<const Parity> parities, const std::vector<int>& order);
/// Pairs in the order of their upper slots.
int contraction_sign(const SlotWord& word, std::span<const Parity> parities);
/// Parities from basis indices per half-edge.
int contraction_sign(const SlotWord& word, const std::vector<int>& state, const GradedBasis& basis);

/// Precomputed form of contraction_sign for one word: the sign of a state is
/// (-1)^{sum_{h <= h'} crossing(h, h') p(h) p(h')}.
class CrossingTable {
 public:
  explicit CrossingTable(const SlotWord& word);
  int sign(const std::vector<int>& state, const GradedBasis& basis) const;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> crossing_;  // n x n, upper triangle used
};

/// Z(g).  Ribbon graphs need an A-infinity spec and ordinary graphs an
/// L-infinity one (FlavorError otherwise).  A vertex of valence n uses the
/// arity n-1 constants; valences beyond spec.max_arity + 1 raise
/// UnsupportedValenceError.
template <class F>
F partition_value(const OrientedGraph& g, const AlgebraSpec<F>& spec);

struct ExpressionFactor {
  char tensor = 'd';            // 'd' vertex, 'k' edge
  std::vector<int> half_edges;  // index slots in order
};

struct Expression {
  std::vector<ExpressionFactor> factors;
  /// "d_{abc} d_{def} k^{ad} k^{be} k^{cf}"; half-edge i is letter 'a'+i,
  /// or "h<i>" with space separators once there are more than 26.
  std::string to_string() const;
};

/// The contraction pattern of g; fragments with external half-edges allowed.
Expression expression(const OrientedGraph& g);

enum class CycleNormalization {
  automorphism,  // coefficient Z(Gamma) / |Aut(Gamma)|
  literal,       // coefficient Z(Gamma)
};

struct CycleOptions {
  CycleNormalization normalization = CycleNormalization::automorphism;
  int threads = 1;
};

/// sum over nonzero generators with e <= max_edges of the coefficient of each
/// canonical representative.
template <class F>
Chain<F> cycle_chain(const AlgebraSpec<F>& spec, const ComplexParams& params, int max_edges,
                     const CycleOptions& options = {});

template <class F>
struct BoundaryDegree {
  int edges = 0;        // degree of the boundary terms
  Chain<F> boundary;
  bool checked = true;  // false where generators one edge up were not all included
};

template <class F>
struct CycleReport {
  bool verified = true;
  std::vector<BoundaryDegree<F>> degrees;
  std::vector<std::string> warnings;
};

/// Degree-wise boundary of z.  verified iff the boundary vanishes in every
/// degree e-1 with e <= max_edges; degrees whose source lies above max_edges
/// are reported unchecked with a warning.
template <class F>
CycleReport<F> verify_cycle(const Chain<F>& z, const ComplexParams& params, int max_edges);

}  // namespace graphcx
