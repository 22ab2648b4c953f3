#pragma once

// A-infinity and L-infinity structures on the parity reversion W, given by
// lower structure constants d_{j1..j_{n+1}} and an even graded antisymmetric
// inner product k_{ab}.
//
// Index conventions (all indices zero-based):
//   lower tensor  d_{j1..j_{n+1}} = <d_n(e_{j1},..,e_{jn}), e_{j_{n+1}}>
//   map tensor    key (j1..jn, a) holds d^a_{j1..jn}, d_n(e_J) = d^a_J e_a
//   raising form  k^{ab} with sum_b k^{ab} k_{cb} = delta^a_c, so that
//                 d^a_J = sum_b k^{ab} d_{J b} and d_{J b} = sum_a d^a_J k_{ab}.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphcx/graded.hpp"
#include "graphcx/linalg.hpp"
#include "graphcx/tensor.hpp"

namespace graphcx {

enum class Flavor { a_infinity, l_infinity };

std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& text);

template <class F>
struct AlgebraSpec {
  Flavor flavor = Flavor::l_infinity;
  GradedBasis basis;
  Matrix inner;                     // k_{ab}
  std::map<int, Tensor<F>> lower;   // arity n -> rank n+1 lower tensor
  int max_arity = 2;                // arities in [2, max_arity] absent from `lower` are zero

  int dim() const { return basis.dim(); }
  /// Stored constants of the given arity, or nullptr when they vanish.
  const Tensor<F>* constants(int arity) const {
    auto it = lower.find(arity);
    return it == lower.end() || it->second.empty() ? nullptr : &it->second;
  }

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

struct Violation {
  std::string invariant;
  std::string detail;
};

/// Empty iff every invariant of an algebra spec holds.  Dimension mismatches
/// throw StructureError instead.
template <class F>
std::vector<Violation> validate_spec(const AlgebraSpec<F>& spec);

/// Orbit of an index tuple under the flavor's symmetry group (cyclic
/// rotations for A-infinity, all permutations for L-infinity), paired with
/// the sign relating each image to the original entry.  `consistent` is
/// false when some tuple is reached with both signs, which forces the entry
/// to vanish.
struct SymmetryOrbit {
  std::vector<std::pair<Index, int>> images;
  bool consistent = true;
};
SymmetryOrbit symmetry_orbit(const Index& idx, const GradedBasis& basis, Flavor flavor);

/// Violations of the flavor symmetry for one lower tensor.
template <class F>
std::vector<Violation> symmetry_violations(const Tensor<F>& t, const GradedBasis& basis, Flavor flavor,
                                           const std::string& label);

/// k^{ab}; throws NondegeneracyError when k is singular.
Matrix raising_form(const Matrix& inner);

template <class F>
Tensor<F> raise_last_index(const Tensor<F>& lower, const Matrix& inner);
template <class F>
Tensor<F> lower_last_index(const Tensor<F>& upper, const Matrix& inner);

/// d^a_{j1..jn} of the given arity, in map layout.
template <class F>
Tensor<F> raise_last_index(const AlgebraSpec<F>& spec, int arity);

template <class F>
struct RelationViolation {
  int n = 0;       // the relation involves n+1 free indices
  Index indices;   // zero-based
  F value;
};

/// Cyclic form of the A-infinity relations for n = 3..n_max; violations in
/// lexicographic tuple order per n.  Throws std::invalid_argument if
/// n_max < 3 and FlavorError for the wrong flavor.
template <class F>
std::vector<RelationViolation<F>> check_ainf_relations(const AlgebraSpec<F>& spec, int n_max);

/// Unshuffle form of the L-infinity relations for n = 3..n_max.
template <class F>
std::vector<RelationViolation<F>> check_linf_relations(const AlgebraSpec<F>& spec, int n_max);

/// Dispatches on spec.flavor.
template <class F>
std::vector<RelationViolation<F>> check_relations(const AlgebraSpec<F>& spec, int n_max);

/// A cochain stored by its lowered tensors psi~_n (rank n+1) for n >= 1.
template <class F>
struct Cochain {
  Parity parity;
  std::map<int, Tensor<F>> components;

  bool is_zero() const {
    for (const auto& [n, t] : components)
      if (!t.empty()) return false;
    return true;
  }
  /// Drops empty components so that equal cochains compare equal.
  Cochain& prune();

  friend bool operator==(const Cochain& a, const Cochain& b) {
    Cochain x = a, y = b;
    x.prune();
    y.prune();
    if (x.is_zero() && y.is_zero()) return true;
    return x.parity == y.parity && x.components == y.components;
  }
};

/// The cochain d given by the structure constants (odd).
template <class F>
Cochain<F> structure_cochain(const AlgebraSpec<F>& spec);

/// Flavor-symmetry and parity-support violations of a cochain.
template <class F>
std::vector<Violation> cochain_violations(const Cochain<F>& c, const GradedBasis& basis, Flavor flavor);

/// Lowered bracket [a,b]~ of two cochains, computed by composing the raised
/// maps as coderivations (tensor coalgebra for A-infinity, symmetric
/// coalgebra for L-infinity) and lowering the commutator.
template <class F>
Cochain<F> coderivation_bracket(const Cochain<F>& a, const Cochain<F>& b, const AlgebraSpec<F>& spec);

/// D(psi) = [psi, d].
template <class F>
Cochain<F> differential_D(const Cochain<F>& psi, const AlgebraSpec<F>& spec);

/// First-order deformation d + t phi.  phi must be odd, symmetric for the
/// flavor, supported in arities >= 2, and satisfy D(phi) = 0; otherwise
/// FlavorError / StructureError / NotACocycleError.
AlgebraSpec<DualScalar> deform(const AlgebraSpec<Scalar>& spec, const Cochain<Scalar>& phi);

/// The same spec with constants viewed over the dual numbers.
AlgebraSpec<DualScalar> embed_dual(const AlgebraSpec<Scalar>& spec);

/// Structure on V itself: products m_k as map tensors (key (j1..jk, a) holds
/// m^a_{j1..jk}) and an even graded symmetric inner product h.
struct VSideStructure {
  Flavor flavor = Flavor::l_infinity;
  GradedBasis basis;
  std::map<int, Tensor<Scalar>> products;
  Matrix inner;
};

/// Transport to W = Pi V through the sign-twisted identification of tensor
/// (A-infinity) or symmetric (L-infinity) powers.
AlgebraSpec<Scalar> eta_transport(const VSideStructure& v);

/// Sign of the identification V^n <- W^n on e_{j1} (x) .. (x) e_{jn}.
int eta_sign(Flavor flavor, const GradedBasis& w_basis, std::span<const int> indices);

}  // namespace graphcx
