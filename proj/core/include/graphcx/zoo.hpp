#pragma once

// Built-in algebras.

#include <string>
#include <vector>

#include "graphcx/algebra.hpp"

namespace graphcx {

/// abelian3, so3, m2k, so3-deformed.
std::vector<std::string> zoo_names();
bool is_zoo_name(const std::string& name);
/// True for entries whose constants live over the dual numbers.
bool zoo_is_dual(const std::string& name);

/// Throws std::out_of_range for unknown names and for dual entries.
AlgebraSpec<Scalar> zoo(const std::string& name);
/// Every entry, embedded over the dual numbers where needed.
AlgebraSpec<DualScalar> zoo_dual(const std::string& name);

/// The deformation cochain used by so3-deformed: so3's own structure cochain.
Cochain<Scalar> so3_deformation_cochain();

/// V-side sources.  The matrix algebras use the basis E_11, E_12, .., E_nn
/// and the trace form tr(XY).
VSideStructure so3_lie();
VSideStructure matrix_associative(int n);
VSideStructure matrix_commutator(int n);

/// Arity bound assigned to zoo specs; valences up to this + 1 evaluate (to
/// zero when no constants are stored).
inline constexpr int zoo_max_arity = 12;

}  // namespace graphcx
