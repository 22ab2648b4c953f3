#include "graphcx/zoo.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphcx {

namespace {

int levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  // even permutations of (0,1,2)
  if ((a == 0 && b == 1) || (a == 1 && b == 2) || (a == 2 && b == 0)) return 1;
  return -1;
}

AlgebraSpec<Scalar> odd_identity_spec(Flavor flavor, int dim) {
  AlgebraSpec<Scalar> s;
  s.flavor = flavor;
  s.basis = GradedBasis::uniform(dim, Parity::odd());
  s.inner = Matrix::identity(dim);
  s.max_arity = zoo_max_arity;
  return s;
}

AlgebraSpec<Scalar> so3_spec() {
  AlgebraSpec<Scalar> s = odd_identity_spec(Flavor::l_infinity, 3);
  Tensor<Scalar> d(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        if (int e = levi_civita(a, b, c)) d.set({a, b, c}, Scalar(e));
  s.lower.emplace(2, std::move(d));
  return s;
}

// E_ij has index i*n + j; E_ij E_kl = delta_jk E_il.
Tensor<Scalar> matrix_products(int n, bool commutator) {
  const int dim = n * n;
  Tensor<Scalar> m(3, dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const int x = i * n + j, y = j * n + l, out = i * n + l;
        m.add({x, y, out}, Scalar(1));
        if (commutator) m.add({y, x, out}, Scalar(-1));
      }
  return m;
}

Matrix trace_form(int n) {
  const int dim = n * n;
  Matrix h(dim, dim);
  // tr(E_ij E_kl) = delta_jk delta_il
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i * n + j, j * n + i) = 1;
  return h;
}

}  // namespace

std::vector<std::string> zoo_names() { return {"abelian3", "so3", "m2k", "so3-deformed"}; }

bool is_zoo_name(const std::string& name) {
  const auto names = zoo_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

bool zoo_is_dual(const std::string& name) { return name == "so3-deformed"; }

AlgebraSpec<Scalar> zoo(const std::string& name) {
  if (name == "abelian3") return odd_identity_spec(Flavor::l_infinity, 3);
  if (name == "so3") return so3_spec();
  if (name == "m2k") {
    AlgebraSpec<Scalar> s = eta_transport(matrix_associative(2));
    s.max_arity = zoo_max_arity;
    return s;
  }
  if (zoo_is_dual(name)) throw std::out_of_range("zoo entry '" + name + "' has dual-number constants");
  throw std::out_of_range("unknown zoo entry '" + name + "'");
}

AlgebraSpec<DualScalar> zoo_dual(const std::string& name) {
  if (name == "so3-deformed") return deform(so3_spec(), so3_deformation_cochain());
  return embed_dual(zoo(name));
}

Cochain<Scalar> so3_deformation_cochain() { return structure_cochain(so3_spec()); }

VSideStructure so3_lie() {
  VSideStructure v;
  v.flavor = Flavor::l_infinity;
  v.basis = GradedBasis::uniform(3, Parity::even());
  v.inner = Matrix::identity(3);
  Tensor<Scalar> m(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        if (int e = levi_civita(a, b, c)) m.set({a, b, c}, Scalar(e));
  v.products.emplace(2, std::move(m));
  return v;
}

VSideStructure matrix_associative(int n) {
  VSideStructure v;
  v.flavor = Flavor::a_infinity;
  v.basis = GradedBasis::uniform(n * n, Parity::even());
  v.inner = trace_form(n);
  v.products.emplace(2, matrix_products(n, false));
  return v;
}

VSideStructure matrix_commutator(int n) {
  VSideStructure v;
  v.flavor = Flavor::l_infinity;
  v.basis = GradedBasis::uniform(n * n, Parity::even());
  v.inner = trace_form(n);
  v.products.emplace(2, matrix_products(n, true));
  return v;
}

}  // namespace graphcx
