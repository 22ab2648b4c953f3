#include "graphcx/algebra.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "graphcx/errors.hpp"

namespace graphcx {

namespace {

template <class F>
void add_signed(F& acc, int sign, const F& v) {
  if (sign > 0)
    acc += v;
  else
    acc -= v;
}

std::string format_indices(const Index& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? " " : "") << idx[i] + 1;
  return os.str();
}

Index slice(const Index& idx, std::size_t from, std::size_t to) {
  return Index(idx.begin() + static_cast<std::ptrdiff_t>(from), idx.begin() + static_cast<std::ptrdiff_t>(to));
}

Index concat(std::initializer_list<const Index*> parts) {
  Index out;
  for (const Index* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

Parity parity_of(const GradedBasis& b, const Index& idx, std::size_t from, std::size_t to) {
  Parity p;
  for (std::size_t i = from; i < to; ++i) p = p + b.parity(idx[i]);
  return p;
}

// Generators of the symmetry group acting on one index tuple, with the sign
// relating the image entry to the original one.
std::vector<std::pair<Index, int>> generator_images(const Index& idx, const GradedBasis& basis, Flavor flavor) {
  std::vector<std::pair<Index, int>> out;
  const std::size_t n = idx.size();
  if (n < 2) return out;
  if (flavor == Flavor::a_infinity) {
    // d_{j_N, j_1 .. j_{N-1}} = (-1)^{p(j_N)(p(j_1)+..+p(j_{N-1}))} d_{j_1 .. j_N}
    Index rot;
    rot.reserve(n);
    rot.push_back(idx.back());
    rot.insert(rot.end(), idx.begin(), idx.end() - 1);
    const Parity s = basis.parity(idx.back()) * parity_of(basis, idx, 0, n - 1);
    out.emplace_back(std::move(rot), sign_of(s));
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Index sw = idx;
      std::swap(sw[i], sw[i + 1]);
      out.emplace_back(std::move(sw), sign_of(basis.parity(idx[i]) * basis.parity(idx[i + 1])));
    }
  }
  return out;
}

template <class F>
const char* symmetry_name(Flavor flavor) {
  return flavor == Flavor::a_infinity ? "cyclic-symmetry" : "graded-symmetry";
}

void check_spec_structure(int dim, const Matrix& inner) {
  if (inner.rows() != dim || inner.cols() != dim)
    throw StructureError("inner product is " + std::to_string(inner.rows()) + "x" + std::to_string(inner.cols()) +
                         " but the basis has dimension " + std::to_string(dim));
}

template <class F>
void check_tensor_shape(const Tensor<F>& t, int arity, int dim, const std::string& what) {
  if (t.rank() != arity + 1 || t.dim() != dim)
    throw StructureError(what + " of arity " + std::to_string(arity) + " must have " + std::to_string(arity + 1) +
                         " indices over dimension " + std::to_string(dim));
}

template <class F>
std::map<int, Tensor<F>> raise_all(const std::map<int, Tensor<F>>& lower, const Matrix& inner) {
  std::map<int, Tensor<F>> out;
  for (const auto& [n, t] : lower)
    if (!t.empty()) out.emplace(n, raise_last_index(t, inner));
  return out;
}

template <class F>
std::map<int, Tensor<F>> lower_all(const std::map<int, Tensor<F>>& maps, const Matrix& inner) {
  std::map<int, Tensor<F>> out;
  for (const auto& [n, t] : maps) {
    Tensor<F> low = lower_last_index(t, inner);
    if (!low.empty()) out.emplace(n, std::move(low));
  }
  return out;
}

// Pre-Lie composition a o b of raised maps on the tensor coalgebra:
// (a o b)(w_1..w_n) = sum (-1)^{(w_1+..+w_i)|b|} a(w_1..w_i, b(w_{i+1}..w_{i+k}), ..).
template <class F>
std::map<int, Tensor<F>> compose_tensor(const std::map<int, Tensor<F>>& a, const std::map<int, Tensor<F>>& b,
                                        Parity b_parity, const GradedBasis& basis) {
  const int dim = basis.dim();
  std::map<int, Tensor<F>> out;
  for (const auto& [k, bt] : b) {
    std::vector<std::vector<std::pair<Index, const F*>>> by_output(static_cast<std::size_t>(dim));
    for (const auto& [key, v] : bt.entries())
      by_output[static_cast<std::size_t>(key.back())].emplace_back(slice(key, 0, key.size() - 1), &v);
    for (const auto& [l, at] : a) {
      const int n = l + k - 1;
      auto& res = out.try_emplace(n, n + 1, dim).first->second;
      for (const auto& [key, av] : at.entries()) {
        const std::size_t inputs = key.size() - 1;
        Parity prefix;
        for (std::size_t i = 0; i < inputs; ++i) {
          const int sign = sign_of(prefix * b_parity);
          const Index pre = slice(key, 0, i);
          const Index post = slice(key, i + 1, key.size());
          for (const auto& [x_inputs, bv] : by_output[static_cast<std::size_t>(key[i])]) {
            F term = av;
            term *= *bv;
            res.add(concat({&pre, &x_inputs, &post}), sign > 0 ? term : F(-term));
          }
          prefix = prefix + basis.parity(key[i]);
        }
      }
    }
  }
  return out;
}

// Pre-Lie composition on the symmetric coalgebra:
// (a o b)(w_1..w_n) = sum_{sigma in Sh(k, n-k)} eps(sigma) a(b(w_sigma(1..k)), w_sigma(k+1..n)).
template <class F>
std::map<int, Tensor<F>> compose_symmetric(const std::map<int, Tensor<F>>& a, const std::map<int, Tensor<F>>& b,
                                           const GradedBasis& basis) {
  const int dim = basis.dim();
  std::map<int, Tensor<F>> out;
  for (const auto& [k, bt] : b) {
    std::vector<std::vector<std::pair<Index, const F*>>> by_output(static_cast<std::size_t>(dim));
    for (const auto& [key, v] : bt.entries())
      by_output[static_cast<std::size_t>(key.back())].emplace_back(slice(key, 0, key.size() - 1), &v);
    for (const auto& [l, at] : a) {
      const int n = l + k - 1;
      const auto shuffles = unshuffles(k, n - k);
      auto& res = out.try_emplace(n, n + 1, dim).first->second;
      for (const auto& [key, av] : at.entries()) {
        const Index rest = slice(key, 1, key.size() - 1);
        const int c = key.back();
        for (const auto& [x_inputs, bv] : by_output[static_cast<std::size_t>(key[0])]) {
          const Index seq = concat({&x_inputs, &rest});
          F term = av;
          term *= *bv;
          for (const auto& sigma : shuffles) {
            Index j(seq.size());
            for (int t = 0; t < n; ++t) j[static_cast<std::size_t>(sigma(t))] = seq[static_cast<std::size_t>(t)];
            std::vector<Parity> pj;
            pj.reserve(j.size());
            for (int v : j) pj.push_back(basis.parity(v));
            const int eps = koszul_sign(sigma, pj);
            j.push_back(c);
            res.add(j, eps > 0 ? term : F(-term));
          }
        }
      }
    }
  }
  return out;
}

template <class F>
Tensor<F> dual_tensor(const Tensor<Scalar>& t) {
  Tensor<F> out(t.rank(), t.dim());
  for (const auto& [k, v] : t.entries()) out.set(k, F(v));
  return out;
}

}  // namespace

std::string to_string(Flavor f) { return f == Flavor::a_infinity ? "a-infinity" : "l-infinity"; }

Flavor parse_flavor(const std::string& text) {
  if (text == "a-infinity" || text == "ainf" || text == "A-infinity") return Flavor::a_infinity;
  if (text == "l-infinity" || text == "linf" || text == "L-infinity") return Flavor::l_infinity;
  throw FlavorError("unknown flavor '" + text + "'");
}

SymmetryOrbit symmetry_orbit(const Index& idx, const GradedBasis& basis, Flavor flavor) {
  SymmetryOrbit orbit;
  std::map<Index, int> seen{{idx, 1}};
  std::deque<Index> queue{idx};
  while (!queue.empty()) {
    Index cur = std::move(queue.front());
    queue.pop_front();
    const int cur_sign = seen[cur];
    for (auto& [img, s] : generator_images(cur, basis, flavor)) {
      const int sign = cur_sign * s;
      auto [it, inserted] = seen.try_emplace(img, sign);
      if (inserted)
        queue.push_back(img);
      else if (it->second != sign)
        orbit.consistent = false;
    }
  }
  orbit.images.assign(seen.begin(), seen.end());
  return orbit;
}

template <class F>
std::vector<Violation> symmetry_violations(const Tensor<F>& t, const GradedBasis& basis, Flavor flavor,
                                           const std::string& label) {
  std::vector<Violation> out;
  for (const auto& [idx, v] : t.entries()) {
    for (const auto& [img, s] : generator_images(idx, basis, flavor)) {
      F expected = v;
      if (s < 0) expected = -expected;
      if (!(t.get(img) == expected)) {
        out.push_back({symmetry_name<F>(flavor), label + "_{" + format_indices(idx) + "} = " + to_string(v) +
                                                      " but " + label + "_{" + format_indices(img) +
                                                      "} = " + to_string(t.get(img)) + " (expected " +
                                                      to_string(expected) + ")"});
      }
    }
  }
  return out;
}

template <class F>
std::vector<Violation> validate_spec(const AlgebraSpec<F>& spec) {
  const int dim = spec.dim();
  check_spec_structure(dim, spec.inner);
  for (const auto& [n, t] : spec.lower) {
    if (n < 2) throw StructureError("lower constants must have arity >= 2 (d_1 is required to vanish)");
    if (n > spec.max_arity)
      throw StructureError("constants of arity " + std::to_string(n) + " exceed max arity " +
                           std::to_string(spec.max_arity));
    check_tensor_shape(t, n, dim, "lower constant tensor");
  }

  std::vector<Violation> out;
  if (!inverse(spec.inner)) out.push_back({"nondegenerate", "inner product matrix is singular"});
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      const Scalar& kab = spec.inner(a, b);
      const Parity pa = spec.basis.parity(a), pb = spec.basis.parity(b);
      if (!is_zero(kab) && pa != pb)
        out.push_back({"inner-even", "k_{" + std::to_string(a + 1) + " " + std::to_string(b + 1) +
                                         "} nonzero between basis elements of different parity"});
      Scalar expected = kab;
      if (sign_of(pa * pb + Parity::odd()) < 0) expected = -expected;
      if (a <= b && spec.inner(b, a) != expected)
        out.push_back({"inner-graded-antisymmetric", "k_{" + std::to_string(b + 1) + " " + std::to_string(a + 1) +
                                                         "} != (-1)^{p_a p_b + 1} k_{" + std::to_string(a + 1) +
                                                         " " + std::to_string(b + 1) + "}"});
    }
  for (const auto& [n, t] : spec.lower) {
    const std::string label = "d" + std::to_string(n);
    for (const auto& [idx, v] : t.entries())
      if (!spec.basis.total(idx).is_odd())
        out.push_back({"odd-constants", label + "_{" + format_indices(idx) + "} nonzero on an even index tuple"});
    auto sym = symmetry_violations(t, spec.basis, spec.flavor, label);
    out.insert(out.end(), sym.begin(), sym.end());
  }
  return out;
}

Matrix raising_form(const Matrix& inner) {
  auto inv = inverse(inner);
  if (!inv) throw NondegeneracyError("inner product is degenerate");
  // sum_b k^{ab} k_{cb} = delta  =>  k^{..} = (k^{-1})^T
  return inv->transposed();
}

template <class F>
Tensor<F> raise_last_index(const Tensor<F>& lower, const Matrix& inner) {
  const Matrix up = raising_form(inner);
  Tensor<F> out(lower.rank(), lower.dim());
  for (const auto& [key, v] : lower.entries()) {
    const int b = key.back();
    Index k2 = key;
    for (int a = 0; a < up.rows(); ++a) {
      if (is_zero(up(a, b))) continue;
      k2.back() = a;
      out.add(k2, v * up(a, b));
    }
  }
  return out;
}

template <class F>
Tensor<F> lower_last_index(const Tensor<F>& upper, const Matrix& inner) {
  Tensor<F> out(upper.rank(), upper.dim());
  for (const auto& [key, v] : upper.entries()) {
    const int a = key.back();
    Index k2 = key;
    for (int b = 0; b < inner.cols(); ++b) {
      if (is_zero(inner(a, b))) continue;
      k2.back() = b;
      out.add(k2, v * inner(a, b));
    }
  }
  return out;
}

template <class F>
Tensor<F> raise_last_index(const AlgebraSpec<F>& spec, int arity) {
  const Tensor<F>* t = spec.constants(arity);
  if (!t) {
    raising_form(spec.inner);  // still reports degeneracy
    return Tensor<F>(arity + 1, spec.dim());
  }
  return raise_last_index(*t, spec.inner);
}

namespace {

template <class F>
struct RelationTerms {
  std::map<int, Tensor<F>> up;
  std::map<int, const Tensor<F>*> low;
};

template <class F>
RelationTerms<F> relation_terms(const AlgebraSpec<F>& spec) {
  RelationTerms<F> terms;
  for (const auto& [n, t] : spec.lower) {
    if (t.empty()) continue;
    terms.low.emplace(n, &t);
    terms.up.emplace(n, raise_last_index(t, spec.inner));
  }
  return terms;
}

// sum_a d^a_X d_{a Y}
template <class F>
F contract_pair(const Tensor<F>& up, const Tensor<F>& low, Index x, Index y, int dim) {
  F acc;
  x.push_back(0);
  y.insert(y.begin(), 0);
  for (int a = 0; a < dim; ++a) {
    x.back() = a;
    const F* u = up.find(x);
    if (!u) continue;
    y.front() = a;
    const F* l = low.find(y);
    if (!l) continue;
    F term = *u;
    term *= *l;
    acc += term;
  }
  return acc;
}

void require_n_max(int n_max) {
  if (n_max < 3) throw std::invalid_argument("relations need n_max >= 3; lower n carries no nontrivial relation");
}

}  // namespace

template <class F>
std::vector<RelationViolation<F>> check_ainf_relations(const AlgebraSpec<F>& spec, int n_max) {
  if (spec.flavor != Flavor::a_infinity) throw FlavorError("check_ainf_relations needs an a-infinity spec");
  require_n_max(n_max);
  const auto terms = relation_terms(spec);
  const int dim = spec.dim();
  std::vector<RelationViolation<F>> out;
  for (int n = 3; n <= n_max; ++n) {
    const int big_n = n + 1;
    for_each_index(dim, big_n, [&](const Index& j) {
      F total;
      for (int l = 2; l <= n - 1; ++l) {
        const int k = big_n - l;
        auto up = terms.up.find(l);
        auto low = terms.low.find(k);
        if (up == terms.up.end() || low == terms.low.end()) continue;
        for (int i = 0; i < big_n; ++i) {
          Index x, y;
          for (int t = 0; t < l; ++t) x.push_back(j[static_cast<std::size_t>((i + t) % big_n)]);
          for (int t = 0; t < k; ++t) y.push_back(j[static_cast<std::size_t>((i + l + t) % big_n)]);
          const Parity s = parity_of(spec.basis, j, 0, static_cast<std::size_t>(i)) *
                           parity_of(spec.basis, j, static_cast<std::size_t>(i), j.size());
          add_signed(total, sign_of(s), contract_pair(up->second, *low->second, std::move(x), std::move(y), dim));
        }
      }
      if (!is_zero(total)) out.push_back({n, j, total});
    });
  }
  return out;
}

template <class F>
std::vector<RelationViolation<F>> check_linf_relations(const AlgebraSpec<F>& spec, int n_max) {
  if (spec.flavor != Flavor::l_infinity) throw FlavorError("check_linf_relations needs an l-infinity spec");
  require_n_max(n_max);
  const auto terms = relation_terms(spec);
  const int dim = spec.dim();
  std::vector<RelationViolation<F>> out;
  for (int n = 3; n <= n_max; ++n) {
    const int big_n = n + 1;
    std::map<int, std::vector<Permutation>> shuffles;
    for (int l = 2; l <= n - 1; ++l) shuffles.emplace(l, unshuffles(l, big_n - l));
    for_each_index(dim, big_n, [&](const Index& j) {
      std::vector<Parity> pj;
      for (int v : j) pj.push_back(spec.basis.parity(v));
      F total;
      for (int l = 2; l <= n - 1; ++l) {
        const int k = big_n - l;
        auto up = terms.up.find(l);
        auto low = terms.low.find(k);
        if (up == terms.up.end() || low == terms.low.end()) continue;
        for (const auto& sigma : shuffles.at(l)) {
          Index x, y;
          for (int t = 0; t < l; ++t) x.push_back(j[static_cast<std::size_t>(sigma(t))]);
          for (int t = l; t < big_n; ++t) y.push_back(j[static_cast<std::size_t>(sigma(t))]);
          add_signed(total, koszul_sign(sigma, pj),
                     contract_pair(up->second, *low->second, std::move(x), std::move(y), dim));
        }
      }
      if (!is_zero(total)) out.push_back({n, j, total});
    });
  }
  return out;
}

template <class F>
std::vector<RelationViolation<F>> check_relations(const AlgebraSpec<F>& spec, int n_max) {
  return spec.flavor == Flavor::a_infinity ? check_ainf_relations(spec, n_max) : check_linf_relations(spec, n_max);
}

template <class F>
Cochain<F>& Cochain<F>::prune() {
  std::erase_if(components, [](const auto& kv) { return kv.second.empty(); });
  return *this;
}

template <class F>
Cochain<F> structure_cochain(const AlgebraSpec<F>& spec) {
  Cochain<F> c;
  c.parity = Parity::odd();
  for (const auto& [n, t] : spec.lower)
    if (!t.empty()) c.components.emplace(n, t);
  return c;
}

template <class F>
std::vector<Violation> cochain_violations(const Cochain<F>& c, const GradedBasis& basis, Flavor flavor) {
  std::vector<Violation> out;
  for (const auto& [n, t] : c.components) {
    if (n < 1) throw StructureError("cochain components must have arity >= 1");
    check_tensor_shape(t, n, basis.dim(), "cochain component");
    const std::string label = "psi" + std::to_string(n);
    for (const auto& [idx, v] : t.entries())
      if (basis.total(idx) != c.parity)
        out.push_back({"cochain-parity", label + "_{" + format_indices(idx) + "} nonzero off the parity support"});
    auto sym = symmetry_violations(t, basis, flavor, label);
    out.insert(out.end(), sym.begin(), sym.end());
  }
  return out;
}

template <class F>
Cochain<F> coderivation_bracket(const Cochain<F>& a, const Cochain<F>& b, const AlgebraSpec<F>& spec) {
  const int dim = spec.dim();
  for (const auto* c : {&a, &b})
    for (const auto& [n, t] : c->components) check_tensor_shape(t, n, dim, "cochain component");
  const auto ra = raise_all(a.components, spec.inner);
  const auto rb = raise_all(b.components, spec.inner);

  std::map<int, Tensor<F>> ab, ba;
  if (spec.flavor == Flavor::a_infinity) {
    ab = compose_tensor(ra, rb, b.parity, spec.basis);
    ba = compose_tensor(rb, ra, a.parity, spec.basis);
  } else {
    ab = compose_symmetric(ra, rb, spec.basis);
    ba = compose_symmetric(rb, ra, spec.basis);
  }
  // [a,b] = a o b - (-1)^{|a||b|} b o a
  const int s = -sign_of(a.parity * b.parity);
  for (auto& [n, t] : ba) {
    auto& dst = ab.try_emplace(n, n + 1, dim).first->second;
    for (const auto& [key, v] : t.entries()) dst.add(key, s > 0 ? v : F(-v));
  }
  Cochain<F> out;
  out.parity = a.parity + b.parity;
  out.components = lower_all(ab, spec.inner);
  return out;
}

template <class F>
Cochain<F> differential_D(const Cochain<F>& psi, const AlgebraSpec<F>& spec) {
  return coderivation_bracket(psi, structure_cochain(spec), spec);
}

AlgebraSpec<DualScalar> embed_dual(const AlgebraSpec<Scalar>& spec) {
  AlgebraSpec<DualScalar> out;
  out.flavor = spec.flavor;
  out.basis = spec.basis;
  out.inner = spec.inner;
  out.max_arity = spec.max_arity;
  for (const auto& [n, t] : spec.lower) out.lower.emplace(n, dual_tensor<DualScalar>(t));
  return out;
}

AlgebraSpec<DualScalar> deform(const AlgebraSpec<Scalar>& spec, const Cochain<Scalar>& phi) {
  if (!phi.is_zero() && !phi.parity.is_odd()) throw FlavorError("deformation cochain must be odd");
  for (const auto& [n, t] : phi.components)
    if (n < 2 && !t.empty()) throw StructureError("deformation cochain must vanish in arity 1");
  auto bad = cochain_violations(phi, spec.basis, spec.flavor);
  if (!bad.empty()) throw StructureError("deformation cochain is not cyclic: " + bad.front().detail);
  const Cochain<Scalar> dphi = differential_D(phi, spec);
  for (const auto& [n, t] : dphi.components)
    if (!t.empty()) {
      const auto& [idx, v] = *t.entries().begin();
      throw NotACocycleError("D(phi) != 0: component of arity " + std::to_string(n) + " at (" +
                             format_indices(idx) + ") equals " + to_string(v));
    }

  AlgebraSpec<DualScalar> out = embed_dual(spec);
  for (const auto& [n, t] : phi.components) {
    if (t.empty()) continue;
    auto& dst = out.lower.try_emplace(n, n + 1, spec.dim()).first->second;
    for (const auto& [key, v] : t.entries()) dst.add(key, DualScalar(Scalar(0), v));
    out.max_arity = std::max(out.max_arity, n);
  }
  return out;
}

int eta_sign(Flavor flavor, const GradedBasis& w_basis, std::span<const int> indices) {
  // A-infinity: (-1)^{(n-1)v_1 + (n-2)v_2 + .. + v_{n-1}} with V-parities v = w + 1.
  // L-infinity: the same exponent with W-parities.
  const int n = static_cast<int>(indices.size());
  Parity exponent;
  for (int i = 0; i + 1 < n; ++i) {
    Parity p = w_basis.parity(indices[static_cast<std::size_t>(i)]);
    if (flavor == Flavor::a_infinity) p = p.flipped();
    exponent = exponent + Parity(n - 1 - i) * p;
  }
  return sign_of(exponent);
}

AlgebraSpec<Scalar> eta_transport(const VSideStructure& v) {
  const int dim = v.basis.dim();
  check_spec_structure(dim, v.inner);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      const Parity pa = v.basis.parity(a), pb = v.basis.parity(b);
      if (!is_zero(v.inner(a, b)) && pa != pb) throw StructureError("V-side inner product is not even");
      Scalar expected = v.inner(b, a);
      if (sign_of(pa * pb) < 0) expected = -expected;
      if (v.inner(a, b) != expected) throw StructureError("V-side inner product is not graded symmetric");
    }
  if (!inverse(v.inner)) throw NondegeneracyError("V-side inner product is degenerate");

  AlgebraSpec<Scalar> out;
  out.flavor = v.flavor;
  out.basis = v.basis.reversed();
  out.inner = Matrix(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      const int idx[2] = {a, b};
      out.inner(a, b) = eta_sign(v.flavor, out.basis, idx) * v.inner(a, b);
    }

  int top = 2;
  for (const auto& [k, m] : v.products) {
    if (m.empty()) continue;
    check_tensor_shape(m, k, dim, "V-side product");
    if (k < 2) throw StructureError("V-side products of arity 1 are not supported (d_1 must vanish)");
    Tensor<Scalar> upper(k + 1, dim);
    for (const auto& [key, val] : m.entries()) {
      const std::span<const int> inputs(key.data(), key.size() - 1);
      Parity in_parity;
      for (int i : inputs) in_parity = in_parity + v.basis.parity(i);
      if (v.basis.parity(key.back()) != in_parity + Parity(k))
        throw FlavorError("m_" + std::to_string(k) + " does not have parity " + std::to_string(k % 2));
      // d_k = eta^{-1} m_k eta; eta is the identity on single factors.
      upper.set(key, eta_sign(v.flavor, out.basis, inputs) * val);
    }
    out.lower.emplace(k, lower_last_index(upper, out.inner));
    top = std::max(top, k);
  }
  out.max_arity = top;
  return out;
}

#define GRAPHCX_INSTANTIATE(F)                                                                              \
  template std::vector<Violation> validate_spec(const AlgebraSpec<F>&);                                   \
  template std::vector<Violation> symmetry_violations(const Tensor<F>&, const GradedBasis&, Flavor,      \
                                                      const std::string&);                                \
  template Tensor<F> raise_last_index(const Tensor<F>&, const Matrix&);                                   \
  template Tensor<F> lower_last_index(const Tensor<F>&, const Matrix&);                                   \
  template Tensor<F> raise_last_index(const AlgebraSpec<F>&, int);                                        \
  template std::vector<RelationViolation<F>> check_ainf_relations(const AlgebraSpec<F>&, int);            \
  template std::vector<RelationViolation<F>> check_linf_relations(const AlgebraSpec<F>&, int);            \
  template std::vector<RelationViolation<F>> check_relations(const AlgebraSpec<F>&, int);                 \
  template struct Cochain<F>;                                                                             \
  template Cochain<F> structure_cochain(const AlgebraSpec<F>&);                                           \
  template std::vector<Violation> cochain_violations(const Cochain<F>&, const GradedBasis&, Flavor);      \
  template Cochain<F> coderivation_bracket(const Cochain<F>&, const Cochain<F>&, const AlgebraSpec<F>&);  \
  template Cochain<F> differential_D(const Cochain<F>&, const AlgebraSpec<F>&);

GRAPHCX_INSTANTIATE(Scalar)
GRAPHCX_INSTANTIATE(DualScalar)

#undef GRAPHCX_INSTANTIATE

}  // namespace graphcx
