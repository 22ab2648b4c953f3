#include "graphcx/complex.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

#include "graphcx/errors.hpp"

namespace graphcx {

std::string ComplexParams::describe() const {
  std::ostringstream os;
  if (kind == GraphKind::ordinary)
    os << "ordinary chi=" << chi;
  else
    os << "ribbon genus=" << genus << " punctures=" << punctures;
  return os.str();
}

const std::vector<CanonicalGraph>& graphs_at(const ComplexParams& params, int edges) {
  using Key = std::tuple<int, int, int, int, int>;
  static std::mutex mutex;
  static std::map<Key, std::vector<CanonicalGraph>> cache;
  const Key key{static_cast<int>(params.kind), params.chi, params.genus, params.punctures, edges};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<CanonicalGraph> found = params.kind == GraphKind::ordinary
                                          ? enumerate_ordinary_at(params.chi, edges)
                                          : enumerate_ribbon_at(params.genus, params.punctures, edges);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(found)).first->second;
}

std::vector<CanonicalGraph> generators(const ComplexParams& params, int edges) {
  std::vector<CanonicalGraph> out;
  for (const auto& c : graphs_at(params, edges))
    if (c.sign != 0) out.push_back(c);
  return out;
}

Chain<Scalar> boundary(const OrientedGraph& g) {
  Chain<Scalar> out;
  const Incidence inc(g);
  for (int k = 0; k < g.edge_count(); ++k) {
    const auto [a, b] = g.edges[static_cast<std::size_t>(k)];
    if (inc.vertex_of[static_cast<std::size_t>(a)] == inc.vertex_of[static_cast<std::size_t>(b)]) continue;
    const auto [contracted, sign] = contract_edge(g, k);
    const CanonicalGraph c = canonicalize(contracted);
    if (c.sign != 0) out.add(c.id, Scalar(sign * c.sign));
  }
  return out;
}

template <class F>
Chain<F> boundary(const Chain<F>& c) {
  Chain<F> out;
  for (const auto& [id, coeff] : c.terms) {
    const Chain<Scalar> d = boundary(graph_from_id(id));
    for (const auto& [target, incidence] : d.terms) {
      F term = coeff;
      term *= incidence;
      out.add(target, term);
    }
  }
  return out;
}

template Chain<Scalar> boundary(const Chain<Scalar>&);
template Chain<DualScalar> boundary(const Chain<DualScalar>&);

int edge_count_of(const std::string& id) { return graph_from_id(id).edge_count(); }

BoundaryMatrix boundary_matrix(const ComplexParams& params, int edges) {
  BoundaryMatrix m;
  const auto cols = generators(params, edges);
  const auto rows = edges > 0 ? generators(params, edges - 1) : std::vector<CanonicalGraph>{};
  std::map<std::string, int> row_index;
  for (const auto& r : rows) {
    row_index.emplace(r.id, static_cast<int>(m.rows.size()));
    m.rows.push_back(r.id);
  }
  for (const auto& c : cols) m.cols.push_back(c.id);
  m.entries = Matrix(static_cast<int>(m.rows.size()), static_cast<int>(m.cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [id, v] : boundary(cols[j].representative).terms) {
      auto it = row_index.find(id);
      if (it == row_index.end()) throw StructureError("boundary produced a graph outside the complex: " + id);
      m.entries(it->second, static_cast<int>(j)) = v;
    }
  }
  return m;
}

std::vector<HomologyDegree> homology_ranks(const ComplexParams& params, int max_edges) {
  std::vector<HomologyDegree> out;
  const int top = params.complete_max_edges();
  const int last = std::min(max_edges, top);
  std::map<int, int> rank_of;  // rank of the boundary out of C_e
  auto rank_at = [&](int e) {
    auto it = rank_of.find(e);
    if (it != rank_of.end()) return it->second;
    const int r = e > last ? 0 : rank(boundary_matrix(params, e).entries);
    rank_of.emplace(e, r);
    return r;
  };
  for (int e = 1; e <= last; ++e) {
    const int dim = static_cast<int>(generators(params, e).size());
    if (dim == 0) continue;
    HomologyDegree d;
    d.edges = e;
    d.dimension = dim;
    d.rank_out = rank_at(e);
    d.truncated = e + 1 <= top && e + 1 > last;
    d.rank_in = d.truncated ? 0 : rank_at(e + 1);
    d.betti = dim - d.rank_out - d.rank_in;
    out.push_back(d);
  }
  return out;
}

}  // namespace graphcx
