#include "graphcx/state_sum.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

#include "graphcx/errors.hpp"

namespace graphcx {

SlotWord SlotWord::of_graph(const OrientedGraph& g) {
  SlotWord w;
  std::vector<int> lower_of(static_cast<std::size_t>(g.half_edge_count()), -1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    for (std::size_t i = 0; i < g.vertices[v].size(); ++i) {
      const int h = g.vertices[v][i];
      lower_of[static_cast<std::size_t>(h)] = w.size();
      w.slots.push_back({SlotKind::lower, static_cast<int>(v), static_cast<int>(i), h});
    }
  w.mate.assign(w.slots.size(), -1);
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    for (int end = 0; end < 2; ++end) {
      const int h = g.edges[k][static_cast<std::size_t>(end)];
      const int self = w.size();
      w.slots.push_back({SlotKind::upper, static_cast<int>(k), end, h});
      const int low = lower_of[static_cast<std::size_t>(h)];
      w.mate.push_back(low);
      if (low >= 0) w.mate[static_cast<std::size_t>(low)] = self;
    }
  return w;
}

SlotWord SlotWord::parse(const std::string& pattern) {
  SlotWord w;
  std::map<std::string, int> symbol_id;
  std::map<int, std::vector<int>> uses;
  std::istringstream is(pattern);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != '^' && tok[0] != '_'))
      throw StructureError("slot '" + tok + "' must start with ^ or _");
    const std::string sym = tok.substr(1);
    const int id = symbol_id.try_emplace(sym, static_cast<int>(symbol_id.size())).first->second;
    uses[id].push_back(w.size());
    w.slots.push_back({tok[0] == '^' ? SlotKind::upper : SlotKind::lower, id, 0, id});
  }
  w.mate.assign(w.slots.size(), -1);
  for (const auto& [id, pos] : uses) {
    if (pos.size() != 2) throw StructureError("every symbol must appear exactly twice");
    w.mate[static_cast<std::size_t>(pos[0])] = pos[1];
    w.mate[static_cast<std::size_t>(pos[1])] = pos[0];
  }
  w.validate();
  return w;
}

void SlotWord::validate() const {
  if (mate.size() != slots.size()) throw StructureError("slot word has no complete matching");
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const int m = mate[i];
    if (m < 0 || m >= size()) throw StructureError("slot " + std::to_string(i) + " is unmatched");
    if (mate[static_cast<std::size_t>(m)] != static_cast<int>(i)) throw StructureError("slot matching is not symmetric");
    if (slots[i].kind == slots[static_cast<std::size_t>(m)].kind)
      throw StructureError("slot " + std::to_string(i) + " is paired with a slot of the same kind");
  }
}

int contraction_sign(const SlotWord& word, std::span<const Parity> parities, const std::vector<int>& order) {
  word.validate();
  if (static_cast<int>(parities.size()) != word.size()) throw StructureError("one parity per slot is required");
  for (int i = 0; i < word.size(); ++i)
    if (parities[static_cast<std::size_t>(i)] != parities[static_cast<std::size_t>(word.mate[static_cast<std::size_t>(i)])])
      throw StructureError("paired slots carry different parities");
  std::vector<int> live(static_cast<std::size_t>(word.size()));
  for (int i = 0; i < word.size(); ++i) live[static_cast<std::size_t>(i)] = i;
  std::vector<bool> done(static_cast<std::size_t>(word.size()), false);
  Parity exponent;
  for (int upper : order) {
    if (upper < 0 || upper >= word.size() || word.slots[static_cast<std::size_t>(upper)].kind != SlotKind::upper ||
        done[static_cast<std::size_t>(upper)])
      throw StructureError("contraction order must list each upper slot once");
    const int lower = word.mate[static_cast<std::size_t>(upper)];
    const auto pu = static_cast<std::size_t>(std::find(live.begin(), live.end(), upper) - live.begin());
    const auto pl = static_cast<std::size_t>(std::find(live.begin(), live.end(), lower) - live.begin());
    Parity jumped;
    if (pl > pu) {
      for (std::size_t i = pu + 1; i < pl; ++i) jumped = jumped + parities[static_cast<std::size_t>(live[i])];
    } else {
      for (std::size_t i = pl + 1; i <= pu; ++i) jumped = jumped + parities[static_cast<std::size_t>(live[i])];
    }
    exponent = exponent + jumped * parities[static_cast<std::size_t>(lower)];
    std::erase_if(live, [&](int s) { return s == upper || s == lower; });
    done[static_cast<std::size_t>(upper)] = true;
  }
  if (!live.empty()) throw StructureError("contraction order must list each upper slot once");
  return sign_of(exponent);
}

int contraction_sign(const SlotWord& word, std::span<const Parity> parities) {
  std::vector<int> order;
  for (int i = 0; i < word.size(); ++i)
    if (word.slots[static_cast<std::size_t>(i)].kind == SlotKind::upper) order.push_back(i);
  return contraction_sign(word, parities, order);
}

int contraction_sign(const SlotWord& word, const std::vector<int>& state, const GradedBasis& basis) {
  std::vector<Parity> parities;
  for (const auto& s : word.slots) {
    if (s.half_edge < 0 || s.half_edge >= static_cast<int>(state.size()))
      throw StructureError("state does not cover every half-edge");
    parities.push_back(basis.parity(state[static_cast<std::size_t>(s.half_edge)]));
  }
  return contraction_sign(word, parities);
}

CrossingTable::CrossingTable(const SlotWord& word) {
  word.validate();
  for (const auto& s : word.slots) n_ = std::max(n_, s.half_edge + 1);
  if (n_ > 64) throw StructureError("state sums support at most 64 half-edges");
  crossing_.assign(static_cast<std::size_t>(n_ * n_), 0);
  // Target arrangement: (upper, lower) blocks in the order of the upper slots.
  std::vector<int> target(word.slots.size(), -1);
  int next = 0;
  for (int i = 0; i < word.size(); ++i)
    if (word.slots[static_cast<std::size_t>(i)].kind == SlotKind::upper) {
      target[static_cast<std::size_t>(i)] = next++;
      target[static_cast<std::size_t>(word.mate[static_cast<std::size_t>(i)])] = next++;
    }
  for (int i = 0; i < word.size(); ++i)
    for (int j = i + 1; j < word.size(); ++j)
      if (target[static_cast<std::size_t>(i)] > target[static_cast<std::size_t>(j)]) {
        int a = word.slots[static_cast<std::size_t>(i)].half_edge, b = word.slots[static_cast<std::size_t>(j)].half_edge;
        if (a > b) std::swap(a, b);
        crossing_[static_cast<std::size_t>(a * n_ + b)] ^= 1;
      }
}

int CrossingTable::sign(const std::vector<int>& state, const GradedBasis& basis) const {
  int odd[64];
  int count = 0;
  for (int h = 0; h < n_; ++h)
    if (basis.parity(state[static_cast<std::size_t>(h)]).is_odd()) odd[count++] = h;
  int exponent = 0;
  for (int i = 0; i < count; ++i) {
    const std::uint8_t* row = &crossing_[static_cast<std::size_t>(odd[i] * n_)];
    for (int j = i; j < count; ++j) exponent ^= row[odd[j]];
  }
  return exponent ? -1 : 1;
}

namespace {

void check_flavor(GraphKind kind, Flavor flavor) {
  if (kind == GraphKind::ribbon && flavor != Flavor::a_infinity)
    throw FlavorError("ribbon graphs need an a-infinity algebra");
  if (kind == GraphKind::ordinary && flavor != Flavor::l_infinity)
    throw FlavorError("ordinary graphs need an l-infinity algebra");
}

template <class F>
class StateSum {
 public:
  StateSum(const OrientedGraph& g, const AlgebraSpec<F>& spec)
      : g_(g), spec_(spec), up_(raising_form(spec.inner)), table_(SlotWord::of_graph(g)) {
    const Incidence inc(g);
    closing_.resize(g.vertices.size());
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
      const int a = inc.vertex_of[static_cast<std::size_t>(g.edges[k][0])];
      const int b = inc.vertex_of[static_cast<std::size_t>(g.edges[k][1])];
      closing_[static_cast<std::size_t>(std::max(a, b))].push_back(static_cast<int>(k));
    }
    for (const auto& v : g.vertices) {
      const int valence = static_cast<int>(v.size());
      const int arity = valence - 1;
      if (arity < 2 || arity > spec.max_arity)
        throw UnsupportedValenceError("vertex of valence " + std::to_string(valence) +
                                      " needs constants of arity " + std::to_string(arity) +
                                      ", outside the spec's range 2.." + std::to_string(spec.max_arity));
      tensors_.push_back(spec.constants(arity));
    }
    state_.assign(static_cast<std::size_t>(g.half_edge_count()), -1);
  }

  F value() {
    for (const auto* t : tensors_)
      if (!t) return F();
    F weight(1L);
    recurse(0, weight);
    return total_;
  }

 private:
  void recurse(std::size_t v, const F& weight) {
    if (v == g_.vertices.size()) {
      if (table_.sign(state_, spec_.basis) > 0)
        total_ += weight;
      else
        total_ -= weight;
      return;
    }
    const auto& slots = g_.vertices[v];
    for (const auto& [idx, dv] : tensors_[v]->entries()) {
      for (std::size_t i = 0; i < slots.size(); ++i) state_[static_cast<std::size_t>(slots[i])] = idx[i];
      F w = weight;
      w *= dv;
      bool alive = true;
      for (int k : closing_[v]) {
        const auto& e = g_.edges[static_cast<std::size_t>(k)];
        const Scalar& kv = up_(state_[static_cast<std::size_t>(e[0])], state_[static_cast<std::size_t>(e[1])]);
        if (is_zero(kv)) {
          alive = false;
          break;
        }
        w *= kv;
      }
      if (alive) recurse(v + 1, w);
    }
  }

  const OrientedGraph& g_;
  const AlgebraSpec<F>& spec_;
  Matrix up_;
  CrossingTable table_;
  std::vector<std::vector<int>> closing_;  // edges whose later endpoint is this vertex
  std::vector<const Tensor<F>*> tensors_;
  std::vector<int> state_;
  F total_;
};

std::string letter(int h, bool long_names) {
  if (!long_names) return std::string(1, static_cast<char>('a' + h));
  return "h" + std::to_string(h);
}

}  // namespace

template <class F>
F partition_value(const OrientedGraph& g, const AlgebraSpec<F>& spec) {
  check_flavor(g.kind, spec.flavor);
  validate_structure(g, {.trivalent = false, .connected = false});
  StateSum<F> sum(g, spec);
  return sum.value();
}

std::string Expression::to_string() const {
  int top = -1;
  for (const auto& f : factors)
    for (int h : f.half_edges) top = std::max(top, h);
  const bool long_names = top >= 26;
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    os << (i ? " " : "") << f.tensor << (f.tensor == 'd' ? "_{" : "^{");
    for (std::size_t j = 0; j < f.half_edges.size(); ++j)
      os << (long_names && j ? " " : "") << letter(f.half_edges[j], long_names);
    os << '}';
  }
  return os.str();
}

Expression expression(const OrientedGraph& g) {
  validate_structure(g, {.trivalent = false, .connected = false, .external = true});
  Expression e;
  for (const auto& v : g.vertices) e.factors.push_back({'d', v});
  for (const auto& edge : g.edges) e.factors.push_back({'k', {edge[0], edge[1]}});
  return e;
}

template <class F>
Chain<F> cycle_chain(const AlgebraSpec<F>& spec, const ComplexParams& params, int max_edges,
                     const CycleOptions& options) {
  check_flavor(params.kind, spec.flavor);
  std::vector<CanonicalGraph> gens;
  for (int e = 1; e <= max_edges; ++e) {
    auto part = generators(params, e);
    gens.insert(gens.end(), part.begin(), part.end());
  }
  std::vector<F> values(gens.size());
  std::vector<std::exception_ptr> errors(gens.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < gens.size(); i += stride) {
      try {
        values[i] = partition_value(gens[i].representative, spec);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, options.threads));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& t : pool) t.join();
  }
  Chain<F> z;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    F v = values[i];
    if (options.normalization == CycleNormalization::automorphism)
      v *= Scalar(mpz_class(1), mpz_class(std::to_string(gens[i].automorphisms)));
    z.add(gens[i].id, v);
  }
  return z;
}

template <class F>
CycleReport<F> verify_cycle(const Chain<F>& z, const ComplexParams& params, int max_edges) {
  CycleReport<F> report;
  std::map<int, Chain<F>> by_degree;
  for (const auto& [id, coeff] : z.terms) {
    const OrientedGraph g = graph_from_id(id);
    const int v_minus_e = g.vertex_count() - g.edge_count();
    const bool kind_ok = g.kind == params.kind;
    const bool euler_ok = params.kind == GraphKind::ordinary
                              ? v_minus_e == params.chi
                              : (v_minus_e + faces(g) == 2 - 2 * params.genus && faces(g) == params.punctures);
    if (!kind_ok || !euler_ok) throw StructureError("chain term " + id + " is not in the " + params.describe() + " complex");
    if (g.edge_count() > max_edges)
      throw StructureError("chain term " + id + " has more than " + std::to_string(max_edges) + " edges");
    by_degree[g.edge_count()].add(id, coeff);
  }
  const int lowest = 1;
  for (int e = lowest + 1; e <= max_edges; ++e) {
    BoundaryDegree<F> d;
    d.edges = e - 1;
    auto it = by_degree.find(e);
    if (it != by_degree.end()) d.boundary = boundary(it->second);
    if (!d.boundary.is_zero()) report.verified = false;
    report.degrees.push_back(std::move(d));
  }
  if (max_edges < params.complete_max_edges()) {
    BoundaryDegree<F> top;
    top.edges = max_edges;
    top.checked = false;
    report.degrees.push_back(std::move(top));
    report.warnings.push_back("generators with more than " + std::to_string(max_edges) +
                              " edges are not included; degree " + std::to_string(max_edges) + " is unchecked");
  }
  return report;
}

#define GRAPHCX_INSTANTIATE(F)                                                                  \
  template F partition_value(const OrientedGraph&, const AlgebraSpec<F>&);                     \
  template Chain<F> cycle_chain(const AlgebraSpec<F>&, const ComplexParams&, int, const CycleOptions&); \
  template CycleReport<F> verify_cycle(const Chain<F>&, const ComplexParams&, int);

GRAPHCX_INSTANTIATE(Scalar)
GRAPHCX_INSTANTIATE(DualScalar)

#undef GRAPHCX_INSTANTIATE

}  // namespace graphcx
