#include "graphcx/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "graphcx/errors.hpp"
#include "graphcx/graded.hpp"

namespace graphcx {

std::string to_string(GraphKind kind) { return kind == GraphKind::ribbon ? "ribbon" : "ordinary"; }

GraphKind parse_graph_kind(const std::string& text) {
  if (text == "ribbon") return GraphKind::ribbon;
  if (text == "ordinary") return GraphKind::ordinary;
  throw StructureError("unknown graph kind '" + text + "'");
}

namespace {

int half_edge_bound(const OrientedGraph& g) {
  int top = g.half_edge_count() - 1;
  for (const auto& v : g.vertices)
    for (int h : v) top = std::max(top, h);
  for (const auto& e : g.edges) top = std::max({top, e[0], e[1]});
  return top + 1;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::string join_ints(const std::vector<int>& xs, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? std::string(1, sep) : "") << xs[i];
  return os.str();
}

int vector_sign(const std::vector<int>& images) { return permutation_sign(Permutation(images)); }

// ordinary graphs --------------------------------------------------------

using PairCode = std::vector<std::pair<int, int>>;

PairCode pair_code(const std::vector<std::pair<int, int>>& ends, const std::vector<int>& perm) {
  PairCode code;
  code.reserve(ends.size());
  for (auto [u, w] : ends) {
    const int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(w)];
    code.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(code.begin(), code.end());
  return code;
}

std::string ordinary_id(int v, const PairCode& code) {
  std::ostringstream os;
  os << 'O' << v << ':';
  for (std::size_t i = 0; i < code.size(); ++i) os << (i ? "," : "") << code[i].first << '-' << code[i].second;
  return os.str();
}

OrientedGraph ordinary_from_code(int v, const PairCode& code) {
  OrientedGraph g;
  g.kind = GraphKind::ordinary;
  g.vertices.assign(static_cast<std::size_t>(v), {});
  for (std::size_t i = 0; i < code.size(); ++i) {
    const int t = static_cast<int>(2 * i), h = t + 1;
    g.vertices[static_cast<std::size_t>(code[i].first)].push_back(t);
    g.vertices[static_cast<std::size_t>(code[i].second)].push_back(h);
    g.edges.push_back({t, h});
  }
  return g;
}

CanonicalGraph canonicalize_ordinary(const OrientedGraph& g) {
  const Incidence inc(g);
  const int v = g.vertex_count();
  std::vector<std::pair<int, int>> ends;
  for (const auto& e : g.edges)
    ends.emplace_back(inc.vertex_of[static_cast<std::size_t>(e[0])], inc.vertex_of[static_cast<std::size_t>(e[1])]);

  std::vector<int> perm(static_cast<std::size_t>(v));
  std::iota(perm.begin(), perm.end(), 0);
  PairCode best;
  std::vector<std::vector<int>> minimizers;
  do {
    PairCode code = pair_code(ends, perm);
    if (minimizers.empty() || code < best) {
      best = std::move(code);
      minimizers.assign(1, perm);
    } else if (code == best) {
      minimizers.push_back(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  CanonicalGraph out;
  out.id = ordinary_id(v, best);
  out.representative = ordinary_from_code(v, best);

  std::uint64_t aut = minimizers.size();
  for (std::size_t i = 0; i < best.size();) {
    std::size_t j = i;
    while (j < best.size() && best[j] == best[i]) ++j;
    const int mult = static_cast<int>(j - i);
    aut *= factorial(mult);
    if (best[i].first == best[i].second) aut <<= mult;
    i = j;
  }
  out.automorphisms = aut;

  if (has_loop(g)) {
    out.sign = 0;
    return out;
  }
  int sign = 0;
  for (const auto& p : minimizers) {
    int s = vector_sign(p);
    for (auto [u, w] : ends)
      if (p[static_cast<std::size_t>(u)] > p[static_cast<std::size_t>(w)]) s = -s;
    if (sign == 0) {
      sign = s;
    } else if (sign != s) {
      sign = 0;
      break;
    }
  }
  out.sign = sign;
  return out;
}

// ribbon graphs ----------------------------------------------------------

struct RibbonLabeling {
  std::vector<int> code;   // (next, partner) per new label
  std::vector<int> label;  // old half-edge -> new label
};

RibbonLabeling ribbon_labeling(const Incidence& inc, int root) {
  const std::size_t n = inc.partner.size();
  RibbonLabeling r;
  r.label.assign(n, -1);
  std::vector<int> order;
  order.reserve(n);
  std::deque<int> queue{root};
  r.label[static_cast<std::size_t>(root)] = 0;
  order.push_back(root);
  while (!queue.empty()) {
    const int h = queue.front();
    queue.pop_front();
    for (int nb : {inc.next[static_cast<std::size_t>(h)], inc.partner[static_cast<std::size_t>(h)]}) {
      if (r.label[static_cast<std::size_t>(nb)] >= 0) continue;
      r.label[static_cast<std::size_t>(nb)] = static_cast<int>(order.size());
      order.push_back(nb);
      queue.push_back(nb);
    }
  }
  r.code.reserve(2 * n);
  for (int old : order) {
    r.code.push_back(r.label[static_cast<std::size_t>(inc.next[static_cast<std::size_t>(old)])]);
    r.code.push_back(r.label[static_cast<std::size_t>(inc.partner[static_cast<std::size_t>(old)])]);
  }
  return r;
}

OrientedGraph ribbon_from_code(const std::vector<int>& code) {
  const std::size_t n = code.size() / 2;
  OrientedGraph g;
  g.kind = GraphKind::ribbon;
  std::vector<bool> seen(n, false);
  for (std::size_t h = 0; h < n; ++h) {
    if (seen[h]) continue;
    std::vector<int> cycle;
    for (std::size_t x = h; !seen[x]; x = static_cast<std::size_t>(code[2 * x])) {
      seen[x] = true;
      cycle.push_back(static_cast<int>(x));
    }
    g.vertices.push_back(std::move(cycle));
  }
  for (std::size_t h = 0; h < n; ++h) {
    const int p = code[2 * h + 1];
    if (static_cast<int>(h) < p) g.edges.push_back({static_cast<int>(h), p});
  }
  return g;
}

std::string ribbon_id(const OrientedGraph& rep) {
  std::ostringstream os;
  os << "R:";
  for (std::size_t i = 0; i < rep.vertices.size(); ++i) os << (i ? "/" : "") << join_ints(rep.vertices[i], ',');
  os << ':';
  for (std::size_t i = 0; i < rep.edges.size(); ++i) os << (i ? "," : "") << rep.edges[i][0] << '-' << rep.edges[i][1];
  return os.str();
}

CanonicalGraph canonicalize_ribbon(const OrientedGraph& g) {
  const Incidence inc(g);
  const int n = g.half_edge_count();
  std::vector<RibbonLabeling> minimizers;
  for (int root = 0; root < n; ++root) {
    RibbonLabeling r = ribbon_labeling(inc, root);
    if (minimizers.empty() || r.code < minimizers.front().code)
      minimizers.assign(1, std::move(r));
    else if (r.code == minimizers.front().code)
      minimizers.push_back(std::move(r));
  }

  CanonicalGraph out;
  out.representative = ribbon_from_code(minimizers.front().code);
  out.id = ribbon_id(out.representative);
  out.automorphisms = minimizers.size();
  if (has_loop(g)) {
    out.sign = 0;
    return out;
  }

  const Incidence rep(out.representative);
  int sign = 0;
  for (const auto& r : minimizers) {
    std::vector<int> perm;
    for (const auto& vert : g.vertices)
      perm.push_back(rep.vertex_of[static_cast<std::size_t>(r.label[static_cast<std::size_t>(vert.front())])]);
    int s = vector_sign(perm);
    for (const auto& e : g.edges)
      if (r.label[static_cast<std::size_t>(e[0])] > r.label[static_cast<std::size_t>(e[1])]) s = -s;
    if (sign == 0) {
      sign = s;
    } else if (sign != s) {
      sign = 0;
      break;
    }
  }
  out.sign = sign;
  return out;
}

std::vector<int> parse_int_list(const std::string& text, char sep, const std::string& id) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError(0, "malformed graph id '" + id + "'");
    }
  }
  return out;
}

std::pair<int, int> parse_pair(const std::string& text, const std::string& id) {
  const auto dash = text.find('-', 1);
  if (dash == std::string::npos) throw ParseError(0, "malformed graph id '" + id + "'");
  const auto a = parse_int_list(text.substr(0, dash), ',', id);
  const auto b = parse_int_list(text.substr(dash + 1), ',', id);
  if (a.size() != 1 || b.size() != 1) throw ParseError(0, "malformed graph id '" + id + "'");
  return {a[0], b[0]};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

// enumeration helpers ----------------------------------------------------

void collect(std::map<std::string, CanonicalGraph>& found, const OrientedGraph& g) {
  CanonicalGraph c = canonicalize(g);
  found.try_emplace(c.id, std::move(c));
}

std::vector<CanonicalGraph> sorted_values(std::map<std::string, CanonicalGraph>& found) {
  std::vector<CanonicalGraph> out;
  out.reserve(found.size());
  for (auto& [id, c] : found) out.push_back(std::move(c));
  return out;
}

void nonincreasing_sequences(int parts, int total, int max_part, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int d = std::min(max_part, total - 3 * (parts - 1)); d >= 3; --d) {
    if (d * parts < total) break;
    cur.push_back(d);
    nonincreasing_sequences(parts - 1, total - d, d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Incidence::Incidence(const OrientedGraph& g) {
  const auto n = static_cast<std::size_t>(half_edge_bound(g));
  vertex_of.assign(n, -1);
  position.assign(n, -1);
  partner.assign(n, -1);
  edge_of.assign(n, -1);
  next.assign(n, -1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& list = g.vertices[v];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto h = static_cast<std::size_t>(list[i]);
      vertex_of[h] = static_cast<int>(v);
      position[h] = static_cast<int>(i);
      next[h] = list[(i + 1) % list.size()];
    }
  }
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto [a, b] = g.edges[k];
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
    edge_of[static_cast<std::size_t>(a)] = static_cast<int>(k);
    edge_of[static_cast<std::size_t>(b)] = static_cast<int>(k);
  }
}

void validate_structure(const OrientedGraph& g, StructureRules rules) {
  const int n = g.half_edge_count();
  std::vector<int> on_vertex(static_cast<std::size_t>(n), 0), on_edge(static_cast<std::size_t>(n), 0);
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    for (int h : g.vertices[v]) {
      if (h < 0 || h >= n)
        throw StructureError("half-edge " + std::to_string(h) + " at vertex " + std::to_string(v) +
                             " is outside 0.." + std::to_string(n - 1));
      if (++on_vertex[static_cast<std::size_t>(h)] > 1)
        throw StructureError("half-edge " + std::to_string(h) + " appears at more than one vertex slot");
    }
  for (const auto& e : g.edges)
    for (int h : e) {
      if (h < 0 || h >= n)
        throw StructureError("edge endpoint " + std::to_string(h) + " is outside 0.." + std::to_string(n - 1));
      if (++on_edge[static_cast<std::size_t>(h)] > 1)
        throw StructureError("half-edge " + std::to_string(h) + " belongs to more than one edge");
    }
  if (!rules.external)
    for (int h = 0; h < n; ++h)
      if (!on_vertex[static_cast<std::size_t>(h)])
        throw StructureError("half-edge " + std::to_string(h) + " is not attached to a vertex");
  if (g.vertices.empty()) throw StructureError("graph has no vertices");
  if (rules.trivalent)
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      if (g.vertices[v].size() < 3)
        throw StructureError("vertex " + std::to_string(v) + " has valence " + std::to_string(g.vertices[v].size()) +
                             " < 3");
  if (rules.connected && !is_connected(g)) throw StructureError("graph is disconnected");
}

bool is_connected(const OrientedGraph& g) {
  const int v = g.vertex_count();
  if (v == 0) return true;
  const Incidence inc(g);
  std::vector<int> parent(static_cast<std::size_t>(v));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int components = v;
  for (const auto& e : g.edges) {
    const int a = inc.vertex_of[static_cast<std::size_t>(e[0])], b = inc.vertex_of[static_cast<std::size_t>(e[1])];
    if (a < 0 || b < 0) continue;
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --components;
    }
  }
  return components == 1;
}

bool has_loop(const OrientedGraph& g) {
  const Incidence inc(g);
  for (const auto& e : g.edges) {
    const int a = inc.vertex_of[static_cast<std::size_t>(e[0])];
    if (a >= 0 && a == inc.vertex_of[static_cast<std::size_t>(e[1])]) return true;
  }
  return false;
}

int faces(const OrientedGraph& g) {
  if (g.kind != GraphKind::ribbon) throw StructureError("faces need a ribbon graph");
  validate_structure(g, {.trivalent = false, .connected = false});
  const Incidence inc(g);
  const auto n = static_cast<std::size_t>(g.half_edge_count());
  std::vector<bool> seen(n, false);
  int count = 0;
  for (std::size_t h = 0; h < n; ++h) {
    if (seen[h]) continue;
    ++count;
    for (std::size_t x = h; !seen[x];
         x = static_cast<std::size_t>(inc.next[static_cast<std::size_t>(inc.partner[x])]))
      seen[x] = true;
  }
  return count;
}

int genus(const OrientedGraph& g) {
  const int chi = g.vertex_count() - g.edge_count() + faces(g);
  return (2 - chi) / 2;
}

CanonicalGraph canonicalize(const OrientedGraph& g) {
  validate_structure(g, {.trivalent = true, .connected = true});
  return g.kind == GraphKind::ribbon ? canonicalize_ribbon(g) : canonicalize_ordinary(g);
}

OrientedGraph graph_from_id(const std::string& id) {
  const auto fail = [&]() -> ParseError { return ParseError(0, "malformed graph id '" + id + "'"); };
  OrientedGraph g;
  if (id.size() > 1 && id[0] == 'O') {
    const auto colon = id.find(':');
    if (colon == std::string::npos) throw fail();
    const auto vs = parse_int_list(id.substr(1, colon - 1), ',', id);
    if (vs.size() != 1 || vs[0] < 1) throw fail();
    PairCode code;
    for (const auto& item : split(id.substr(colon + 1), ',')) {
      if (item.empty()) throw fail();
      auto [a, b] = parse_pair(item, id);
      if (a < 0 || b < a || b >= vs[0]) throw fail();
      code.emplace_back(a, b);
    }
    if (!std::is_sorted(code.begin(), code.end())) throw fail();
    g = ordinary_from_code(vs[0], code);
  } else if (id.rfind("R:", 0) == 0) {
    const auto parts = split(id.substr(2), ':');
    if (parts.size() != 2) throw fail();
    g.kind = GraphKind::ribbon;
    for (const auto& v : split(parts[0], '/')) g.vertices.push_back(parse_int_list(v, ',', id));
    for (const auto& item : split(parts[1], ',')) {
      if (item.empty()) throw fail();
      auto [a, b] = parse_pair(item, id);
      g.edges.push_back({a, b});
    }
  } else {
    throw fail();
  }
  try {
    const CanonicalGraph c = canonicalize(g);
    if (c.id != id) throw fail();
  } catch (const StructureError&) {
    throw fail();
  }
  return g;
}

std::pair<OrientedGraph, int> contract_edge(const OrientedGraph& g, int edge) {
  if (edge < 0 || edge >= g.edge_count()) throw StructureError("edge " + std::to_string(edge) + " does not exist");
  const Incidence inc(g);
  const auto [a, b] = g.edges[static_cast<std::size_t>(edge)];
  int u = inc.vertex_of[static_cast<std::size_t>(a)];
  const int w = inc.vertex_of[static_cast<std::size_t>(b)];
  if (u < 0 || w < 0) throw StructureError("edge " + std::to_string(edge) + " has an external end");
  if (u == w) throw NotContractibleError("edge " + std::to_string(edge) + " is a loop");

  OrientedGraph out = g;
  int sign = 1;
  const int last = g.vertex_count() - 1;
  if (w != last) {
    std::swap(out.vertices[static_cast<std::size_t>(w)], out.vertices[static_cast<std::size_t>(last)]);
    sign = -1;
    if (u == last) u = w;
  }
  auto after = [](const std::vector<int>& list, int h) {
    const auto pos = static_cast<std::size_t>(std::find(list.begin(), list.end(), h) - list.begin());
    std::vector<int> rest;
    for (std::size_t i = 1; i < list.size(); ++i) rest.push_back(list[(pos + i) % list.size()]);
    return rest;
  };
  std::vector<int> merged = after(out.vertices[static_cast<std::size_t>(u)], a);
  const std::vector<int> head_rest = after(out.vertices[static_cast<std::size_t>(last)], b);
  merged.insert(merged.end(), head_rest.begin(), head_rest.end());
  out.vertices[static_cast<std::size_t>(u)] = std::move(merged);
  out.vertices.pop_back();
  out.edges.erase(out.edges.begin() + edge);

  auto compact = [lo = std::min(a, b), hi = std::max(a, b)](int h) { return h - (h > lo) - (h > hi); };
  for (auto& v : out.vertices)
    for (int& h : v) h = compact(h);
  for (auto& e : out.edges)
    for (int& h : e) h = compact(h);
  return {std::move(out), sign};
}

OrientedGraph split_vertex(const OrientedGraph& g, int vertex, const std::vector<int>& moved) {
  if (vertex < 0 || vertex >= g.vertex_count())
    throw StructureError("vertex " + std::to_string(vertex) + " does not exist");
  const auto& list = g.vertices[static_cast<std::size_t>(vertex)];
  std::vector<int> kept;
  if (g.kind == GraphKind::ribbon && !moved.empty()) {
    const auto start = std::find(list.begin(), list.end(), moved.front());
    if (start == list.end()) throw StructureError("moved half-edges must sit at the split vertex");
    const auto pos = static_cast<std::size_t>(start - list.begin());
    for (std::size_t i = 0; i < list.size(); ++i) {
      const int h = list[(pos + i) % list.size()];
      if (i < moved.size()) {
        if (h != moved[i]) throw StructureError("moved half-edges must form a contiguous arc");
      } else {
        kept.push_back(h);
      }
    }
    if (moved.size() > list.size()) throw StructureError("moved half-edges must form a contiguous arc");
  } else {
    for (int h : moved)
      if (std::find(list.begin(), list.end(), h) == list.end())
        throw StructureError("moved half-edges must sit at the split vertex");
    for (int h : list)
      if (std::find(moved.begin(), moved.end(), h) == moved.end()) kept.push_back(h);
  }
  OrientedGraph out = g;
  const int a = g.half_edge_count(), b = a + 1;
  kept.push_back(a);
  out.vertices[static_cast<std::size_t>(vertex)] = std::move(kept);
  std::vector<int> fresh{b};
  fresh.insert(fresh.end(), moved.begin(), moved.end());
  out.vertices.push_back(std::move(fresh));
  out.edges.push_back({a, b});
  return out;
}

OrientedGraph relabel_vertices(const OrientedGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count()) throw StructureError("relabeling has the wrong size");
  static_cast<void>(Permutation(perm));  // validates bijectivity
  OrientedGraph out = g;
  for (std::size_t i = 0; i < perm.size(); ++i)
    out.vertices[static_cast<std::size_t>(perm[i])] = g.vertices[i];
  return out;
}

OrientedGraph flip_arrow(const OrientedGraph& g, int edge) {
  OrientedGraph out = g;
  auto& e = out.edges.at(static_cast<std::size_t>(edge));
  std::swap(e[0], e[1]);
  return out;
}

OrientedGraph rotate_vertex(const OrientedGraph& g, int vertex, int steps) {
  OrientedGraph out = g;
  auto& list = out.vertices.at(static_cast<std::size_t>(vertex));
  if (list.empty()) return out;
  const int n = static_cast<int>(list.size());
  std::rotate(list.begin(), list.begin() + ((steps % n) + n) % n, list.end());
  return out;
}

OrientedGraph permute_edges(const OrientedGraph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.edge_count()) throw StructureError("edge order has the wrong size");
  static_cast<void>(Permutation(order));
  OrientedGraph out = g;
  for (std::size_t i = 0; i < order.size(); ++i) out.edges[i] = g.edges[static_cast<std::size_t>(order[i])];
  return out;
}

std::vector<CanonicalGraph> enumerate_ordinary_at(int chi, int edges, bool loop_free) {
  const int v = edges + chi;
  if (v < 1 || edges < 1 || 2 * edges < 3 * v) return {};
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < v; ++i)
    for (int j = i; j < v; ++j)
      if (!(loop_free && i == j)) pairs.emplace_back(i, j);

  std::map<std::string, CanonicalGraph> found;
  std::vector<int> degree(static_cast<std::size_t>(v), 0);
  std::vector<std::pair<int, int>> chosen;
  auto deficit = [&]() {
    int d = 0;
    for (int x : degree) d += std::max(0, 3 - x);
    return d;
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    const int remaining = edges - static_cast<int>(chosen.size());
    if (deficit() > 2 * remaining) return;
    if (remaining == 0) {
      OrientedGraph g;
      g.kind = GraphKind::ordinary;
      g.vertices.assign(static_cast<std::size_t>(v), {});
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        g.vertices[static_cast<std::size_t>(chosen[k].first)].push_back(static_cast<int>(2 * k));
        g.vertices[static_cast<std::size_t>(chosen[k].second)].push_back(static_cast<int>(2 * k + 1));
        g.edges.push_back({static_cast<int>(2 * k), static_cast<int>(2 * k + 1)});
      }
      if (is_connected(g)) collect(found, g);
      return;
    }
    for (std::size_t p = from; p < pairs.size(); ++p) {
      const auto [i, j] = pairs[p];
      chosen.push_back(pairs[p]);
      ++degree[static_cast<std::size_t>(i)];
      ++degree[static_cast<std::size_t>(j)];
      self(self, p);
      --degree[static_cast<std::size_t>(i)];
      --degree[static_cast<std::size_t>(j)];
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return sorted_values(found);
}

std::vector<CanonicalGraph> enumerate_ordinary(int chi, int max_edges, bool loop_free) {
  std::vector<CanonicalGraph> out;
  for (int e = 1; e <= max_edges; ++e) {
    auto part = enumerate_ordinary_at(chi, e, loop_free);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<CanonicalGraph> enumerate_ribbon_at(int genus_value, int punctures, int edges) {
  const int v = edges + 2 - 2 * genus_value - punctures;
  if (v < 1 || edges < 1 || punctures < 1 || 2 * edges < 3 * v) return {};
  const int n = 2 * edges;
  std::vector<std::vector<int>> sequences;
  std::vector<int> cur;
  nonincreasing_sequences(v, n, n, cur, sequences);

  std::map<std::string, CanonicalGraph> found;
  for (const auto& seq : sequences) {
    OrientedGraph base;
    base.kind = GraphKind::ribbon;
    int next_id = 0;
    for (int d : seq) {
      std::vector<int> list(static_cast<std::size_t>(d));
      std::iota(list.begin(), list.end(), next_id);
      next_id += d;
      base.vertices.push_back(std::move(list));
    }
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    auto rec = [&](auto&& self) -> void {
      int first = -1;
      for (int h = 0; h < n; ++h)
        if (mate[static_cast<std::size_t>(h)] < 0) {
          first = h;
          break;
        }
      if (first < 0) {
        OrientedGraph g = base;
        for (int h = 0; h < n; ++h)
          if (h < mate[static_cast<std::size_t>(h)]) g.edges.push_back({h, mate[static_cast<std::size_t>(h)]});
        if (is_connected(g) && faces(g) == punctures) collect(found, g);
        return;
      }
      for (int h = first + 1; h < n; ++h) {
        if (mate[static_cast<std::size_t>(h)] >= 0) continue;
        mate[static_cast<std::size_t>(first)] = h;
        mate[static_cast<std::size_t>(h)] = first;
        self(self);
        mate[static_cast<std::size_t>(first)] = -1;
        mate[static_cast<std::size_t>(h)] = -1;
      }
    };
    rec(rec);
  }
  return sorted_values(found);
}

std::vector<CanonicalGraph> enumerate_ribbon(int genus_value, int punctures, int max_edges) {
  std::vector<CanonicalGraph> out;
  for (int e = 1; e <= max_edges; ++e) {
    auto part = enumerate_ribbon_at(genus_value, punctures, e);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace graphcx
