#include "graphcx/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "graphcx/errors.hpp"

namespace graphcx {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream is{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(is, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

int parse_int(const std::string& tok, int line, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line, what + " must be an integer, got '" + tok + "'");
}

Scalar parse_rational(const std::string& tok, int line) {
  try {
    return parse_scalar(tok);
  } catch (const std::exception&) {
    throw ParseError(line, "'" + tok + "' is not a rational number");
  }
}

std::string format_index(const Index& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? " " : "") << idx[i] + 1;
  return os.str();
}

struct Entry {
  int line;
  int arity;
  Index idx;
  DualScalar value;
};

template <class F>
std::string serialize_impl(const AlgebraSpec<F>& spec, bool dual) {
  std::ostringstream os;
  os << "flavor " << to_string(spec.flavor) << '\n';
  os << "dim " << spec.dim() << '\n';
  os << "parities";
  for (const auto& p : spec.basis.parities()) os << ' ' << p.value();
  os << '\n';
  for (int r = 0; r < spec.inner.rows(); ++r) {
    os << "inner";
    for (int c = 0; c < spec.inner.cols(); ++c) os << ' ' << to_string(spec.inner(r, c));
    os << '\n';
  }
  os << "max-arity " << spec.max_arity << '\n';
  bool raw = false;
  for (const auto& [n, t] : spec.lower) {
    if (!symmetry_violations(t, spec.basis, spec.flavor, "d").empty()) raw = true;
    for (const auto& [idx, v] : t.entries())
      if (!symmetry_orbit(idx, spec.basis, spec.flavor).consistent) raw = true;
  }
  if (raw) os << "completion none\n";
  if (dual) os << "# values are dual numbers a+bt with t^2 = 0\n";
  for (const auto& [n, t] : spec.lower)
    for (const auto& [idx, v] : t.entries()) {
      if (!raw) {
        const auto orbit = symmetry_orbit(idx, spec.basis, spec.flavor);
        Index least = idx;
        for (const auto& [img, s] : orbit.images) least = std::min(least, img);
        if (least != idx) continue;
      }
      os << "d " << n << " : " << format_index(idx) << " = " << to_string(v) << '\n';
    }
  return os.str();
}

}  // namespace

DualScalar parse_dual(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (text.back() != 't') return DualScalar(parse_scalar(text));
  const std::string body = text.substr(0, text.size() - 1);
  // split "a+b" / "a-b" at the last sign that is not leading
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;)
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  std::string value_part, t_part;
  if (split == std::string::npos) {
    t_part = body;
  } else {
    value_part = body.substr(0, split);
    t_part = body.substr(split);
  }
  if (t_part.empty() || t_part == "+") t_part = "1";
  if (t_part == "-") t_part = "-1";
  return DualScalar(value_part.empty() ? Scalar(0) : parse_scalar(value_part), parse_scalar(t_part));
}

AlgebraFile parse_algebra(std::string_view text) {
  std::optional<Flavor> flavor;
  std::optional<int> dim, max_arity;
  std::optional<std::vector<Parity>> parities;
  std::vector<std::vector<Scalar>> inner_rows;
  bool complete = true;
  std::vector<Entry> entries;
  int last_line = 0;

  for (const auto& line : tokenize(text)) {
    const auto& t = line.tokens;
    const int ln = line.number;
    last_line = ln;
    const std::string& key = t[0];
    if (key == "flavor") {
      if (t.size() != 2) throw ParseError(ln, "expected 'flavor <a-infinity|l-infinity>'");
      try {
        flavor = parse_flavor(t[1]);
      } catch (const FlavorError& e) {
        throw ParseError(ln, e.what());
      }
    } else if (key == "dim") {
      if (t.size() != 2) throw ParseError(ln, "expected 'dim <n>'");
      dim = parse_int(t[1], ln, "dim");
      if (*dim < 1) throw ParseError(ln, "dim must be positive");
    } else if (key == "parities") {
      std::vector<Parity> ps;
      for (std::size_t i = 1; i < t.size(); ++i) {
        const int p = parse_int(t[i], ln, "parity");
        if (p != 0 && p != 1) throw ParseError(ln, "parities are 0 or 1");
        ps.emplace_back(p);
      }
      parities = std::move(ps);
    } else if (key == "inner") {
      std::vector<Scalar> row;
      for (std::size_t i = 1; i < t.size(); ++i) row.push_back(parse_rational(t[i], ln));
      if (dim && static_cast<int>(row.size()) != *dim)
        throw ParseError(ln, "inner row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(*dim));
      inner_rows.push_back(std::move(row));
    } else if (key == "max-arity") {
      if (t.size() != 2) throw ParseError(ln, "expected 'max-arity <n>'");
      max_arity = parse_int(t[1], ln, "max-arity");
      if (*max_arity < 2) throw ParseError(ln, "max-arity must be at least 2");
    } else if (key == "completion") {
      if (t.size() != 2 || (t[1] != "none" && t[1] != "symmetric"))
        throw ParseError(ln, "expected 'completion <none|symmetric>'");
      complete = t[1] == "symmetric";
    } else if (key == "d") {
      if (t.size() < 5 || t[2] != ":" || t[t.size() - 2] != "=")
        throw ParseError(ln, "expected 'd <arity> : <indices> = <value>'");
      const int arity = parse_int(t[1], ln, "arity");
      if (arity < 2) throw ParseError(ln, "constants need arity >= 2 (d_1 must vanish)");
      Index idx;
      for (std::size_t i = 3; i + 2 < t.size(); ++i) idx.push_back(parse_int(t[i], ln, "index") - 1);
      if (static_cast<int>(idx.size()) != arity + 1)
        throw ParseError(ln, "arity " + std::to_string(arity) + " needs " + std::to_string(arity + 1) +
                                 " indices, got " + std::to_string(idx.size()));
      DualScalar value;
      try {
        value = parse_dual(t.back());
      } catch (const std::exception&) {
        throw ParseError(ln, "'" + t.back() + "' is not a number");
      }
      entries.push_back({ln, arity, std::move(idx), std::move(value)});
    } else {
      throw ParseError(ln, "unknown directive '" + key + "'");
    }
  }

  if (!flavor) throw ParseError(last_line, "missing 'flavor'");
  if (!dim) throw ParseError(last_line, "missing 'dim'");
  if (!parities) throw ParseError(last_line, "missing 'parities'");
  if (static_cast<int>(parities->size()) != *dim)
    throw ParseError(last_line, "parities lists " + std::to_string(parities->size()) + " values for dim " +
                                    std::to_string(*dim));
  if (static_cast<int>(inner_rows.size()) != *dim)
    throw ParseError(last_line, "expected " + std::to_string(*dim) + " inner rows, got " +
                                    std::to_string(inner_rows.size()));

  AlgebraFile out;
  auto& spec = out.spec;
  spec.flavor = *flavor;
  spec.basis = GradedBasis(*parities);
  spec.inner = Matrix::from_rows(inner_rows);
  int top = 2;
  for (const auto& e : entries) top = std::max(top, e.arity);
  if (max_arity && *max_arity < top)
    throw ParseError(last_line, "max-arity " + std::to_string(*max_arity) + " is below listed arity " +
                                    std::to_string(top));
  spec.max_arity = max_arity.value_or(top);

  std::map<std::pair<int, Index>, std::pair<DualScalar, int>> assigned;
  auto assign = [&](int arity, const Index& idx, const DualScalar& v, int ln) {
    auto [it, inserted] = assigned.try_emplace({arity, idx}, v, ln);
    if (!inserted && !(it->second.first == v))
      throw ParseError(ln, "d_{" + format_index(idx) + "} = " + to_string(v) + " conflicts with " +
                               to_string(it->second.first) + " implied by line " +
                               std::to_string(it->second.second));
  };
  for (const auto& e : entries) {
    for (int i : e.idx)
      if (i < 0 || i >= *dim) throw ParseError(e.line, "index out of range 1.." + std::to_string(*dim));
    if (!complete) {
      assign(e.arity, e.idx, e.value, e.line);
      continue;
    }
    const auto orbit = symmetry_orbit(e.idx, spec.basis, spec.flavor);
    if (!orbit.consistent && !is_zero(e.value))
      throw ParseError(e.line, "d_{" + format_index(e.idx) + "} is forced to vanish by the " +
                                   to_string(spec.flavor) + " symmetry");
    for (const auto& [img, s] : orbit.images) assign(e.arity, img, s > 0 ? e.value : -e.value, e.line);
  }
  for (const auto& [key, val] : assigned) {
    auto& tensor = spec.lower.try_emplace(key.first, key.first + 1, *dim).first->second;
    tensor.set(key.second, val.first);
    if (!is_zero(val.first.t)) out.dual = true;
  }
  std::erase_if(spec.lower, [](const auto& kv) { return kv.second.empty(); });
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AlgebraFile read_algebra_file(const std::string& path) { return parse_algebra(read_text_file(path)); }

AlgebraSpec<Scalar> to_scalar(const AlgebraSpec<DualScalar>& spec) {
  AlgebraSpec<Scalar> out;
  out.flavor = spec.flavor;
  out.basis = spec.basis;
  out.inner = spec.inner;
  out.max_arity = spec.max_arity;
  for (const auto& [n, t] : spec.lower) {
    Tensor<Scalar> s(t.rank(), t.dim());
    for (const auto& [idx, v] : t.entries()) {
      if (!is_zero(v.t)) throw StructureError("constants have a nonzero t part");
      s.set(idx, v.value);
    }
    out.lower.emplace(n, std::move(s));
  }
  return out;
}

std::string serialize_algebra(const AlgebraSpec<Scalar>& spec) { return serialize_impl(spec, false); }
std::string serialize_algebra(const AlgebraSpec<DualScalar>& spec) {
  bool dual = false;
  for (const auto& [n, t] : spec.lower)
    for (const auto& [idx, v] : t.entries()) dual = dual || !is_zero(v.t);
  return serialize_impl(spec, dual);
}

OrientedGraph parse_graph(std::string_view text) {
  OrientedGraph g;
  bool have_kind = false;
  int last_line = 0;
  for (const auto& line : tokenize(text)) {
    const auto& t = line.tokens;
    last_line = line.number;
    if (t[0] == "kind") {
      if (t.size() != 2) throw ParseError(line.number, "expected 'kind <ribbon|ordinary>'");
      try {
        g.kind = parse_graph_kind(t[1]);
      } catch (const StructureError& e) {
        throw ParseError(line.number, e.what());
      }
      have_kind = true;
    } else if (t[0] == "v") {
      std::vector<int> hs;
      for (std::size_t i = 1; i < t.size(); ++i) hs.push_back(parse_int(t[i], line.number, "half-edge"));
      g.vertices.push_back(std::move(hs));
    } else if (t[0] == "e") {
      if (t.size() != 3) throw ParseError(line.number, "expected 'e <tail> <head>'");
      g.edges.push_back({parse_int(t[1], line.number, "half-edge"), parse_int(t[2], line.number, "half-edge")});
    } else {
      throw ParseError(line.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (!have_kind) throw ParseError(last_line, "missing 'kind'");
  try {
    validate_structure(g, {.trivalent = false, .connected = false, .external = true});
  } catch (const StructureError& e) {
    throw ParseError(0, e.what());
  }
  return g;
}

OrientedGraph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

std::string serialize_graph(const OrientedGraph& g) {
  std::ostringstream os;
  os << "kind " << to_string(g.kind) << '\n';
  for (const auto& v : g.vertices) {
    os << 'v';
    for (int h : v) os << ' ' << h;
    os << '\n';
  }
  for (const auto& e : g.edges) os << "e " << e[0] << ' ' << e[1] << '\n';
  return os.str();
}

template <class F>
std::string serialize_chain(const Chain<F>& c) {
  std::ostringstream os;
  for (const auto& [id, v] : c.terms) os << to_string(v) << ' ' << id << '\n';
  return os.str();
}

template std::string serialize_chain(const Chain<Scalar>&);
template std::string serialize_chain(const Chain<DualScalar>&);

Chain<DualScalar> parse_chain(std::string_view text) {
  Chain<DualScalar> c;
  for (const auto& line : tokenize(text)) {
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected '<coefficient> <graph id>'");
    DualScalar v;
    try {
      v = parse_dual(line.tokens[0]);
    } catch (const std::exception&) {
      throw ParseError(line.number, "'" + line.tokens[0] + "' is not a number");
    }
    try {
      graph_from_id(line.tokens[1]);
    } catch (const ParseError& e) {
      throw ParseError(line.number, e.what());
    }
    c.add(line.tokens[1], v);
  }
  return c;
}

std::string serialize_matrix(const BoundaryMatrix& m) {
  std::ostringstream os;
  os << "% rows " << m.rows.size() << " cols " << m.cols.size() << '\n';
  for (std::size_t i = 0; i < m.rows.size(); ++i) os << "% row " << i + 1 << ' ' << m.rows[i] << '\n';
  for (std::size_t j = 0; j < m.cols.size(); ++j) os << "% col " << j + 1 << ' ' << m.cols[j] << '\n';
  for (int i = 0; i < m.entries.rows(); ++i)
    for (int j = 0; j < m.entries.cols(); ++j)
      if (!is_zero(m.entries(i, j))) os << i + 1 << ' ' << j + 1 << ' ' << to_string(m.entries(i, j)) << '\n';
  return os.str();
}

}  // namespace graphcx
