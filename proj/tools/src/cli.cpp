#include "graphcx/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>

#include "graphcx/algebra.hpp"
#include "graphcx/complex.hpp"
#include "graphcx/errors.hpp"
#include "graphcx/io.hpp"
#include "graphcx/state_sum.hpp"
#include "graphcx/zoo.hpp"

namespace graphcx::cli {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct LoadedAlgebra {
  AlgebraSpec<DualScalar> spec;
  bool dual = false;
};

LoadedAlgebra load_algebra(const std::string& arg) {
  if (is_zoo_name(arg)) return {zoo_dual(arg), zoo_is_dual(arg)};
  AlgebraFile f = read_algebra_file(arg);
  return {std::move(f.spec), f.dual};
}

OrientedGraph load_graph(const std::string& arg) {
  if (!std::filesystem::exists(arg) && (arg.rfind("O", 0) == 0 || arg.rfind("R:", 0) == 0))
    return graph_from_id(arg);
  return read_graph_file(arg);
}

struct ComplexArgs {
  std::string kind;
  std::optional<int> chi, genus, punctures;

  void attach(CLI::App* cmd) {
    cmd->add_option("kind", kind, "ordinary or ribbon")->required()->check(CLI::IsMember({"ordinary", "ribbon"}));
    cmd->add_option("--chi", chi, "Euler characteristic v - e (ordinary)");
    cmd->add_option("--genus", genus, "genus (ribbon)");
    cmd->add_option("--punctures", punctures, "number of faces (ribbon)");
  }

  ComplexParams params() const {
    if (kind == "ordinary") {
      if (!chi) throw ParseError(0, "ordinary complexes need --chi");
      if (genus || punctures) throw ParseError(0, "--genus/--punctures apply to ribbon complexes");
      if (*chi > -1) throw ParseError(0, "--chi must be at most -1");
      return ComplexParams::ordinary(*chi);
    }
    if (!genus || !punctures) throw ParseError(0, "ribbon complexes need --genus and --punctures");
    if (chi) throw ParseError(0, "--chi applies to ordinary complexes");
    if (*genus < 0 || *punctures < 1) throw ParseError(0, "need genus >= 0 and punctures >= 1");
    if (2 - 2 * *genus - *punctures >= 0) throw ParseError(0, "need 2 - 2 genus - punctures < 0");
    return ComplexParams::ribbon(*genus, *punctures);
  }
};

std::string sign_text(int s) { return s > 0 ? "+1" : s < 0 ? "-1" : "0"; }

int max_edges_or_default(std::optional<int> requested, const ComplexParams& p) {
  return requested.value_or(p.complete_max_edges());
}

template <class F>
int report_relations(const AlgebraSpec<F>& spec, int n_max, std::ostream& out) {
  const auto bad = check_relations(spec, n_max);
  if (bad.empty()) {
    out << "RELATIONS HOLD (" << to_string(spec.flavor) << ", n <= " << n_max << ")\n";
    return kOk;
  }
  for (const auto& v : bad) {
    out << "VIOLATION n=" << v.n << " indices=(";
    for (std::size_t i = 0; i < v.indices.size(); ++i) out << (i ? " " : "") << v.indices[i] + 1;
    out << ") value=" << to_string(v.value) << '\n';
  }
  out << bad.size() << " violating tuples\n";
  return kViolation;
}

template <class F>
int run_cycle(const AlgebraSpec<F>& spec, const ComplexParams& p, int max_edges, const CycleOptions& opt,
              std::ostream& out) {
  const Chain<F> z = cycle_chain(spec, p, max_edges, opt);
  if (z.is_zero()) out << "# zero chain\n";
  out << serialize_chain(z);
  return kOk;
}

template <class F>
int run_verify(const Chain<F>& z, const ComplexParams& p, int max_edges, std::ostream& out, std::ostream& err) {
  const CycleReport<F> report = verify_cycle(z, p, max_edges);
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  if (report.verified) {
    out << "CYCLE VERIFIED\n";
    return kOk;
  }
  out << "CYCLE FAILED\n";
  for (const auto& d : report.degrees)
    for (const auto& [id, v] : d.boundary.terms) out << "boundary e=" << d.edges << ": " << to_string(v) << ' ' << id << '\n';
  return kViolation;
}

Chain<Scalar> scalar_chain(const Chain<DualScalar>& c) {
  Chain<Scalar> out;
  for (const auto& [id, v] : c.terms) {
    if (!is_zero(v.t)) throw StructureError("chain has a nonzero t part");
    out.add(id, v.value);
  }
  return out;
}

bool chain_is_dual(const Chain<DualScalar>& c) {
  for (const auto& [id, v] : c.terms)
    if (!is_zero(v.t)) return true;
  return false;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph complexes and the cycles induced by cyclic A-infinity / L-infinity algebras"};
  app.name("graphcx");
  app.require_subcommand(1);

  int code = kOk;
  std::function<int()> action;

  // validate
  std::string algebra;
  auto* validate = app.add_subcommand("validate", "Check every invariant of an algebra spec");
  validate->add_option("algebra", algebra, "algebra file or zoo name")->required();
  validate->callback([&] {
    action = [&] {
      const auto a = load_algebra(algebra);
      const auto bad = validate_spec(a.spec);
      if (bad.empty()) {
        out << "VALID\n";
        return kOk;
      }
      for (const auto& v : bad) out << "VIOLATION " << v.invariant << ": " << v.detail << '\n';
      return kViolation;
    };
  });

  // check-relations
  int n_max = 4;
  auto* relations = app.add_subcommand("check-relations", "Evaluate the defining relations up to n_max");
  relations->add_option("algebra", algebra, "algebra file or zoo name")->required();
  relations->add_option("--n-max", n_max, "largest n to check (>= 3)")->capture_default_str();
  relations->callback([&] {
    action = [&] {
      if (n_max < 3) throw ParseError(0, "--n-max must be at least 3");
      const auto a = load_algebra(algebra);
      return a.dual ? report_relations(a.spec, n_max, out) : report_relations(to_scalar(a.spec), n_max, out);
    };
  });

  // enumerate
  ComplexArgs cx_enum;
  std::optional<int> max_edges;
  bool loop_free = false;
  auto* enumerate = app.add_subcommand("enumerate", "List canonical graphs of a complex");
  cx_enum.attach(enumerate);
  enumerate->add_option("--max-edges", max_edges, "largest edge count");
  enumerate->add_flag("--loop-free", loop_free, "skip graphs with loops (ordinary only)");
  enumerate->callback([&] {
    action = [&] {
      const ComplexParams p = cx_enum.params();
      const int top = max_edges_or_default(max_edges, p);
      const auto graphs = p.kind == GraphKind::ordinary ? enumerate_ordinary(p.chi, top, loop_free)
                                                        : enumerate_ribbon(p.genus, p.punctures, top);
      int zeros = 0;
      for (const auto& c : graphs) {
        if (loop_free && has_loop(c.representative)) continue;
        out << "e=" << c.representative.edge_count() << " sign=" << sign_text(c.sign) << " aut=" << c.automorphisms
            << ' ' << c.id;
        if (c.sign == 0) {
          out << " zero-orientation";
          ++zeros;
        }
        out << '\n';
      }
      out << graphs.size() << " classes, " << zeros << " zero-orientation\n";
      return kOk;
    };
  });

  // boundary
  std::string graph_arg;
  auto* bd = app.add_subcommand("boundary", "Boundary of one oriented graph");
  bd->add_option("graph", graph_arg, "graph file or canonical id")->required();
  bd->callback([&] {
    action = [&] {
      OrientedGraph g = load_graph(graph_arg);
      validate_structure(g, {.trivalent = true, .connected = true});
      const Chain<Scalar> c = boundary(g);
      if (c.is_zero()) out << "# zero chain\n";
      out << serialize_chain(c);
      return kOk;
    };
  });

  // homology
  ComplexArgs cx_hom;
  auto* hom = app.add_subcommand("homology", "Betti numbers by edge count");
  cx_hom.attach(hom);
  hom->add_option("--max-edges", max_edges, "largest edge count");
  hom->callback([&] {
    action = [&] {
      const ComplexParams p = cx_hom.params();
      const auto degrees = homology_ranks(p, max_edges_or_default(max_edges, p));
      if (degrees.empty()) out << "# no generators\n";
      for (const auto& d : degrees) {
        out << "e=" << d.edges << " dim=" << d.dimension << " rank_out=" << d.rank_out << " rank_in=" << d.rank_in
            << " betti=" << d.betti;
        if (d.truncated) out << " truncated";
        out << '\n';
      }
      return kOk;
    };
  });

  // cycle / verify-cycle
  ComplexArgs cx_cycle;
  bool literal = false;
  int threads = 1;
  std::string chain_file;
  auto* cycle = app.add_subcommand("cycle", "The chain Z induced by an algebra");
  auto* verify = app.add_subcommand("verify-cycle", "Check that the induced chain Z is a cycle");
  for (auto* cmd : {cycle, verify}) {
    cmd->add_option("algebra", algebra, "algebra file or zoo name")->required();
    cx_cycle.attach(cmd);
    cmd->add_option("--max-edges", max_edges, "largest edge count");
    cmd->add_flag("--literal", literal, "use Z(G) without the 1/|Aut G| weight");
    cmd->add_option("--threads", threads, "worker threads for the state sums")->check(CLI::PositiveNumber);
  }
  verify->add_option("--chain", chain_file, "verify this chain file instead of computing Z");
  cycle->callback([&] {
    action = [&] {
      const ComplexParams p = cx_cycle.params();
      const auto a = load_algebra(algebra);
      const CycleOptions opt{literal ? CycleNormalization::literal : CycleNormalization::automorphism, threads};
      const int top = max_edges_or_default(max_edges, p);
      return a.dual ? run_cycle(a.spec, p, top, opt, out) : run_cycle(to_scalar(a.spec), p, top, opt, out);
    };
  });
  verify->callback([&] {
    action = [&] {
      const ComplexParams p = cx_cycle.params();
      const auto a = load_algebra(algebra);
      const CycleOptions opt{literal ? CycleNormalization::literal : CycleNormalization::automorphism, threads};
      const int top = max_edges_or_default(max_edges, p);
      if (!chain_file.empty()) {
        const Chain<DualScalar> z = parse_chain(read_text_file(chain_file));
        return chain_is_dual(z) ? run_verify(z, p, top, out, err) : run_verify(scalar_chain(z), p, top, out, err);
      }
      if (a.dual) return run_verify(cycle_chain(a.spec, p, top, opt), p, top, out, err);
      return run_verify(cycle_chain(to_scalar(a.spec), p, top, opt), p, top, out, err);
    };
  });

  // expression
  auto* expr = app.add_subcommand("expression", "Symbolic contraction pattern of a graph or fragment");
  expr->add_option("graph", graph_arg, "graph file or canonical id")->required();
  expr->callback([&] {
    action = [&] {
      out << expression(load_graph(graph_arg)).to_string() << '\n';
      return kOk;
    };
  });

  // boundary-matrix
  ComplexArgs cx_mat;
  int edges = 0;
  auto* mat = app.add_subcommand("boundary-matrix", "Boundary C_e -> C_{e-1} in coordinate form");
  cx_mat.attach(mat);
  mat->add_option("--edges", edges, "source edge count e")->required();
  mat->callback([&] {
    action = [&] {
      out << serialize_matrix(boundary_matrix(cx_mat.params(), edges));
      return kOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    code = action ? action() : kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return code;
}

}  // namespace graphcx::cli
