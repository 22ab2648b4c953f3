// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "graphcx/complex.hpp"
#include "graphcx/state_sum.hpp"
#include "graphcx/zoo.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace graphcx;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail.str("");
      detail << "first failure: " << what;
    }
  }
};

AlgebraSpec<Scalar> gl2() {
  AlgebraSpec<Scalar> s = eta_transport(matrix_commutator(2));
  s.max_arity = zoo_max_arity;
  return s;
}

const std::vector<ComplexParams> primary_ordinary = {ComplexParams::ordinary(-1), ComplexParams::ordinary(-2)};
const std::vector<ComplexParams> primary_ribbon = {ComplexParams::ribbon(0, 3), ComplexParams::ribbon(1, 1)};
const std::vector<ComplexParams> extra_ribbon = {ComplexParams::ribbon(0, 4), ComplexParams::ribbon(1, 2)};

std::vector<std::pair<ComplexParams, int>> all_complexes() {
  std::vector<std::pair<ComplexParams, int>> out;
  for (const auto& p : primary_ordinary) out.push_back({p, 6});
  for (const auto& p : primary_ribbon) out.push_back({p, 6});
  out.push_back({ComplexParams::ordinary(-3), 9});
  for (const auto& p : extra_ribbon) out.push_back({p, 6});
  return out;
}

template <class F>
bool chain_has_loop(const Chain<F>& c) {
  for (const auto& [id, v] : c.terms)
    if (has_loop(graph_from_id(id))) return true;
  return false;
}

void boundary_squares(Outcome& o) {
  int products = 0, nontrivial = 0;
  // the required complexes never have two consecutive nonzero boundaries;
  // these two do
  auto complexes = all_complexes();
  complexes.push_back({ComplexParams::ordinary(-4), 9});
  complexes.push_back({ComplexParams::ribbon(2, 1), 8});
  for (const auto& [p, top] : complexes)
    for (int e = 2; e <= std::min(top, p.complete_max_edges()); ++e) {
      const auto upper = boundary_matrix(p, e), lower = boundary_matrix(p, e - 1);
      o.require(lower.cols == upper.rows, p.describe() + " e=" + std::to_string(e) + " layout");
      o.require((lower.entries * upper.entries).is_zero(), p.describe() + " e=" + std::to_string(e));
      ++products;
      if (!upper.entries.is_zero() && !lower.entries.is_zero()) ++nontrivial;
    }
  o.detail << products << " composites zero, " << nontrivial << " with both factors nonzero";
  o.require(nontrivial > 0, "every composite was trivially zero");
}

void cycles(Outcome& o) {
  const auto so3 = zoo("so3");
  const auto m2k = zoo("m2k");
  int degrees = 0, terms = 0;
  auto run = [&](const auto& spec, const ComplexParams& p, int top, const std::string& label) {
    const auto z = cycle_chain(spec, p, top);
    const auto r = verify_cycle(z, p, top);
    o.require(r.verified, label + " on " + p.describe());
    for (const auto& d : r.degrees) degrees += d.checked;
    terms += static_cast<int>(z.terms.size());
  };
  for (const auto& p : primary_ordinary) run(so3, p, 6, "so3");
  for (const auto& p : primary_ribbon) run(m2k, p, 6, "m2k");
  run(so3, ComplexParams::ordinary(-3), 9, "so3");
  run(gl2(), ComplexParams::ordinary(-2), 6, "gl2");
  for (const auto& p : extra_ribbon) run(m2k, p, 6, "m2k");
  o.detail << degrees << " checked degrees, " << terms << " nonzero coefficients (1/|Aut| weighting)";
  o.require(terms > 0, "all chains vanish");
}

void checker_vs_bracket(Outcome& o) {
  int agree = 0, failing = 0;
  auto compare = [&](const auto& spec, const std::string& label, bool expect_pass) {
    const auto d = structure_cochain(spec);
    const bool checker = check_relations(spec, testgen::relation_bound(spec)).empty();
    const bool bracket = coderivation_bracket(d, d, spec).is_zero();
    o.require(checker == bracket, label + ": checker and bracket disagree");
    if (expect_pass) o.require(checker, label + " should satisfy its relations");
    agree += checker == bracket;
    return checker;
  };
  for (const auto& name : zoo_names()) {
    if (zoo_is_dual(name)) {
      const auto spec = zoo_dual(name);
      const auto d = structure_cochain(spec);
      const bool checker = check_relations(spec, 4).empty();
      const bool bracket = coderivation_bracket(d, d, spec).is_zero();
      o.require(checker && bracket, name);
      agree += checker == bracket;
    } else {
      compare(zoo(name), name, true);
    }
  }
  compare(gl2(), "gl2", true);
  std::mt19937 rng(2024);
  for (int attempt = 0; attempt < 400 && failing < 24; ++attempt) {
    const auto spec = testgen::perturbed(attempt % 2 ? zoo("m2k") : gl2(), rng);
    if (!compare(spec, "perturbed spec " + std::to_string(attempt), false)) ++failing;
  }
  o.detail << agree << " specs agree, " << failing << " perturbed specs fail both";
  o.require(failing >= 20, "fewer than 20 failing perturbed specs");
}

template <class F>
bool symmetric_under_moves(const OrientedGraph& g, const AlgebraSpec<F>& spec, std::mt19937& rng) {
  const F z = partition_value(g, spec);
  for (int e = 0; e < g.edge_count(); ++e)
    if (!(partition_value(flip_arrow(g, e), spec) == -z)) return false;
  if (g.vertex_count() > 1) {
    std::vector<int> swap(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) swap[static_cast<std::size_t>(i)] = i;
    std::swap(swap[0], swap[1]);
    if (!(partition_value(relabel_vertices(g, swap), spec) == -z)) return false;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.kind == GraphKind::ribbon && !(partition_value(rotate_vertex(g, v, 1), spec) == z)) return false;
  for (int k = 0; k < 3; ++k)
    if (!(partition_value(permute_edges(g, testgen::random_permutation(g.edge_count(), rng)), spec) == z))
      return false;
  return true;
}

void sign_suite(Outcome& o) {
  std::mt19937 rng(77);
  int graphs = 0, generators_small = 0;
  const auto so3 = zoo("so3");
  const auto m2k = zoo("m2k");
  const auto lie = testgen::random_mixed_spec(Flavor::l_infinity, rng);
  const auto ass = testgen::random_mixed_spec(Flavor::a_infinity, rng);
  const auto lie_dual = testgen::random_mixed_dual_spec(Flavor::l_infinity, rng);
  const auto ass_dual = testgen::random_mixed_dual_spec(Flavor::a_infinity, rng);
  // every generator with e <= 4, then every class (zero ones and loops
  // included) with e <= 6
  for (const auto& [p, top] : all_complexes())
    for (int e = 2; e <= 6; ++e)
      for (const auto& c : graphs_at(p, e)) {
        if (e > 4 && p == ComplexParams::ordinary(-3)) continue;
        if (e <= 4 && c.sign != 0) ++generators_small;
        const auto& g = c.representative;
        const std::string label = c.id;
        if (g.kind == GraphKind::ordinary) {
          o.require(symmetric_under_moves(g, so3, rng), label + " with so3");
          o.require(symmetric_under_moves(g, lie, rng), label + " with a random L-infinity spec");
          o.require(symmetric_under_moves(g, lie_dual, rng), label + " with a dual L-infinity spec");
        } else {
          o.require(symmetric_under_moves(g, m2k, rng), label + " with m2k");
          o.require(symmetric_under_moves(g, ass, rng), label + " with a random A-infinity spec");
          o.require(symmetric_under_moves(g, ass_dual, rng), label + " with a dual A-infinity spec");
        }
        ++graphs;
      }
  int words = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto w = SlotWord::parse(fixtures::random_pattern(6, rng));
    std::vector<Parity> parities;
    std::vector<int> per(6);
    for (int& x : per) x = static_cast<int>(rng() % 2);
    for (const auto& s : w.slots) parities.push_back(Parity(per[static_cast<std::size_t>(s.half_edge)]));
    std::vector<int> uppers;
    for (int i = 0; i < w.size(); ++i)
      if (w.slots[static_cast<std::size_t>(i)].kind == SlotKind::upper) uppers.push_back(i);
    const int base = contraction_sign(w, parities);
    bool ok = base == fixtures::word_oracle(w, parities);
    for (int k = 0; k < 6; ++k) {
      std::shuffle(uppers.begin(), uppers.end(), rng);
      ok = ok && contraction_sign(w, parities, uppers) == base;
    }
    o.require(ok, "slot word " + std::to_string(trial));
    ++words;
  }
  o.detail << generators_small << " generators with e <= 4, " << graphs << " graph classes with e <= 6, " << words
           << " random 12-slot words";
}

void golden(Outcome& o) {
  const std::string got = expression(fixtures::two_vertex_fragment()).to_string();
  o.require(fixtures::equal_up_to_renaming(got, fixtures::two_vertex_product), "got " + got);
  o.detail << got;
}

void oracles(Outcome& o) {
  const auto so3 = zoo("so3");
  const OrientedGraph theta = graph_from_id("O2:0-1,0-1,0-1");
  const Scalar z = partition_value(theta, so3);
  const Scalar direct = oracle::theta_so3();
  const Scalar brute = oracle::brute_state_sum(theta, 3, so3.basis, so3.inner, [&](const std::vector<int>& idx) {
    return so3.lower.at(2).get(idx);
  });
  o.require(z == direct && z == brute, "theta/so3");
  o.require(abs(z) == 6, "theta/so3 magnitude");
  const auto m2k = zoo("m2k");
  const Matrix trace = Matrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  std::ostringstream ribbon;
  for (const char* id : {"R:0,1,3/2,5,4:0-2,1-4,3-5", "R:0,1,3/2,4,5:0-2,1-4,3-5"}) {
    const OrientedGraph g = graph_from_id(id);
    const Scalar v = partition_value(g, m2k);
    const Scalar b = oracle::brute_state_sum(g, 4, m2k.basis, trace,
                                             [](const std::vector<int>& idx) { return oracle::trace_of_units(idx); });
    o.require(v == b, std::string("ribbon theta ") + id);
    ribbon << " " << to_string(v);
  }
  o.detail << "Z(theta, so3) = " << to_string(z) << ", ribbon thetas with m2k:" << ribbon.str();
}

void loops(Outcome& o) {
  int loop_graphs = 0, chains = 0;
  for (const auto& [p, top] : all_complexes())
    for (int e = 1; e <= std::min(top, p.complete_max_edges()); ++e)
      for (const auto& c : graphs_at(p, e)) {
        if (has_loop(c.representative)) {
          o.require(c.sign == 0, c.id + " has a loop but sign " + std::to_string(c.sign));
          ++loop_graphs;
        } else {
          const auto d = boundary(c.representative);
          o.require(!chain_has_loop(d), "boundary of " + c.id);
          ++chains;
        }
      }
  const auto so3 = zoo("so3");
  const auto m2k = zoo("m2k");
  for (const auto& p : primary_ordinary) {
    o.require(!chain_has_loop(cycle_chain(so3, p, 6)), "so3 cycle on " + p.describe());
    o.require(!chain_has_loop(cycle_chain(so3, p, 6, {CycleNormalization::literal, 1})), "literal so3 cycle");
    ++chains;
  }
  for (const auto& p : primary_ribbon) {
    o.require(!chain_has_loop(cycle_chain(m2k, p, 6)), "m2k cycle on " + p.describe());
    ++chains;
  }
  o.detail << loop_graphs << " graphs with loops all zero, " << chains << " loop-free chains";
  o.require(loop_graphs > 0, "no looped graphs enumerated");
}

void deformation(Outcome& o) {
  std::mt19937 rng(99);
  const auto so3 = zoo("so3");
  int cochains = 0;
  for (int trial = 0; trial < 24; ++trial) {
    const auto psi = testgen::random_cochain(so3, Parity(trial % 2), {1, 2, 3}, rng);
    o.require(differential_D(differential_D(psi, so3), so3).is_zero(), "so3 cochain " + std::to_string(trial));
    ++cochains;
  }
  for (const auto& spec : {zoo("m2k"), gl2()})
    for (int trial = 0; trial < 6; ++trial) {
      const auto psi = testgen::random_cochain(spec, Parity(trial % 2), {1, 2, 3}, rng);
      o.require(differential_D(differential_D(psi, spec), spec).is_zero(), "cochain on a dim-4 spec");
      ++cochains;
    }
  std::vector<Cochain<Scalar>> cocycles = {so3_deformation_cochain()};
  for (int trial = 0; trial < 3; ++trial)
    cocycles.push_back(differential_D(testgen::random_cochain(so3, Parity::even(), {1}, rng), so3));
  int deformed = 0;
  for (const auto& phi : cocycles) {
    if (phi.is_zero()) continue;
    const auto spec = deform(so3, phi);
    o.require(check_linf_relations(spec, 4).empty(), "deformed relations");
    const auto p = ComplexParams::ordinary(-1);
    const auto z = cycle_chain(spec, p, 4);
    bool moving = false;
    for (const auto& [id, v] : z.terms) moving = moving || !is_zero(v.t);
    o.require(moving, "deformation does not reach the chain");
    o.require(verify_cycle(z, p, 4).verified, "deformed cycle at chi=-1");
    o.require(verify_cycle(cycle_chain(spec, ComplexParams::ordinary(-2), 6), ComplexParams::ordinary(-2), 6).verified,
              "deformed cycle at chi=-2");
    ++deformed;
  }
  o.require(deformed >= 1, "no nonzero cocycle");
  // so3 has no cyclic cocycles beyond multiples of d; m2k coboundaries do move
  const auto m2k = zoo("m2k");
  int ribbon = 0;
  for (int trial = 0; trial < 3; ++trial) {
    const auto phi = differential_D(testgen::random_cochain(m2k, Parity::even(), {1, 2}, rng), m2k);
    if (phi.is_zero()) continue;
    const auto spec = deform(m2k, phi);
    o.require(check_ainf_relations(spec, 4).empty(), "deformed m2k relations");
    for (const auto& p : {ComplexParams::ribbon(0, 3), ComplexParams::ribbon(1, 1), ComplexParams::ribbon(1, 2)}) {
      const int top = std::min(6, p.complete_max_edges());
      o.require(verify_cycle(cycle_chain(spec, p, top), p, top).verified, "deformed m2k cycle on " + p.describe());
    }
    ++ribbon;
  }
  o.detail << cochains << " cochains with D^2 = 0, " << deformed << " so3 and " << ribbon
           << " m2k deformations verified mod t^2";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"boundary squares to zero", boundary_squares},
      {"induced chains are cycles", cycles},
      {"relation checkers agree with [d,d] = 0", checker_vs_bracket},
      {"orientation sign conventions", sign_suite},
      {"two-vertex fragment expression", golden},
      {"state sums match brute-force oracles", oracles},
      {"graphs with loops vanish", loops},
      {"D^2 = 0 and first-order deformations", deformation},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail.str("");
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ": " << criteria[i].first << " (" << o.detail.str()
              << "; " << static_cast<int>(secs * 1000) << " ms)" << std::endl;
  }
  return all ? 0 : 1;
}
