#include <doctest.h>

#include <random>

#include "graphcx/errors.hpp"
#include "graphcx/state_sum.hpp"
#include "graphcx/zoo.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace graphcx;

namespace {

const OrientedGraph& theta() {
  static const OrientedGraph g = graph_from_id("O2:0-1,0-1,0-1");
  return g;
}

const char* planar_theta = "R:0,1,3/2,5,4:0-2,1-4,3-5";
const char* torus_theta = "R:0,1,3/2,4,5:0-2,1-4,3-5";

std::vector<Parity> slot_parities(const SlotWord& w, const std::vector<int>& per_symbol) {
  std::vector<Parity> p;
  for (const auto& s : w.slots) p.push_back(Parity(per_symbol[static_cast<std::size_t>(s.half_edge)]));
  return p;
}

Scalar brute(const OrientedGraph& g, const AlgebraSpec<Scalar>& spec) {
  return oracle::brute_state_sum(g, spec.dim(), spec.basis, spec.inner, [&](const std::vector<int>& idx) {
    const auto* t = spec.constants(static_cast<int>(idx.size()) - 1);
    return t ? t->get(idx) : Scalar(0);
  });
}

std::vector<CanonicalGraph> small_generators(GraphKind kind) {
  std::vector<CanonicalGraph> out;
  const std::vector<ComplexParams> ps =
      kind == GraphKind::ordinary
          ? std::vector<ComplexParams>{ComplexParams::ordinary(-1), ComplexParams::ordinary(-2)}
          : std::vector<ComplexParams>{ComplexParams::ribbon(0, 3), ComplexParams::ribbon(1, 1),
                                       ComplexParams::ribbon(0, 4), ComplexParams::ribbon(1, 2)};
  for (const auto& p : ps)
    for (int e = 2; e <= 4; ++e)
      for (const auto& c : graphs_at(p, e)) out.push_back(c);
  return out;
}

template <class F>
void check_symmetries(const OrientedGraph& g, const AlgebraSpec<F>& spec, std::mt19937& rng) {
  const F z = partition_value(g, spec);
  for (int e = 0; e < g.edge_count(); ++e) CHECK(partition_value(flip_arrow(g, e), spec) == -z);
  for (int trial = 0; trial < 2; ++trial) {
    const auto perm = testgen::random_permutation(g.vertex_count(), rng);
    const F expected = oracle::inversion_sign(perm) < 0 ? -z : z;
    CHECK(partition_value(relabel_vertices(g, perm), spec) == expected);
    CHECK(partition_value(permute_edges(g, testgen::random_permutation(g.edge_count(), rng)), spec) == z);
  }
  if (g.vertex_count() > 1) {
    std::vector<int> swap(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) swap[static_cast<std::size_t>(i)] = i;
    std::swap(swap[0], swap[1]);
    CHECK(partition_value(relabel_vertices(g, swap), spec) == -z);
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.kind == GraphKind::ribbon) {
      CHECK(partition_value(rotate_vertex(g, v, 1), spec) == z);
    } else {
      OrientedGraph s = g;
      std::shuffle(s.vertices[static_cast<std::size_t>(v)].begin(), s.vertices[static_cast<std::size_t>(v)].end(), rng);
      CHECK(partition_value(s, spec) == z);
    }
  }
}

}  // namespace

TEST_CASE("contraction_sign on small words") {
  const auto w = SlotWord::parse("^a ^b _a _b");
  CHECK(contraction_sign(w, slot_parities(w, {1, 1})) == -1);
  CHECK(contraction_sign(w, slot_parities(w, {0, 0})) == 1);
  CHECK(contraction_sign(w, slot_parities(w, {1, 0})) == 1);
  const auto v = SlotWord::parse("^a ^b _b _a");
  for (int pa = 0; pa < 2; ++pa)
    for (int pb = 0; pb < 2; ++pb) CHECK(contraction_sign(v, slot_parities(v, {pa, pb})) == 1);
  CHECK_THROWS_AS(SlotWord::parse("^a _b"), StructureError);
  CHECK_THROWS_AS(SlotWord::parse("^a ^a"), StructureError);
  CHECK_THROWS_AS(SlotWord::parse("a _a"), StructureError);
}

TEST_CASE("contraction_sign is independent of the contraction order") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = SlotWord::parse(fixtures::random_pattern(6, rng));
    std::vector<int> per(6);
    for (int& p : per) p = static_cast<int>(rng() % 2);
    const auto parities = slot_parities(w, per);
    std::vector<int> uppers;
    for (int i = 0; i < w.size(); ++i)
      if (w.slots[static_cast<std::size_t>(i)].kind == SlotKind::upper) uppers.push_back(i);
    const int base = contraction_sign(w, parities);
    CHECK(base == fixtures::word_oracle(w, parities));
    for (int k = 0; k < 5; ++k) {
      std::shuffle(uppers.begin(), uppers.end(), rng);
      CHECK(contraction_sign(w, parities, uppers) == base);
    }
    const GradedBasis basis({Parity::even(), Parity::odd()});
    CHECK(CrossingTable(w).sign(per, basis) == base);
    CHECK(contraction_sign(w, per, basis) == base);
  }
}

TEST_CASE("zero constants give zero") {
  const auto abelian = zoo("abelian3");
  for (const auto& c : small_generators(GraphKind::ordinary)) CHECK(partition_value(c.representative, abelian) == 0);
}

TEST_CASE("theta with so3 matches the brute-force oracle") {
  const auto so3 = zoo("so3");
  const Scalar z = partition_value(theta(), so3);
  CHECK(z == oracle::theta_so3());
  CHECK(z == brute(theta(), so3));
  CHECK(abs(z) == 6);
  CHECK(z == 6);
}

TEST_CASE("ribbon theta with m2k matches the brute-force oracle") {
  const auto m2k = zoo("m2k");
  const auto trace = [](const std::vector<int>& idx) { return oracle::trace_of_units(idx); };
  const Matrix h = Matrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  for (const char* id : {planar_theta, torus_theta}) {
    const OrientedGraph g = graph_from_id(id);
    CHECK(partition_value(g, m2k) == oracle::brute_state_sum(g, 4, m2k.basis, h, trace));
  }
  CHECK(partition_value(graph_from_id(planar_theta), m2k) == -8);
  CHECK(partition_value(graph_from_id(torus_theta), m2k) == 2);
}

TEST_CASE("partition_value matches the brute-force oracle on random specs") {
  std::mt19937 rng(43);
  for (GraphKind kind : {GraphKind::ordinary, GraphKind::ribbon}) {
    const auto spec = testgen::random_mixed_spec(kind == GraphKind::ordinary ? Flavor::l_infinity : Flavor::a_infinity, rng);
    REQUIRE(validate_spec(spec).empty());
    for (const auto& c : small_generators(kind))
      if (c.representative.edge_count() <= 4) {
        const OrientedGraph g = relabel_vertices(c.representative,
                                                 testgen::random_permutation(c.representative.vertex_count(), rng));
        CHECK(partition_value(g, spec) == brute(g, spec));
      }
  }
}

TEST_CASE("orientation symmetries of the state sum") {
  std::mt19937 rng(47);
  const auto so3 = zoo("so3");
  const auto m2k = zoo("m2k");
  for (const auto& c : small_generators(GraphKind::ordinary)) check_symmetries(c.representative, so3, rng);
  for (const auto& c : small_generators(GraphKind::ribbon)) check_symmetries(c.representative, m2k, rng);
  for (int trial = 0; trial < 2; ++trial) {
    const auto lie = testgen::random_mixed_spec(Flavor::l_infinity, rng);
    const auto ass = testgen::random_mixed_spec(Flavor::a_infinity, rng);
    for (const auto& c : small_generators(GraphKind::ordinary)) check_symmetries(c.representative, lie, rng);
    for (const auto& c : small_generators(GraphKind::ribbon)) check_symmetries(c.representative, ass, rng);
  }
  const auto dual_lie = testgen::random_mixed_dual_spec(Flavor::l_infinity, rng);
  const auto dual_ass = testgen::random_mixed_dual_spec(Flavor::a_infinity, rng);
  for (const auto& c : small_generators(GraphKind::ordinary)) check_symmetries(c.representative, dual_lie, rng);
  for (const auto& c : small_generators(GraphKind::ribbon)) check_symmetries(c.representative, dual_ass, rng);
}

TEST_CASE("zero graphs evaluate to zero") {
  std::mt19937 rng(53);
  const auto lie = testgen::random_mixed_spec(Flavor::l_infinity, rng);
  for (const auto& c : small_generators(GraphKind::ordinary))
    if (c.sign == 0 && !has_loop(c.representative)) CHECK(partition_value(c.representative, lie) == 0);
  const OrientedGraph eight = graph_from_id("O1:0-0,0-0");
  CHECK(partition_value(eight, zoo("so3")) == 0);
  CHECK(partition_value(eight, lie) == 0);
}

TEST_CASE("flavor and valence errors") {
  CHECK_THROWS_AS(partition_value(graph_from_id(planar_theta), zoo("so3")), FlavorError);
  CHECK_THROWS_AS(partition_value(theta(), zoo("m2k")), FlavorError);
  auto short_so3 = zoo("so3");
  short_so3.max_arity = 2;
  CHECK_THROWS_AS(partition_value(graph_from_id("O1:0-0,0-0"), short_so3), UnsupportedValenceError);
}

TEST_CASE("expression of the two-vertex fragment") {
  const std::string got = expression(fixtures::two_vertex_fragment()).to_string();
  CHECK(fixtures::equal_up_to_renaming(got, fixtures::two_vertex_product));
  CHECK_FALSE(fixtures::equal_up_to_renaming(got, "d_{glmih} d_{nkj} k^{bh} k^{ic} k^{mn} k^{lf} k^{ag} k^{jd} k^{eg}"));
  CHECK_FALSE(fixtures::equal_up_to_renaming("d_{ab}", "d_{aa}"));
}

TEST_CASE("expression of theta and of a single edge") {
  CHECK(fixtures::equal_up_to_renaming(expression(theta()).to_string(), "d_{abc} d_{def} k^{ad} k^{be} k^{cf}"));
  // the other four edges leave the picture
  const OrientedGraph edge{GraphKind::ordinary,
                           {{0, 2, 3}, {1, 4, 5}},
                           {{{0, 1}}, {{2, 6}}, {{3, 7}}, {{4, 8}}, {{5, 9}}}};
  CHECK(expression(edge).to_string() == "d_{acd} d_{bef} k^{ab} k^{cg} k^{dh} k^{ei} k^{fj}");
  OrientedGraph big{GraphKind::ordinary, {{}, {}}, {}};
  for (int i = 0; i < 15; ++i) {
    big.vertices[0].push_back(i);
    big.vertices[1].push_back(15 + i);
    big.edges.push_back({i, 15 + i});
  }
  const std::string s = expression(big).to_string();
  CHECK(s.rfind("d_{h0 h1 h2") == 0);
  CHECK(s.find("k^{h14 h29}") != std::string::npos);
}

TEST_CASE("cycle chains") {
  const auto p1 = ComplexParams::ordinary(-1);
  CHECK(cycle_chain(zoo("abelian3"), p1, 3).is_zero());
  const auto so3 = zoo("so3");
  const auto z = cycle_chain(so3, p1, 3);
  REQUIRE(z.terms.size() == 1);
  CHECK(z.coefficient("O2:0-1,0-1,0-1") == make_scalar(1, 2));
  const auto lit = cycle_chain(so3, p1, 3, {CycleNormalization::literal, 1});
  CHECK(lit.coefficient("O2:0-1,0-1,0-1") == 6);

  const auto m2k = zoo("m2k");
  const auto planar = cycle_chain(m2k, ComplexParams::ribbon(0, 3), 3);
  CHECK(planar.coefficient(planar_theta) == make_scalar(-4, 3));
  const auto torus = cycle_chain(m2k, ComplexParams::ribbon(1, 1), 3);
  CHECK(torus.coefficient(torus_theta) == make_scalar(1, 3));

  const auto two = cycle_chain(so3, ComplexParams::ordinary(-2), 6);
  CHECK(two.terms.size() == 2);
  CHECK(two.coefficient("O4:0-1,0-1,0-2,1-3,2-3,2-3") == make_scalar(-3, 4));
  CHECK(two.coefficient("O4:0-1,0-2,0-3,1-2,1-3,2-3") == make_scalar(-1, 4));
  for (const auto& [id, v] : two.terms) CHECK(canonicalize(graph_from_id(id)).sign == 1);
}

TEST_CASE("cycle chains are deterministic across thread counts") {
  const auto m2k = zoo("m2k");
  const auto p = ComplexParams::ribbon(1, 2);
  const auto one = cycle_chain(m2k, p, 5, {CycleNormalization::automorphism, 1});
  CHECK(cycle_chain(m2k, p, 5, {CycleNormalization::automorphism, 3}) == one);
  CHECK(cycle_chain(m2k, p, 5, {CycleNormalization::automorphism, 0}) == one);
}

TEST_CASE("the weighted chain is a cycle") {
  const auto so3 = zoo("so3");
  const auto m2k = zoo("m2k");
  for (const auto& p : {ComplexParams::ordinary(-1), ComplexParams::ordinary(-2)}) {
    const auto r = verify_cycle(cycle_chain(so3, p, 6), p, 6);
    CHECK(r.verified);
    CHECK(r.warnings.empty());
  }
  for (const auto& p : {ComplexParams::ribbon(0, 3), ComplexParams::ribbon(1, 1), ComplexParams::ribbon(0, 4),
                        ComplexParams::ribbon(1, 2)}) {
    const int top = std::min(6, p.complete_max_edges());
    CHECK(verify_cycle(cycle_chain(m2k, p, top), p, top).verified);
  }
  CHECK(verify_cycle(Chain<Scalar>{}, ComplexParams::ordinary(-2), 6).verified);
}

TEST_CASE("the literal chain is not a cycle at chi = -2") {
  const auto p = ComplexParams::ordinary(-2);
  const auto z = cycle_chain(zoo("so3"), p, 6, {CycleNormalization::literal, 1});
  CHECK(z.coefficient("O4:0-1,0-1,0-2,1-3,2-3,2-3") == -12);
  CHECK(z.coefficient("O4:0-1,0-2,0-3,1-2,1-3,2-3") == -6);
  const auto r = verify_cycle(z, p, 6);
  CHECK_FALSE(r.verified);
  bool found = false;
  for (const auto& d : r.degrees)
    if (d.boundary.coefficient("O3:0-1,0-1,0-2,0-2,1-2") == -12) found = true;
  CHECK(found);
}

TEST_CASE("a perturbed chain fails") {
  const auto p = ComplexParams::ordinary(-2);
  auto z = cycle_chain(zoo("so3"), p, 6);
  std::string target;
  for (const auto& c : generators(p, 6))
    if (!boundary(c.representative).is_zero()) target = c.id;
  REQUIRE_FALSE(target.empty());
  z.add(target, Scalar(1));
  CHECK_FALSE(verify_cycle(z, p, 6).verified);
}

TEST_CASE("truncated verification warns") {
  const auto p = ComplexParams::ordinary(-2);
  const auto r = verify_cycle(cycle_chain(zoo("so3"), p, 5), p, 5);
  CHECK(r.verified);
  CHECK_FALSE(r.warnings.empty());
  bool unchecked = false;
  for (const auto& d : r.degrees) unchecked = unchecked || !d.checked;
  CHECK(unchecked);
  Chain<Scalar> stray;
  stray.add("R:0,1,3/2,5,4:0-2,1-4,3-5", Scalar(1));
  CHECK_THROWS_AS(verify_cycle(stray, p, 6), StructureError);
}

TEST_CASE("deformed cycles hold modulo t^2") {
  const auto deformed = zoo_dual("so3-deformed");
  const auto p1 = ComplexParams::ordinary(-1);
  const auto z = cycle_chain(deformed, p1, 3);
  CHECK(z.coefficient("O2:0-1,0-1,0-1") == DualScalar(make_scalar(1, 2), Scalar(1)));
  CHECK(cycle_chain(deformed, p1, 3, {CycleNormalization::literal, 1}).coefficient("O2:0-1,0-1,0-1") ==
        DualScalar(Scalar(6), Scalar(12)));
  for (const auto& p : {p1, ComplexParams::ordinary(-2)})
    CHECK(verify_cycle(cycle_chain(deformed, p, 6), p, 6).verified);

  std::mt19937 rng(59);
  const auto m2k = zoo("m2k");
  const auto psi = testgen::random_cochain(m2k, Parity::even(), {1, 2}, rng);
  const auto spec = deform(m2k, differential_D(psi, m2k));
  for (const auto& p : {ComplexParams::ribbon(0, 3), ComplexParams::ribbon(1, 1), ComplexParams::ribbon(1, 2)}) {
    const int top = std::min(5, p.complete_max_edges());
    CHECK(verify_cycle(cycle_chain(spec, p, top), p, top).verified);
  }
}
