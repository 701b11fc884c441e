#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ccx/classify.hpp"
#include "ccx/cobordism.hpp"
#include "ccx/dual.hpp"
#include "ccx/generators.hpp"
#include "ccx/slice.hpp"

using namespace ccx;

namespace {

template <typename F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code;
  }
  FAIL("expected an error");
  return Errc::InternalCheckFailed;
}

CellComplex ring(int n, int base) {
  RawCells cs;
  for (int i = 0; i < n; ++i) cs.push_back({{base + i}, 0});
  for (int i = 0; i < n; ++i)
    cs.push_back({normalized({base + i, base + (i + 1) % n}), 1});
  return CellComplex::build(std::move(cs));
}

// Halving reduction from an eight-ring starting at b onto a four-cycle whose
// vertices appear in cyclic order ord. The even parity keeps b, b+2, ...; the
// odd parity keeps the vertices in between.
CcMap halving_onto(ComplexPtr dom, ComplexPtr cod, int b, std::vector<int> ord,
                   bool odd) {
  std::vector<std::pair<VertexSet, VertexSet>> pairs;
  for (int i = 0; i < 4; ++i) {
    const VertexSet before = normalized({ord[(i + 3) % 4], ord[i]});
    const VertexSet after = normalized({ord[i], ord[(i + 1) % 4]});
    if (!odd) {
      pairs.push_back({{b + 2 * i}, {ord[i]}});
      pairs.push_back({{b + 2 * i + 1}, after});
      pairs.push_back({normalized({b + 2 * i, b + 2 * i + 1}), after});
      pairs.push_back({normalized({b + 2 * i + 1, b + (2 * i + 2) % 8}), after});
    } else {
      pairs.push_back({{b + 2 * i + 1}, {ord[i]}});
      pairs.push_back({{b + 2 * i}, before});
      pairs.push_back({normalized({b + 2 * i, b + 2 * i + 1}), before});
      pairs.push_back({normalized({b + 2 * i + 1, b + (2 * i + 2) % 8}), after});
    }
  }
  CcMap m = make_map(std::move(dom), std::move(cod), pairs);
  REQUIRE(check_reduction(m).all_pass());
  return m;
}

CcMap shift_bijection(ComplexPtr dom, ComplexPtr cod, int shift) {
  std::map<VertexId, VertexId> s;
  for (VertexId v : dom->vertices()) s[v] = v + shift;
  return map_from_vertex_bijection(std::move(dom), std::move(cod), s);
}

// One 2-cell over eight vertices whose edges form two disjoint squares.
CellComplex annulus_cell() {
  RawCells raw;
  for (int v = 0; v < 8; ++v) raw.push_back({{v}, 0});
  for (int v = 0; v < 4; ++v) {
    raw.push_back({normalized({v, (v + 1) % 4}), 1});
    raw.push_back({normalized({4 + v, 4 + (v + 1) % 4}), 1});
  }
  raw.push_back({{0, 1, 2, 3, 4, 5, 6, 7}, 2});
  return CellComplex::build(raw);
}

// Moebius band: the top eight-cycle on 4..11 winds twice around the core
// square on 0..3, so the core is interior and the band has one boundary
// circle.
CellComplex moebius() {
  RawCells cs;
  for (int v = 0; v < 12; ++v) cs.push_back({{v}, 0});
  for (int i = 0; i < 4; ++i) cs.push_back({normalized({i, (i + 1) % 4}), 1});
  for (int i = 0; i < 8; ++i)
    cs.push_back({normalized({4 + i, 4 + (i + 1) % 8}), 1});
  for (int i = 0; i < 8; ++i) cs.push_back({normalized({i % 4, 4 + i}), 1});
  for (int i = 0; i < 8; ++i)
    cs.push_back({normalized({i % 4, (i + 1) % 4, 4 + i, 4 + (i + 1) % 8}), 2});
  return CellComplex::build(std::move(cs));
}

// Prism with its base replaced by an eight-cycle on 8..15 through the even
// halving: 4 squares and 8 triangles between the old top and the new base.
CellComplex trapezoid() {
  CellComplex pr = prism(4);
  CellComplex bottom = pr.restriction({0, 1, 2, 3});
  CcMap h = halving_onto(share(ring(8, 8)), share(bottom), 8, {0, 1, 2, 3}, false);
  return relative_subdivide(pr, bottom, h);
}

SliceSequence identity_sequence(int n) {
  SliceSequence q;
  q.j = share(ring(n, 0));
  q.j_trans = share(cycle(n));
  q.m = share(cycle(n));
  q.l_trans = share(cycle(n));
  q.l = share(ring(n, n));
  q.rho_j = shift_bijection(q.j, q.j_trans, 0);
  q.pi_j = shift_bijection(q.m, q.j_trans, 0);
  q.pi_l = shift_bijection(q.m, q.l_trans, 0);
  q.rho_l = shift_bijection(q.l, q.l_trans, -n);
  return q;
}

int euler(const CellComplex& k) {
  int chi = 0, sign = 1;
  for (std::size_t c : k.f_vector()) {
    chi += sign * static_cast<int>(c);
    sign = -sign;
  }
  return chi;
}

}  // namespace

TEST_CASE("prisms are slices between their two rims") {
  for (int n : {3, 4, 6}) {
    CellComplex pr = prism(n);
    SliceVerdict v = check_slice(pr);
    REQUIRE(v.ok);
    CHECK(v.failures.empty());
    REQUIRE(v.slice.has_value());
    CHECK(v.slice->j.same_cells_as(cycle(n)));
    VertexSet upper;
    for (int i = 0; i < n; ++i) upper.push_back(n + i);
    CHECK(v.slice->l.vertices() == upper);
    CHECK(v.slice->midsection.same_cells_as(cycle(n)));
  }
}

TEST_CASE("slice rejection lists the failing clauses in order") {
  SUBCASE("closed surface: no interior vertices allowed, no boundary at all") {
    SliceVerdict v = check_slice(simplex_boundary(3));
    REQUIRE(v.failures.size() == 2);
    CHECK(v.failures[0].first == "vertices_on_boundary");
    CHECK(v.failures[0].second == "{0,1,2,3}");
    CHECK(v.failures[1].first == "two_components");
    CHECK(v.failures[1].second == "0 boundary components");
  }

  SUBCASE("sphere with one equator") {
    SliceVerdict v = check_slice(bitetra());
    REQUIRE(v.failures.size() == 1);
    CHECK(v.failures[0] ==
          std::make_pair(std::string("two_components"), std::string("1 boundary components")));
  }

  SUBCASE("path with an interior vertex") {
    SliceVerdict v = check_slice(path(2));
    REQUIRE(v.failures.size() == 1);
    CHECK(v.failures[0].first == "vertices_on_boundary");
    CHECK(v.failures[0].second == "{1}");
  }

  SUBCASE("annulus cell: non-local, and neither rim is uniform") {
    SliceVerdict v = check_slice(annulus_cell());
    REQUIRE(v.failures.size() == 5);
    CHECK(v.failures[0].first == "in_C");
    CHECK(v.failures[0].second == "not local");
    CHECK(v.failures[1].first == "uniform:0");
    CHECK(v.failures[2].first == "local_relative:0");
    CHECK(v.failures[3].first == "uniform:1");
    CHECK(v.failures[4].first == "local_relative:1");
  }

  SUBCASE("require_slice names the first failing clause") {
    try {
      require_slice(bitetra());
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code == Errc::PreconditionFailed);
      CHECK(std::string(e.what()).find("two_components") != std::string::npos);
    }
  }
}

TEST_CASE("a slice unfolds into a valid five node sequence") {
  Slice s = require_slice(prism(4));
  SliceSequence q = slice_to_sequence(s);

  CHECK(q.rho_j.kind == MapKind::Reduction);
  CHECK(q.rho_l.kind == MapKind::Reduction);
  CHECK(q.pi_j.kind == MapKind::Collapse);
  CHECK(q.pi_l.kind == MapKind::Collapse);

  CHECK(q.j->same_cells_as(s.j));
  CHECK(q.l->same_cells_as(s.l));
  CHECK(q.m->same_cells_as(s.midsection));
  CHECK(q.j_trans->same_cells_as(cycle(4)));
  CHECK(q.l_trans->vertices() == VertexSet{4, 5, 6, 7});

  GeometricSequence g = as_geometric(q);
  REQUIRE(g.nodes.size() == 5);
  REQUIRE(g.arrows.size() == 4);
  CHECK(check_geometric_sequence(g, true).valid);
}

TEST_CASE("prism slices round trip through their sequences") {
  for (int n = 3; n <= 6; ++n) {
    Slice s = require_slice(prism(n));
    Slice back = sequence_to_slice(slice_to_sequence(s));
    CHECK(back.complex.same_cells_as(s.complex));
    CHECK(back.j.same_cells_as(s.j));
    CHECK(back.l.same_cells_as(s.l));
  }
}

TEST_CASE("folding identity data produces the prism") {
  for (int n : {3, 4}) {
    SliceSequence q = identity_sequence(n);
    Slice s = sequence_to_slice(q);
    CHECK(s.complex.same_cells_as(prism(n)));
    CHECK(s.j.same_cells_as(*q.j));
    CHECK(s.l.same_cells_as(*q.l));
  }
}

TEST_CASE("folding a halving sequence produces the trapezoid") {
  SliceSequence q = identity_sequence(4);
  q.j = share(ring(8, 8));
  q.rho_j = halving_onto(q.j, q.j_trans, 8, {0, 1, 2, 3}, false);
  Slice s = sequence_to_slice(q);

  CHECK(s.complex.f_vector() == std::vector<std::size_t>{12, 16, 4});
  CHECK(euler(s.complex) == 0);
  CHECK(s.j.same_cells_as(*q.j));
  CHECK(s.l.same_cells_as(*q.l));
  CHECK(s.complex.same_cells_as(trapezoid()));

  // And back again: the wider end reduces 2:1, the narrow end is untouched.
  SliceSequence r = slice_to_sequence(s);
  CHECK(r.j->same_cells_as(*q.j));
  CHECK(r.m->size() == 8);
  CHECK(r.rho_j.kind == MapKind::Reduction);
  CHECK(r.rho_j.domain->size() == 2 * r.rho_j.codomain->size());
  std::set<int> hit(r.rho_j.assignment.begin(), r.rho_j.assignment.end());
  CHECK(static_cast<int>(hit.size()) == r.rho_j.codomain->size());
}

TEST_CASE("sequence folding rejects malformed input") {
  SUBCASE("the two ends may not share labels") {
    SliceSequence q = identity_sequence(4);
    q.l = q.j;
    q.rho_l = shift_bijection(q.l, q.l_trans, 0);
    try {
      sequence_to_slice(q);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code == Errc::VertexClash);
      CHECK(e.witness == "{0,1,2,3}");
    }
  }

  SUBCASE("unchecked arrows fail the junction kinds") {
    SliceSequence q = identity_sequence(4);
    std::vector<std::pair<VertexSet, VertexSet>> pairs;
    for (int v = 0; v < 4; ++v) pairs.push_back({{v}, {v}});
    for (int v = 0; v < 4; ++v)
      pairs.push_back({normalized({v, (v + 1) % 4}), normalized({v, (v + 1) % 4})});
    q.pi_j = make_map(q.m, q.j_trans, pairs);
    try {
      sequence_to_slice(q);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code == Errc::RelationViolated);
      CHECK(std::string(e.what()).find("arrow-kind") != std::string::npos);
    }
  }

  SUBCASE("two equal collapses out of the midsection are not orthogonal") {
    auto d4 = dual_complex(cycle(4));
    CcMap hd =
        dual_map(halving_onto(share(cycle(8)), share(cycle(4)), 0, {0, 1, 2, 3}, false)).map;
    auto shifted = [&](int off) {
      RawCells rs;
      for (int i = 0; i < d4.complex->size(); ++i) {
        VertexSet vs;
        for (VertexId v : d4.complex->cell(i).verts) vs.push_back(v + off);
        rs.push_back(Cell{normalized(vs), d4.complex->cell(i).rank});
      }
      return share(CellComplex::build(std::move(rs)));
    };
    SliceSequence q;
    q.m = hd.domain;
    q.j_trans = hd.codomain;
    q.l_trans = share(*d4.complex);
    q.pi_j = hd;
    q.pi_l = CcMap{hd.domain, q.l_trans, hd.assignment, hd.kind};
    q.j = shifted(100);
    q.l = shifted(200);
    q.rho_j = shift_bijection(q.j, q.j_trans, -100);
    q.rho_l = shift_bijection(q.l, q.l_trans, -200);
    try {
      sequence_to_slice(q);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code == Errc::RelationViolated);
      CHECK(std::string(e.what()).find("orthogonal") != std::string::npos);
    }
  }

  SUBCASE("arrows must join their nodes") {
    SliceSequence q = identity_sequence(4);
    q.pi_j = identity_map(share(cycle(3)));
    CHECK(code_of([&] { sequence_to_slice(q); }) == Errc::DomainMismatch);
  }

  SUBCASE("empty ends") {
    SliceSequence q = identity_sequence(4);
    q.j = share(CellComplex::build({}));
    q.rho_j = CcMap{q.j, q.j_trans, {}, MapKind::Unchecked};
    CHECK(code_of([&] { sequence_to_slice(q); }) == Errc::PreconditionFailed);
  }

  SUBCASE("missing nodes") {
    SliceSequence q;
    CHECK(code_of([&] { sequence_to_slice(q); }) == Errc::InvalidArgument);
  }
}

TEST_CASE("subdividing along the identity changes nothing") {
  CellComplex pr = prism(4);
  CellComplex bottom = pr.restriction({0, 1, 2, 3});
  CellComplex s = relative_subdivide(pr, bottom, identity_map(share(bottom)));
  CHECK(s.same_cells_as(pr));
}

TEST_CASE("subdividing a prism rim by a halving yields the trapezoid") {
  CellComplex trap = trapezoid();
  CHECK(trap.f_vector() == std::vector<std::size_t>{12, 16, 4});
  CHECK(euler(trap) == 0);
  CHECK(classify(trap).in_C);

  Slice s = require_slice(trap);
  CHECK(s.j.vertices() == VertexSet{4, 5, 6, 7});
  CHECK(find_isomorphism(s.l, cycle(8)).has_value());

  // Each face keeps its old top edge and picks up both halves of the split
  // bottom edge, so all four become pentagons.
  int pentagons = 0;
  for (int c = 0; c < trap.size(); ++c)
    if (trap.cell(c).rank == 2 && trap.cell(c).verts.size() == 5) ++pentagons;
  CHECK(pentagons == 4);
}

TEST_CASE("relative subdivision enforces its preconditions") {
  CellComplex pr = prism(4);
  CellComplex bottom = pr.restriction({0, 1, 2, 3});
  CellComplex top = pr.restriction({4, 5, 6, 7});

  SUBCASE("target must be a boundary component") {
    CHECK(code_of([&] {
      relative_subdivide(pr, cycle(3), identity_map(share(cycle(3))));
    }) == Errc::PreconditionFailed);
  }

  SUBCASE("the gluing map must be a reduction") {
    // Collapsing neighbouring vertices pairwise gives every image vertex a
    // three cell fiber.
    std::vector<std::pair<VertexSet, VertexSet>> pairs;
    for (int i = 0; i < 4; ++i) {
      pairs.push_back({{8 + 2 * i}, {i}});
      pairs.push_back({{8 + 2 * i + 1}, {i}});
      pairs.push_back({normalized({8 + 2 * i, 8 + 2 * i + 1}), {i}});
      pairs.push_back(
          {normalized({8 + 2 * i + 1, 8 + (2 * i + 2) % 8}), normalized({i, (i + 1) % 4})});
    }
    CcMap bad = make_map(share(ring(8, 8)), share(bottom), pairs);
    try {
      relative_subdivide(pr, bottom, bad);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code == Errc::PreconditionFailed);
      CHECK(e.witness.find("r1: fail") != std::string::npos);
    }
  }

  SUBCASE("fresh vertices may not collide with the ambient complex") {
    CcMap h = halving_onto(share(ring(8, 4)), share(bottom), 4, {0, 1, 2, 3}, false);
    try {
      relative_subdivide(pr, bottom, h);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code == Errc::PreconditionFailed);
      CHECK(e.witness == "{4,5,6,7}");
    }
  }

  SUBCASE("the reduction must land on the chosen component") {
    CcMap h = halving_onto(share(ring(8, 8)), share(top), 8, {4, 5, 6, 7}, false);
    CHECK(code_of([&] { relative_subdivide(pr, bottom, h); }) ==
          Errc::DomainMismatch);
  }
}

TEST_CASE("cobordism construction records its boundary data") {
  CellComplex pr = prism(4);

  SUBCASE("prism from its base") {
    Cobordism c = make_cobordism(pr, {0});
    CHECK(c.ingoing.same_cells_as(cycle(4)));
    CHECK(c.outgoing.vertices() == VertexSet{4, 5, 6, 7});
    CHECK(c.exactly_collared);
    CHECK(!c.unit);
    CHECK(c.ingoing_components == std::vector<int>{0});
  }

  SUBCASE("slices are cobordisms from their j end") {
    Cobordism c = slice_cobordism(require_slice(pr));
    CHECK(c.ingoing.same_cells_as(cycle(4)));
    CHECK(c.outgoing.vertices() == VertexSet{4, 5, 6, 7});
  }

  SUBCASE("nothing ingoing: the whole boundary faces out") {
    Cobordism c = make_cobordism(bitetra(), {});
    CHECK(c.ingoing.empty());
    CHECK(c.outgoing.vertices().size() == 5);
    CHECK(c.exactly_collared);
  }

  SUBCASE("a path from both endpoints") {
    Cobordism c = make_cobordism(path(2), {0, 1});
    CHECK(c.ingoing.vertices() == VertexSet{0, 2});
    CHECK(c.outgoing.empty());
    CHECK(c.exactly_collared);
  }

  SUBCASE("a moebius band from its single rim") {
    Cobordism c = make_cobordism(moebius(), {0});
    CHECK(c.ingoing.vertices().size() == 8);
    CHECK(c.outgoing.empty());
    CHECK(c.exactly_collared);
    CHECK(euler(c.complex) == 0);
  }

  SUBCASE("an edge on two chosen endpoints is degenerate") {
    try {
      make_cobordism(path(1), {0, 1});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code == Errc::Degenerate);
      CHECK(e.witness == "{0,1}");
    }
  }

  SUBCASE("complexes outside C are rejected with the classifier's witness") {
    try {
      make_cobordism(wedge_tetra(), {0});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code == Errc::NotInC);
      CHECK(e.witness.find("pinch") != std::string::npos);
    }
    try {
      make_cobordism(annulus_cell(), {0});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code == Errc::NotInC);
      CHECK(e.witness == "not local");
    }
  }

  SUBCASE("index validation") {
    CHECK(code_of([&] { make_cobordism(pr, {5}); }) == Errc::InvalidArgument);
    CHECK(code_of([&] { make_cobordism(pr, {0, 0}); }) == Errc::InvalidArgument);
    CHECK(code_of([&] { make_cobordism(CellComplex::build({}), {}); }) ==
          Errc::InvalidArgument);
    CHECK(code_of([&] { boundary_component_index(pr, cycle(3)); }) ==
          Errc::InvalidArgument);
  }
}

TEST_CASE("dual cobordisms swap the two ends") {
  SUBCASE("prisms are self dual with the rims exchanged") {
    for (int n : {3, 4, 5}) {
      CellComplex pr = prism(n);
      Cobordism c = make_cobordism(pr, {0});
      Cobordism d = dual_cobordism(c);
      const std::size_t nn = static_cast<std::size_t>(n);
      CHECK(d.complex.f_vector() == std::vector<std::size_t>{2 * nn, 3 * nn, nn});
      CHECK(find_isomorphism(d.complex, pr).has_value());
      CHECK(find_isomorphism(d.ingoing, cycle(n)).has_value());
      CHECK(find_isomorphism(d.outgoing, cycle(n)).has_value());
      CHECK(d.exactly_collared);

      // The outgoing rim of the dual is the dual of the midsection.
      CanonicalMaps cm = canonical_maps(pr, c.ingoing);
      CHECK(find_isomorphism(d.outgoing, *dual_complex(cm.mid.complex).complex)
                .has_value());

      Cobordism dd = dual_cobordism(d);
      CHECK(find_isomorphism(dd.complex, pr).has_value());
      CHECK(find_isomorphism(dd.ingoing, cycle(n)).has_value());
    }
  }

  SUBCASE("the dual of the trapezoid narrows the other way") {
    CellComplex trap = trapezoid();
    int narrow = boundary_component_index(trap, trap.restriction({4, 5, 6, 7}));
    Cobordism c = make_cobordism(trap, {narrow});
    Cobordism d = dual_cobordism(c);
    CHECK(d.complex.f_vector() == std::vector<std::size_t>{12, 20, 8});
    CHECK(find_isomorphism(d.ingoing, cycle(8)).has_value());
    CHECK(find_isomorphism(d.outgoing, cycle(4)).has_value());
    CHECK(d.exactly_collared);

    CanonicalMaps cm = canonical_maps(trap, c.ingoing);
    CHECK(find_isomorphism(d.outgoing, *dual_complex(cm.mid.complex).complex)
              .has_value());

    // Toward the narrow end the dual's collapse folds three cells onto each
    // vertex, unlike every canonical collapse of the originals here.
    CanonicalMaps dm = canonical_maps(d.complex, d.outgoing);
    CHECK(dm.pi.kind == MapKind::Collapse);
    std::vector<int> fib(dm.trans.complex.size(), 0);
    for (int x : dm.pi.assignment) fib[x]++;
    std::sort(fib.begin(), fib.end());
    CHECK(fib == std::vector<int>{1, 1, 1, 1, 3, 3, 3, 3});

    Cobordism dd = dual_cobordism(d);
    CHECK(find_isomorphism(dd.complex, trap).has_value());
    CHECK(find_isomorphism(dd.ingoing, cycle(4)).has_value());
  }

  SUBCASE("a lone edge against a path of two") {
    Cobordism c = make_cobordism(path(1), {});
    Cobordism d = dual_cobordism(c);
    CHECK(d.complex.f_vector() == std::vector<std::size_t>{3, 2});
    CHECK(d.ingoing_components.size() == 2);
    CHECK(d.ingoing.vertices() == VertexSet{1, 2});
    Cobordism dd = dual_cobordism(d);
    CHECK(dd.complex.same_cells_as(path(1)));
    CHECK(dd.ingoing.empty());

    // The same pair read backwards.
    Cobordism e = dual_cobordism(make_cobordism(path(2), {0, 1}));
    CHECK(e.complex.same_cells_as(path(1)));
    CHECK(e.ingoing.empty());
  }

  SUBCASE("closed sphere") {
    Cobordism d = dual_cobordism(make_cobordism(bitetra(), {}));
    CHECK(d.complex.f_vector() == std::vector<std::size_t>{8, 16, 14, 5});
    CHECK(d.ingoing_components.size() == 1);
    Cobordism dd = dual_cobordism(d);
    CHECK(find_isomorphism(dd.complex, bitetra()).has_value());
    CHECK(dd.ingoing.empty());
  }

  SUBCASE("moebius band from its whole boundary") {
    Cobordism d = dual_cobordism(make_cobordism(moebius(), {0}));
    CHECK(d.complex.f_vector() == std::vector<std::size_t>{8, 12, 4});
    CHECK(d.ingoing.empty());
    CHECK(!classify(d.complex).closed);
    Cobordism dd = dual_cobordism(d);
    CHECK(find_isomorphism(dd.complex, moebius()).has_value());
    CHECK(dd.ingoing.vertices().size() == 8);
  }
}

TEST_CASE("stacking prisms composes cobordisms") {
  CellComplex pr = prism(4);
  Cobordism a = make_cobordism(pr, {0});

  Cobordism two = compose_cobordisms(a, a);
  CHECK(two.complex.f_vector() == std::vector<std::size_t>{12, 20, 8});
  CHECK(euler(two.complex) == 0);
  CHECK(two.ingoing.same_cells_as(cycle(4)));
  CHECK(two.outgoing.vertices().size() == 4);
  CHECK(two.exactly_collared);

  Cobordism left = compose_cobordisms(two, a);
  Cobordism right = compose_cobordisms(a, two);
  CHECK(left.complex.f_vector() == std::vector<std::size_t>{16, 28, 12});
  CHECK(right.complex.f_vector() == std::vector<std::size_t>{16, 28, 12});
  CHECK(find_isomorphism(left.complex, right.complex).has_value());
}

TEST_CASE("a prism feeds the trapezoid through its narrow rim") {
  CellComplex trap = trapezoid();
  int narrow = boundary_component_index(trap, trap.restriction({4, 5, 6, 7}));
  Cobordism a = make_cobordism(prism(4), {0});
  Cobordism b = make_cobordism(trap, {narrow});
  Cobordism u = compose_cobordisms(a, b);
  CHECK(u.complex.f_vector() == std::vector<std::size_t>{16, 24, 8});
  CHECK(u.ingoing.same_cells_as(cycle(4)));
  CHECK(u.outgoing.vertices().size() == 8);
}

TEST_CASE("gluing through a wider interface needs reflective parities") {
  CellComplex pr = prism(4);
  CellComplex top = pr.restriction({4, 5, 6, 7});
  Cobordism a = make_cobordism(pr, {0});
  Cobordism b = make_cobordism(pr, {0});
  auto iface = share(ring(8, 100));
  GlueSpec g;
  g.rho_a = halving_onto(iface, share(top), 100, {4, 5, 6, 7}, false);
  g.rho_b = halving_onto(iface, share(cycle(4)), 100, {0, 1, 2, 3}, true);

  Cobordism u = compose_cobordisms(a, b, g);
  CHECK(u.complex.f_vector() == std::vector<std::size_t>{16, 24, 8});
  CHECK(euler(u.complex) == 0);
  CHECK(u.ingoing.same_cells_as(cycle(4)));
  CHECK(u.exactly_collared);

  // Same parity on both sides folds the interface onto joined images.
  GlueSpec bad = g;
  bad.rho_b = halving_onto(iface, share(cycle(4)), 100, {0, 1, 2, 3}, false);
  try {
    compose_cobordisms(a, b, bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code == Errc::ReflectivityViolated);
    CHECK(e.witness == "join of {100} and {102}");
  }
}

TEST_CASE("two trapezoids meet back to back only after a twist") {
  CellComplex trap = trapezoid();
  VertexSet wide_verts{8, 9, 10, 11, 12, 13, 14, 15};
  int narrow = boundary_component_index(trap, trap.restriction({4, 5, 6, 7}));
  int wide = boundary_component_index(trap, trap.restriction(wide_verts));
  Cobordism ta = make_cobordism(trap, {narrow});
  Cobordism tb = make_cobordism(trap, {wide});

  // Both canonical reductions onto the interface keep the same parity.
  try {
    compose_cobordisms(ta, tb);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code == Errc::ReflectivityViolated);
    CHECK(e.witness == "join of {8} and {10}");
  }

  // Rotating the interface by one step restores alternation.
  auto ifc = share(trap.restriction(wide_verts));
  std::map<VertexId, VertexId> rot;
  for (int i = 0; i < 8; ++i) rot[8 + i] = 8 + (i + 1) % 8;
  GlueSpec g;
  g.twist = map_from_vertex_bijection(ifc, ifc, rot);
  Cobordism u = compose_cobordisms(ta, tb, g);
  CHECK(u.complex.f_vector() == std::vector<std::size_t>{16, 24, 8});
  CHECK(u.ingoing.vertices().size() == 4);
  CHECK(u.outgoing.vertices().size() == 4);
}

TEST_CASE("composition failure modes") {
  CellComplex pr = prism(4);
  CellComplex top = pr.restriction({4, 5, 6, 7});
  Cobordism a = make_cobordism(pr, {0});

  SUBCASE("ranks must agree") {
    CHECK(code_of([&] {
      compose_cobordisms(a, make_cobordism(path(2), {0, 1}));
    }) == Errc::NotConnecting);
  }

  SUBCASE("no default interface between rims of different size") {
    CellComplex trap = trapezoid();
    int wide = boundary_component_index(
        trap, trap.restriction({8, 9, 10, 11, 12, 13, 14, 15}));
    try {
      compose_cobordisms(a, make_cobordism(trap, {wide}));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code == Errc::NotConnecting);
      CHECK(std::string(e.what()).find("vertex counts differ") != std::string::npos);
    }
  }

  SUBCASE("interface labels must avoid the first side") {
    GlueSpec g;
    g.rho_a = halving_onto(share(ring(8, 0)), share(top), 0, {4, 5, 6, 7}, false);
    try {
      compose_cobordisms(a, make_cobordism(pr, {0}), g);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code == Errc::VertexClash);
      CHECK(e.witness == "{0,1,2,3}");
    }
  }

  SUBCASE("component indices are validated") {
    GlueSpec g;
    g.from_outgoing = 3;
    CHECK(code_of([&] { compose_cobordisms(a, make_cobordism(pr, {0}), g); }) ==
          Errc::InvalidArgument);
  }
}

TEST_CASE("units absorb on both sides and dualize to units") {
  CellComplex pr = prism(4);
  Cobordism a = make_cobordism(pr, {0});
  Cobordism uin = unit_cobordism(cycle(4));
  CHECK(uin.unit);
  CHECK(uin.ingoing.same_cells_as(cycle(4)));
  CHECK(uin.exactly_collared);

  CHECK(compose_cobordisms(uin, a).complex.same_cells_as(pr));
  CHECK(compose_cobordisms(a, unit_cobordism(pr.restriction({4, 5, 6, 7})))
            .complex.same_cells_as(pr));

  CHECK(code_of([&] { compose_cobordisms(unit_cobordism(cycle(3)), a); }) ==
        Errc::NotConnecting);

  Cobordism du = dual_cobordism(uin);
  CHECK(du.unit);
  CHECK(find_isomorphism(du.complex, cycle(4)).has_value());

  CHECK(code_of([&] { unit_cobordism(CellComplex::build({})); }) ==
        Errc::InvalidArgument);
  CHECK(code_of([&] { unit_cobordism(path(2)); }) == Errc::PreconditionFailed);
}
