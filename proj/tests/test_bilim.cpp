#include "doctest.h"
#include "fusionlim/bilim/bilimit.hpp"
#include "fusionlim/bilim/generate.hpp"
#include "fusionlim/bilim/fixture_io.hpp"
#include "fusionlim/bilim/transporter.hpp"
#include "fusionlim/grp/catalog.hpp"
#include "fusionlim/error.hpp"

using namespace fusionlim;
using namespace fusionlim::bilim;

TEST_CASE("2-category laws and op") {
  auto t = terminal_2category();
  CHECK(same_structure(op_2category(t), t));
  auto arrow = walking_arrow_2category();
  auto op = op_2category(arrow);
  const auto& c = op.one_cells();
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    CHECK(c.src(f) == arrow.one_cells().dst(f));
    CHECK(c.dst(f) == arrow.one_cells().src(f));
  }
  CHECK_FALSE(same_structure(op, arrow));
  CHECK(same_structure(op_2category(op), arrow));
  auto thick = group_2category(
      4, [](std::size_t a, std::size_t b) { return (a + b) % 4; },
      [](std::size_t a, std::size_t b) { return (a + 4 - b) % 2 == 0; }, "C4/C2");
  CHECK(thick.two_cell_count() == 8);
  CHECK(same_structure(op_2category(op_2category(thick)), thick));
  // C4 with 2-cells x ⇒ x+1 is not closed under inverses.
  CHECK_THROWS_AS(group_2category(
                      4, [](std::size_t a, std::size_t b) { return (a + b) % 4; },
                      [](std::size_t a, std::size_t b) { return (b + 4 - a) % 4 == 1; }, "bad"),
                  InvalidArgument);
}

TEST_CASE("underlying category and truncation") {
  auto arrow = walking_arrow_2category();
  CHECK(underlying_1cat(arrow).morphism_count() == tau_1(arrow).category->morphism_count());
  auto par = parallel_iso_2category();
  CHECK(underlying_1cat(par).morphism_count() == 4);
  auto t = tau_1(par);
  CHECK(t.category->morphism_count() == 3);
  CHECK(t.class_of[2] == t.class_of[3]);
  auto thick = group_2category(
      4, [](std::size_t a, std::size_t b) { return (a + b) % 4; },
      [](std::size_t a, std::size_t b) { return (a + 4 - b) % 2 == 0; }, "C4/C2");
  auto tt = tau_1(thick);
  CHECK(tt.category->morphism_count() == 2);

  // A set diagram on τ_1 has the same limit over I^(1) and over τ_1(I).
  auto quotient = truncation_functor(thick, tt);
  for (std::size_t n : {1, 2, 3, 4}) {
    SetDiagram d{tt.category, {n}, {}};
    for (MorphismId f = 0; f < tt.category->morphism_count(); ++f) {
      std::vector<std::size_t> map(n);
      for (std::size_t x = 0; x < n; ++x)
        map[x] = tt.category->is_identity(f) ? x : (n - 1 - x);
      d.maps.push_back(map);
    }
    d.validate();
    auto pulled = pull_back(d, quotient);
    pulled.validate();
    CHECK(set_limit(d) == set_limit(pulled));
    CHECK(set_limit(d).size() == (n % 2));
  }
}

TEST_CASE("terminal index reproduces the category") {
  auto c = chain_category(3);
  auto l = enumerate_bilimit(terminal_diagram(c));
  CHECK(l.objects.size() == 3);
  CHECK(l.morphisms.size() == 6);
  auto d = terminal_diagram(chaotic_category(3));
  auto s = summarize_bilimit(d);
  CHECK(s.objects == 3);
  CHECK(s.morphisms == 9);
  CHECK(s.pass());
}

TEST_CASE("swap on the walking isomorphism") {
  auto d = swap_walking_iso();
  auto l = enumerate_bilimit(d);
  REQUIRE(l.objects.size() == 2);
  CHECK(l.morphisms.size() == 4);
  CHECK(l.identities_forced(d));
  CHECK(l.skeleton_size() == 1);
  const auto& c = *d.values[0];
  CHECK(c.object_label(l.objects[0].d_obj[0]) == "a");
  CHECK(c.morphism(l.objects[0].d_cell[1]).label == "u^-1");
  CHECK(c.object_label(l.objects[1].d_obj[0]) == "b");
  CHECK(c.morphism(l.objects[1].d_cell[1]).label == "u");
  auto h = hom_via_limit(d, l, 0, 1);
  CHECK(h.limit == 1);
  CHECK(h.enumerated == 1);
  CHECK(h.bijection);
  CHECK(verify_canonical_cone(d, l).pass());
  CHECK_THROWS_AS(simplified_hom_diagram(d, l.objects[0], l.objects[1]), InvalidArgument);
  // Equivalent value: the terminal category with the trivial action.
  auto pt = discrete_category(1);
  CatValued2Functor e = d;
  e.values = {pt};
  e.on_one_cells = {fincat::identity_functor(pt), fincat::identity_functor(pt)};
  e.on_two_cells = {{{0}}, {{0}}};
  CHECK(enumerate_bilimit(e).skeleton_size() == l.skeleton_size());
}

TEST_CASE("actions without fixed objects have empty bilimits") {
  for (const auto& d : {rotation_discrete3(), swap_discrete2()}) {
    auto l = enumerate_bilimit(d);
    CHECK(l.objects.empty());
    CHECK(l.morphisms.empty());
  }
}

TEST_CASE("an empty component Hom-set gives an empty limit") {
  auto d = terminal_diagram(chain_category(2));
  auto l = enumerate_bilimit(d);
  auto h = hom_via_limit(d, l, 1, 0);
  CHECK(h.limit == 0);
  CHECK(h.enumerated == 0);
  CHECK(h.bijection);
}

TEST_CASE("simplified diagram for trivial structure") {
  auto c = cyclic_group_category(3);
  auto d = terminal_diagram(c);
  auto l = enumerate_bilimit(d);
  auto s = simplified_hom_diagram(d, l.objects[0], l.objects[0]);
  CHECK(s.matches_general);
  CHECK(set_limit(s.diagram.diagram).size() == 3);
  BilimObject bad = l.objects[0];
  bad.d_cell[0] = 1;
  CHECK_THROWS_AS(hom_set_diagram(d, bad, l.objects[0]), InvalidArgument);
}

TEST_CASE("budget is enforced") {
  auto d = terminal_diagram(chaotic_category(5));
  CHECK(bilimit_search_bound(d) == 5);
  CHECK_THROWS_AS(enumerate_bilimit(d, 4), BudgetExceeded);
}

TEST_CASE("strictness violations are rejected") {
  auto d = swap_walking_iso();
  d.on_one_cells[1].morphism_map = {1, 0, 2, 3};
  CHECK_THROWS_AS(d.validate(), FunctorialityError);
}

TEST_CASE("generated family satisfies the Hom formula") {
  const auto family = generated_family();
  CHECK(family.size() >= 50);
  std::size_t with_two_cells = 0, nonempty = 0, pairs = 0;
  for (const auto& d : family) {
    CHECK(d.index->object_count() <= 3);
    CHECK(d.index->one_cell_count() <= 8);
    for (const auto& v : d.values) {
      CHECK(v->object_count() <= 5);
      CHECK(v->morphism_count() <= 25);
    }
    auto s = summarize_bilimit(d);
    CHECK_MESSAGE(s.pass(), d.name);
    if (d.index->two_cell_count() > d.index->one_cell_count()) ++with_two_cells;
    if (s.objects > 0) ++nonempty;
    pairs += s.homs.size();
  }
  CHECK(with_two_cells >= 5);
  CHECK(nonempty >= 40);
  MESSAGE("diagrams: ", family.size(), " with 2-cells: ", with_two_cells, " hom pairs: ", pairs);
}

TEST_CASE("the transporter Hom diagram is a D_{d,d'} construction") {
  auto s3 = grp::named_group("S3");
  auto c2 = grp::sylow(s3, 2).subgroup;
  auto t = fincat::build_transporter_category(s3, c2);
  const std::vector<rep::KGModule> modules{
      rep::trivial_module(s3, 2), rep::regular_module(s3, 2),
      rep::permutation_module(s3, c2, 2),
      rep::permutation_module(s3, grp::sylow(s3, 3).subgroup, 2)};
  for (const auto& m : modules)
    for (const auto& n : modules) {
      auto r = check_transporter_construction(t, m, n);
      CHECK_MESSAGE(r.pass(), m.label(), " -> ", n.label());
      CHECK(r.morphisms == t.category->morphism_count());
    }
  auto a4 = grp::named_group("A4");
  auto ta = fincat::build_transporter_category(a4, grp::sylow(a4, 2).subgroup);
  CHECK(check_transporter_construction(ta, rep::regular_module(a4, 2), rep::trivial_module(a4, 2)).pass());
}

TEST_CASE("diagram fixtures round trip") {
  for (const auto& d : generated_family()) {
    const auto text = diagram_to_json(d);
    const auto e = parse_diagram(text);
    CHECK(diagram_to_json(e) == text);
    const auto a = summarize_bilimit(d);
    const auto b = summarize_bilimit(e);
    CHECK(a.objects == b.objects);
    CHECK(a.morphisms == b.morphisms);
  }
  CHECK_THROWS_AS(parse_diagram("{"), InvalidArgument);
  CHECK_THROWS_AS(parse_diagram(R"({"index": {"objects": []}})"), InvalidArgument);
}

TEST_CASE("shipped swap fixture") {
  const auto d = load_diagram_file(FUSIONLIM_FIXTURE_DIR "/swap_walking_iso.json");
  const auto s = summarize_bilimit(d);
  CHECK(s.objects == 2);
  CHECK(s.morphisms == 4);
  CHECK(s.pass());
}
