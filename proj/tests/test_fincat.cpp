#include <set>

#include "doctest.h"
#include "fusionlim/error.hpp"
#include "fusionlim/fincat/diagram.hpp"
#include "fusionlim/fincat/subgroup_category.hpp"
#include "fusionlim/grp/catalog.hpp"

using namespace fusionlim;
using namespace fusionlim::fincat;

namespace {

std::size_t hom_size(const SubgroupCategory& c, std::size_t order_p, std::size_t order_q) {
  // First objects of the given orders.
  ObjectId a = 0, b = 0;
  for (ObjectId i = c.objects.size(); i-- > 0;) {
    if (c.objects[i].order() == order_p) a = i;
    if (c.objects[i].order() == order_q) b = i;
  }
  return c.category->hom(a, b).size();
}

FinCatPtr one_object_group(std::size_t n) {
  // Z/n as a one-object category.
  std::vector<Morphism> m;
  for (std::size_t k = 0; k < n; ++k) m.push_back({0, 0, "r" + std::to_string(k)});
  return std::make_shared<const FinCat>(FinCat::build(
      {"*"}, m, {0}, [n](MorphismId g, MorphismId f) { return static_cast<MorphismId>((g + f) % n); }));
}

}  // namespace

TEST_CASE("fusion category of S3 at a transposition") {
  auto g = grp::named_group("S3");
  auto s = grp::sylow(g, 2).subgroup;
  auto f = build_fusion_category(g, s);
  REQUIRE(f.objects.size() == 2);
  CHECK(f.category->hom(1, 1).size() == 1);
  CHECK(f.category->hom(0, 1).size() == 1);
  CHECK(f.category->hom(1, 0).empty());
}

TEST_CASE("fusion category of A4 at V4") {
  auto g = grp::named_group("A4");
  auto f = build_fusion_category(g, grp::sylow(g, 2).subgroup);
  CHECK(f.objects.size() == 5);
  CHECK(hom_size(f, 4, 4) == 3);
}

TEST_CASE("fusion and transporter of C2 in itself") {
  auto g = grp::named_group("C2");
  auto s = grp::Subgroup::whole(g);
  auto f = build_fusion_category(g, s);
  for (ObjectId a = 0; a < 2; ++a)
    for (ObjectId b = 0; b < 2; ++b) CHECK(f.category->hom(a, b).size() <= 1);
  auto t = build_transporter_category(g, s);
  CHECK(t.category->hom(1, 1).size() == 2);
}

TEST_CASE("transporter category of S3 at a transposition") {
  auto g = grp::named_group("S3");
  auto t = build_transporter_category(g, grp::sylow(g, 2).subgroup);
  CHECK(t.category->hom(1, 1).size() == 2);
  CHECK(t.category->hom(0, 0).size() == 6);
  CHECK(t.category->hom(0, 1).size() == 6);
}

TEST_CASE("trivial group categories") {
  auto g = grp::named_group("C1");
  auto t = build_transporter_category(g, grp::Subgroup::whole(g));
  CHECK(t.category->object_count() == 1);
  CHECK(t.category->morphism_count() == 1);
  auto pi = projection_functor(t, build_fusion_category(g, grp::Subgroup::whole(g)));
  CHECK(pi.morphism_map == std::vector<MorphismId>{0});
}

TEST_CASE("S not in G is rejected") {
  auto g = grp::named_group("S3");
  auto other = grp::named_group("C2");
  CHECK_THROWS_AS(build_fusion_category(g, grp::Subgroup::whole(other)), InvalidArgument);
}

TEST_CASE("projection functor is full and counts transporter elements") {
  for (const auto& [name, p] : std::vector<std::pair<std::string, unsigned>>{
           {"S3", 2}, {"S3", 3}, {"A4", 2}, {"A4", 3}, {"S4", 2}, {"D8", 2}, {"Q8", 2}}) {
    auto g = grp::named_group(name);
    auto s = grp::sylow(g, p).subgroup;
    auto t = build_transporter_category(g, s);
    auto f = build_fusion_category(g, s);
    auto pi = projection_functor(t, f);
    CHECK(pi.is_full());
    CHECK(pi.is_identity_on_objects());
    for (ObjectId a = 0; a < t.objects.size(); ++a)
      for (ObjectId b = 0; b < t.objects.size(); ++b) {
        std::size_t count = 0;
        for (grp::ElementId x = 0; x < g->order(); ++x)
          if (conjugate_subgroup(x, t.objects[a]).is_subgroup_of(t.objects[b])) ++count;
        CHECK(t.category->hom(a, b).size() == count);
        CHECK(f.category->hom(a, b).size() <= count);
      }
  }
  auto a4 = grp::named_group("A4");
  auto v4 = grp::sylow(a4, 2).subgroup;
  auto t = build_transporter_category(a4, v4);
  auto f = build_fusion_category(a4, v4);
  auto pi = projection_functor(t, f);
  std::set<MorphismId> images;
  for (auto m : t.category->hom(4, 4)) images.insert(pi.morphism_map[m]);
  CHECK(t.category->hom(4, 4).size() == 12);
  CHECK(images.size() == 3);
}

TEST_CASE("category axioms are enforced") {
  std::vector<Morphism> m{{0, 0, "id"}, {0, 0, "x"}};
  CHECK_THROWS_AS(FinCat::build({"*"}, m, {0}, [](MorphismId, MorphismId) { return MorphismId{0}; }),
                  InvalidArgument);
  auto c = one_object_group(3);
  CHECK(c->inverse(1) == MorphismId{2});
  auto op = c->opposite();
  CHECK(op.compose(1, 2) == c->compose(2, 1));
}

TEST_CASE("one-object diagram without constraints") {
  VectDiagram d{one_object_group(1), 2, Variance::contravariant, {3}, {fpla::FpMatrix::identity(2, 3)}};
  d.validate();
  CHECK(limit_contravariant(d).dim() == 3);
}

TEST_CASE("inversion on C3 in degrees one and four") {
  auto c = one_object_group(2);
  VectDiagram odd{c, 3, Variance::contravariant, {1},
                  {fpla::FpMatrix::identity(3, 1), fpla::FpMatrix::from_rows(3, {{-1}})}};
  odd.validate();
  CHECK(limit_contravariant(odd).dim() == 0);
  VectDiagram even{c, 3, Variance::contravariant, {1},
                   {fpla::FpMatrix::identity(3, 1), fpla::FpMatrix::identity(3, 1)}};
  CHECK(limit_contravariant(even).dim() == 1);
}

TEST_CASE("functoriality violations name the pair") {
  auto c = one_object_group(3);
  VectDiagram bad{c, 2, Variance::contravariant, {1},
                  {fpla::FpMatrix::identity(2, 1), fpla::FpMatrix::identity(2, 1),
                   fpla::FpMatrix(2, 1, 1)}};
  CHECK_THROWS_AS(bad.validate(), FunctorialityError);
  VectDiagram cov{c, 2, Variance::covariant, {1}, {fpla::FpMatrix::identity(2, 1)}};
  CHECK_THROWS_AS(limit_contravariant(cov), InvalidArgument);
}

TEST_CASE("pull back along the projection") {
  auto g = grp::named_group("S3");
  auto s = grp::sylow(g, 2).subgroup;
  auto t = build_transporter_category(g, s);
  auto f = build_fusion_category(g, s);
  auto pi = projection_functor(t, f);
  VectDiagram d{f.category, 2, Variance::contravariant, {1, 1}, {}};
  for (MorphismId m = 0; m < f.category->morphism_count(); ++m)
    d.maps.push_back(fpla::FpMatrix::identity(2, 1));
  d.validate();
  auto pulled = pull_back(d, pi);
  pulled.validate();
  for (auto m : t.category->hom(1, 1)) CHECK(pulled.maps[m].is_identity());
  auto cmp = compare_along(d, pi);
  CHECK(cmp.dim_over_target == 1);
  CHECK(cmp.dim_over_source == 1);
  CHECK(cmp.same_subspace);

  // Identity functor pull back keeps values.
  auto same = pull_back(d, identity_functor(f.category));
  CHECK(same.dims == d.dims);
}

TEST_CASE("covariant limit") {
  // Walking arrow a → b with D(f) = [1 1]: limit is the graph of D(f).
  std::vector<Morphism> m{{0, 0, "1a"}, {1, 1, "1b"}, {0, 1, "f"}};
  auto c = std::make_shared<const FinCat>(FinCat::build({"a", "b"}, m, {0, 1},
      [](MorphismId g, MorphismId f) { return g == 0 || g == 1 ? f : g; }));
  VectDiagram d{c, 2, Variance::covariant, {2, 1},
                {fpla::FpMatrix::identity(2, 2), fpla::FpMatrix::identity(2, 1),
                 fpla::FpMatrix::from_rows(2, {{1, 1}})}};
  d.validate();
  auto lim = limit(d);
  CHECK(lim.dim() == 2);
  CHECK(lim.component(0).dim() == 2);
}
