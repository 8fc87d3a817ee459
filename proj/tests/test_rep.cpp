#include <random>

#include "doctest.h"
#include "fusionlim/error.hpp"
#include "fusionlim/fpla/linalg.hpp"
#include "fusionlim/grp/catalog.hpp"
#include "fusionlim/rep/hom.hpp"

using namespace fusionlim;
using namespace fusionlim::rep;

namespace {

grp::Subgroup first_of_order(const grp::GroupPtr& g, std::size_t n) {
  for (auto& h : grp::all_subgroups(g))
    if (h.order() == n) return h;
  throw Error("no subgroup of that order");
}

}  // namespace

TEST_CASE("module constructors") {
  auto s3 = grp::named_group("S3");
  auto k = trivial_module(s3, 2);
  CHECK(k.dim() == 1);
  for (const auto& a : k.generator_actions()) CHECK(a.is_identity());
  CHECK(regular_module(grp::named_group("C2"), 2).dim() == 2);
  CHECK(permutation_module(s3, first_of_order(s3, 2), 2).dim() == 3);
}

TEST_CASE("relations are checked") {
  auto c3 = grp::named_group("C3");
  // A transposition matrix does not have order 3.
  CHECK_THROWS_AS(KGModule::from_generators(c3, 2, 2, {fpla::FpMatrix::from_rows(2, {{0, 1}, {1, 0}})}),
                  InvalidArgument);
  auto ok = KGModule::from_generators(c3, 2, 2, {fpla::FpMatrix::from_rows(2, {{0, 1}, {1, 1}})});
  CHECK(ok.dim() == 2);
  auto reg = regular_module(c3, 3);
  auto rebuilt = KGModule::from_generators(c3, 3, 3, reg.generator_actions());
  for (grp::ElementId x = 0; x < 3; ++x) CHECK(rebuilt.action(x) == reg.action(x));
}

TEST_CASE("hom space examples") {
  auto c2 = grp::named_group("C2");
  CHECK(hom_space(trivial_module(c2, 2), trivial_module(c2, 2)).dim() == 1);
  CHECK(hom_space(regular_module(c2, 2), regular_module(c2, 2)).dim() == 2);
  auto s3 = grp::named_group("S3");
  auto perm = permutation_module(s3, first_of_order(s3, 2), 2);
  CHECK(hom_space(perm, trivial_module(s3, 2)).dim() == 1);
  CHECK_THROWS_AS(hom_space(perm, trivial_module(s3, 3)), InvalidArgument);
}

TEST_CASE("hom space elements intertwine") {
  auto a4 = grp::named_group("A4");
  auto m = permutation_module(a4, first_of_order(a4, 3), 2);
  auto n = regular_module(a4, 2);
  auto h = hom_space(m, n);
  for (const auto& phi : h.basis())
    for (grp::ElementId x = 0; x < a4->order(); ++x) CHECK(phi * m.action(x) == n.action(x) * phi);
  // Brute force over all 4×? maps is too large; compare with Frobenius reciprocity:
  // Hom(k[G/H], N) ≅ N^H.
  std::size_t fixed = 0;
  {
    fpla::Subspace eq(2, n.dim());
    const auto c3 = first_of_order(a4, 3);
    for (auto x : c3.elements()) {
      auto a = n.action(x) - fpla::FpMatrix::identity(2, n.dim());
      for (std::size_t r = 0; r < a.rows(); ++r) eq.insert(a.row(r));
    }
    fixed = eq.annihilator().dim();
  }
  CHECK(h.dim() == fixed);
}

TEST_CASE("restriction") {
  auto s3 = grp::named_group("S3");
  auto reg = regular_module(s3, 2);
  auto whole = restrict(reg, grp::Subgroup::whole(s3));
  CHECK(whole.module.dim() == 6);
  auto c3 = first_of_order(s3, 3);
  auto r = restrict(reg, c3);
  CHECK(r.module.dim() == 6);
  CHECK(r.module.group()->order() == 3);
  // kC3 ⊕ kC3: endomorphism ring has dimension 2·2·3.
  CHECK(hom_space(r.module, r.module).dim() == 12);
  auto k = restrict(trivial_module(s3, 2), c3);
  for (const auto& a : k.module.generator_actions()) CHECK(a.is_identity());
}

TEST_CASE("trace subspace and stable hom") {
  auto c2 = grp::named_group("C2");
  auto k2 = trivial_module(c2, 2);
  CHECK(projective_trace_subspace(k2, k2).dim() == 0);
  CHECK(stable_hom(k2, k2).dim() == 1);
  auto reg = regular_module(c2, 2);
  CHECK(projective_trace_subspace(reg, k2) == hom_space(reg, k2).space);
  CHECK(stable_hom(reg, k2).dim() == 0);
  auto c3 = grp::named_group("C3");
  auto k3 = trivial_module(c3, 2);
  CHECK(projective_trace_subspace(k3, k3).dim() == 1);
  CHECK(stable_hom(k3, k3).dim() == 0);
}

TEST_CASE("trace subspace is closed under composition with intertwiners") {
  std::mt19937 rng(4);
  auto s3 = grp::named_group("S3");
  std::vector<KGModule> mods{trivial_module(s3, 2), regular_module(s3, 2),
                             permutation_module(s3, first_of_order(s3, 2), 2),
                             permutation_module(s3, first_of_order(s3, 3), 2)};
  for (int t = 0; t < 12; ++t) {
    const auto& a = mods[rng() % 4];
    const auto& b = mods[rng() % 4];
    const auto& c = mods[rng() % 4];
    auto tr = projective_trace_subspace(a, b);
    auto pre = hom_space(c, a);
    auto post = hom_space(b, c);
    auto trc = projective_trace_subspace(c, b);
    auto tra = projective_trace_subspace(a, c);
    for (std::size_t i = 0; i < tr.dim(); ++i) {
      auto phi = unvectorize(2, b.dim(), a.dim(), tr.basis_vector(i));
      for (const auto& u : pre.basis()) CHECK(trc.contains(vectorize(phi * u)));
      for (const auto& v : post.basis()) CHECK(tra.contains(vectorize(v * phi)));
    }
  }
}

TEST_CASE("conjugation twist is contravariantly functorial") {
  auto s3 = grp::named_group("S3");
  auto c2 = grp::sylow(s3, 2).subgroup;
  auto t = fincat::build_transporter_category(s3, c2);
  auto m = permutation_module(s3, first_of_order(s3, 3), 2);
  auto n = regular_module(s3, 2);
  auto d = hom_diagram(t, m, n, false);
  d.diagram.validate();
  const auto& c = *t.category;
  for (fincat::MorphismId f = 0; f < c.morphism_count(); ++f)
    for (auto g : c.out(c.dst(f))) {
      auto gf = c.compose(g, f);
      CHECK(t.witness[gf] == s3->multiply(t.witness[g], t.witness[f]));
      CHECK(d.diagram.maps[gf] == d.diagram.maps[f] * d.diagram.maps[g]);
    }
  auto k = trivial_module(s3, 2);
  auto whole = grp::Subgroup::whole(s3);
  CHECK(conj_twist(k, k, 0, whole, whole, {1}) == fpla::Vector{1});
}

TEST_CASE("conjugation condition is enforced") {
  auto s3 = grp::named_group("S3");
  auto subs = grp::all_subgroups(s3);
  auto k = trivial_module(s3, 2);
  // Find g with g P g⁻¹ ≠ P for P of order 2.
  const auto& p = subs[1];
  for (grp::ElementId g = 0; g < 6; ++g)
    if (!(grp::conjugate_subgroup(g, p) == p)) {
      CHECK_THROWS_AS(conj_twist(k, k, g, p, p, {1}), InvalidArgument);
      break;
    }
}

TEST_CASE("hom limit over the transporter category") {
  auto c2 = grp::named_group("C2");
  auto r0 = hom_limit_over_transporter(c2, grp::Subgroup::whole(c2), regular_module(c2, 2),
                                       trivial_module(c2, 2), false);
  CHECK(r0.iso());

  auto s3 = grp::named_group("S3");
  auto m = permutation_module(s3, first_of_order(s3, 3), 2);
  auto r1 = hom_limit_over_transporter(s3, grp::sylow(s3, 2).subgroup, m, m, false);
  CHECK(r1.dim_global == r1.dim_limit);
  CHECK(r1.iso());
  CHECK(r1.claim);

  auto a4 = grp::named_group("A4");
  auto k = trivial_module(a4, 2);
  auto r2 = hom_limit_over_transporter(a4, grp::sylow(a4, 2).subgroup, k, k, false);
  CHECK(r2.dim_global == 1);
  CHECK(r2.dim_limit == 1);
  CHECK(r2.iso());

  auto r3 = hom_limit_over_transporter(a4, grp::Subgroup::trivial(a4), k, k, false);
  CHECK_FALSE(r3.claim);
}

TEST_CASE("the Hom diagram does not factor through fusion") {
  auto a4 = grp::named_group("A4");
  auto v4 = grp::sylow(a4, 2).subgroup;
  auto t = fincat::build_transporter_category(a4, v4);
  auto f = fincat::build_fusion_category(a4, v4);
  auto reg = regular_module(a4, 2);
  auto d = hom_diagram(t, reg, reg, false);
  auto w = fusion_obstruction(t, f, d);
  REQUIRE(w.has_value());
  CHECK(d.diagram.maps[w->first] != d.diagram.maps[w->second]);
  // With trivial coefficients the action does factor.
  auto k = trivial_module(a4, 2);
  CHECK_FALSE(fusion_obstruction(t, f, hom_diagram(t, k, k, false)).has_value());
}

TEST_CASE("relative trace after restriction multiplies by the index") {
  for (const auto& [name, p] : std::vector<std::pair<std::string, unsigned>>{{"S3", 2}, {"A4", 2}, {"S3", 3}}) {
    auto g = grp::named_group(name);
    auto s = grp::sylow(g, p).subgroup;
    auto m = regular_module(g, p);
    auto n = permutation_module(g, s, p);
    const auto index = g->order() / s.order();
    auto h = hom_space(m, n);
    for (std::size_t i = 0; i < h.dim(); ++i) {
      auto phi = h.space.basis_vector(i);
      auto tr = relative_trace(m, n, s, phi);
      fpla::PrimeField f(p);
      for (auto& x : phi) x = f.mul(x, f.reduce(static_cast<long long>(index)));
      CHECK(tr == phi);
    }
  }
}
