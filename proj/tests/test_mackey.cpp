#include <random>

#include "doctest.h"
#include "fusionlim/error.hpp"
#include "fusionlim/grp/catalog.hpp"
#include "fusionlim/mackey/mackey.hpp"

using namespace fusionlim;
using namespace fusionlim::mackey;
using fincat::IndexKind;

namespace {

grp::Subgroup first_of_order(const grp::GroupPtr& g, std::size_t n) {
  for (auto& h : grp::all_subgroups(g))
    if (h.order() == n) return h;
  throw Error("no subgroup of that order");
}

/// Permutation module of a random G-set with two or three orbits.
rep::KGModule random_permutation_module(const grp::GroupPtr& g, unsigned p, std::mt19937& rng) {
  const auto subs = grp::all_subgroups(g);
  std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
  std::uniform_int_distribution<int> orbits(2, 3);
  auto m = rep::permutation_module(g, subs[pick(rng)], p);
  for (int k = orbits(rng); k > 1; --k) m = rep::direct_sum(m, rep::permutation_module(g, subs[pick(rng)], p));
  return m;
}

}  // namespace

TEST_CASE("fixed-point values") {
  auto a4 = grp::named_group("A4");
  auto whole = grp::Subgroup::whole(a4);
  auto k = fixed_point_mackey(rep::trivial_module(a4, 2), whole);
  for (std::size_t i = 0; i < k.lattice.size(); ++i) CHECK(k.dims[i] == 1);
  for (const auto& [key, m] : k.res) CHECK(m.is_identity());
  for (const auto& [key, m] : k.conj) CHECK(m.is_identity());
  for (const auto& [key, m] : *k.transfer) {
    const auto idx = k.lattice[key.second].order() / k.lattice[key.first].order();
    CHECK(m == fpla::FpMatrix::identity(2, 1).scaled(idx % 2));
  }

  auto reg = fixed_point_mackey(rep::regular_module(a4, 3), whole);
  for (std::size_t i = 0; i < reg.lattice.size(); ++i)
    CHECK(reg.dims[i] == a4->order() / reg.lattice[i].order());

  auto s3 = grp::named_group("S3");
  auto perm = fixed_point_mackey(rep::permutation_module(s3, first_of_order(s3, 3), 2),
                                 grp::sylow(s3, 2).subgroup);
  CHECK(perm.dims.back() == 1);
  CHECK(perm.basis_labels.back().size() == 1);
}

TEST_CASE("cohomology values") {
  coh::CohomologyStore store;
  auto a4 = grp::named_group("A4");
  auto v4 = grp::sylow(a4, 2).subgroup;
  auto h0 = cohomology_mackey(a4, v4, 2, 0, store);
  for (auto d : h0.dims) CHECK(d == 1);
  for (const auto& [key, m] : h0.conj) CHECK(m.is_identity());
  CHECK_FALSE(h0.has_transfer());
  CHECK_THROWS_AS(check_cohomological(h0), InvalidArgument);

  auto h1 = cohomology_mackey(a4, v4, 2, 1, store);
  const auto top = h1.index_of(v4);
  CHECK(h1.dims[top] == 2);
  std::size_t order3 = 0;
  for (const auto& [key, m] : h1.conj)
    if (key.second == top && !m.is_identity()) {
      CHECK((m * m * m).is_identity());
      ++order3;
    }
  CHECK(order3 == 8);

  auto s3 = grp::named_group("S3");
  auto c3 = grp::sylow(s3, 3).subgroup;
  auto h = cohomology_mackey(s3, c3, 3, 1, store);
  CHECK(h.dims.back() == 1);
  const auto t = s3->index_of(grp::Perm::from_cycles(3, {{0, 1}}));
  CHECK(h.conj.at({t, h.index_of(c3)}) == fpla::FpMatrix::from_rows(3, {{2}}));
}

TEST_CASE("stable elements limits") {
  auto c1 = grp::named_group("C1");
  auto lone = fixed_point_mackey(rep::trivial_module(c1, 2), grp::Subgroup::whole(c1));
  CHECK(stable_elements_limit(lone, IndexKind::transporter).dim() == lone.dims.back());

  for (const auto& name : {"S3", "A4", "D8"})
    for (unsigned p : {2u, 3u}) {
      auto g = grp::named_group(name);
      auto md = fixed_point_mackey(rep::trivial_module(g, p), grp::sylow(g, p).subgroup);
      CHECK(stable_elements_limit(md, IndexKind::transporter).dim() == 1);
      CHECK(stable_elements_limit(md, IndexKind::fusion).dim() == 1);
    }

  auto a4 = grp::named_group("A4");
  auto v4 = grp::sylow(a4, 2).subgroup;
  auto m = rep::permutation_module(a4, first_of_order(a4, 3), 2);
  auto md = fixed_point_mackey(m, v4);
  auto st = stable_elements_limit(md, IndexKind::transporter);
  CHECK(st.dim() == 1);
  CHECK(st.s_component.dim() == 1);
  CHECK(verify_fixed_point_ce(m).dim_global == 1);
  CHECK_THROWS_AS(stable_elements_limit(md, IndexKind::fusion), FunctorialityError);
}

TEST_CASE("fusion and transporter agree on cohomology instances") {
  coh::CohomologyStore store;
  const std::vector<std::tuple<std::string, unsigned, std::size_t>> cases{
      {"S3", 2, 4}, {"S3", 3, 4}, {"A4", 2, 3}, {"S4", 2, 2}, {"D8", 2, 3}};
  for (const auto& [name, p, n_max] : cases) {
    auto g = grp::named_group(name);
    auto s = grp::sylow(g, p).subgroup;
    for (std::size_t n = 0; n <= n_max; ++n) {
      auto md = cohomology_mackey(g, s, p, n, store);
      auto f = stable_elements_limit(md, IndexKind::fusion);
      auto t = stable_elements_limit(md, IndexKind::transporter);
      CHECK_MESSAGE(f.dim() == t.dim(), name, " n=", n);
      CHECK(f.s_component == t.s_component);
      CHECK(f.dim() == (*store.get(g, p, n))[n].dim());
    }
  }
}

TEST_CASE("fixed-point Cartan-Eilenberg") {
  auto a4 = grp::named_group("A4");
  auto k = verify_fixed_point_ce(rep::trivial_module(a4, 2));
  CHECK(k.pass());
  CHECK(k.dim_global == 1);
  CHECK(k.dim_limit == 1);
  auto reg = verify_fixed_point_ce(rep::regular_module(a4, 2));
  CHECK(reg.pass());
  CHECK(reg.dim_global == 1);
  CHECK(reg.dim_limit == 1);

  std::mt19937 rng(20261014);
  std::size_t checked = 0;
  for (const auto& name : {"S3", "A4"})
    for (unsigned p : {2u, 3u})
      for (int i = 0; i < 5; ++i) {
        auto g = grp::named_group(name);
        auto m = random_permutation_module(g, p, rng);
        auto r = verify_fixed_point_ce(m);
        CHECK_MESSAGE(r.pass(), name, " p=", p, " ", m.label());
        CHECK(r.s_is_sylow);
        ++checked;
      }
  CHECK(checked >= 10);
}

TEST_CASE("a non-Sylow subgroup breaks the transfer section") {
  auto s3 = grp::named_group("S3");
  auto r = verify_fixed_point_ce(rep::trivial_module(s3, 2), first_of_order(s3, 3));
  CHECK_FALSE(r.s_is_sylow);
  CHECK_FALSE(r.index_invertible);
  CHECK(r.same_subspace);
  CHECK_FALSE(r.transfer_surjective);
  CHECK_FALSE(r.pass());
  auto a4 = grp::named_group("A4");
  auto r2 = verify_fixed_point_ce(rep::permutation_module(a4, first_of_order(a4, 3), 2),
                                  first_of_order(a4, 2));
  CHECK_FALSE(r2.pass());
}

TEST_CASE("cohomological axiom") {
  for (const auto& name : {"S3", "A4"})
    for (unsigned p : {2u, 3u}) {
      auto g = grp::named_group(name);
      auto whole = grp::Subgroup::whole(g);
      for (const auto& h : grp::all_subgroups(g)) {
        auto r = check_cohomological(fixed_point_mackey(rep::permutation_module(g, h, p), whole));
        CHECK(r.pass());
        CHECK(r.pairs_checked > 0);
      }
      CHECK(check_cohomological(fixed_point_mackey(rep::regular_module(g, p), whole)).pass());
    }
  auto s3 = grp::named_group("S3");
  auto md = fixed_point_mackey(rep::permutation_module(s3, first_of_order(s3, 2), 3),
                               grp::Subgroup::whole(s3));
  auto& [key, tr] = *md.transfer->rbegin();
  tr = tr.scaled(2);
  auto r = check_cohomological(md);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].p_index == key.first);
  CHECK(r.failures[0].q_index == key.second);
  CHECK(r.failures[0].description.find("S3") != std::string::npos);
}

TEST_CASE("monadicity section witness") {
  auto c2 = grp::named_group("C2");
  auto trivial = monadicity_section_witness(rep::regular_module(c2, 2));
  CHECK(trivial.index == 1);
  CHECK(trivial.pass());
  auto s3 = monadicity_section_witness(rep::trivial_module(grp::named_group("S3"), 2));
  CHECK(s3.index == 3);
  CHECK(s3.pass());
  auto a4 = grp::named_group("A4");
  auto r = monadicity_section_witness(rep::regular_module(a4, 2));
  CHECK(r.index == 3);
  CHECK(r.pass());
  auto bad = monadicity_section_witness(rep::trivial_module(a4, 2), first_of_order(a4, 2));
  CHECK(bad.composite_is_index);
  CHECK_FALSE(bad.index_invertible);
  CHECK_FALSE(bad.pass());
}

TEST_CASE("functoriality failures are reported") {
  auto s3 = grp::named_group("S3");
  auto md = fixed_point_mackey(rep::regular_module(s3, 2), grp::sylow(s3, 2).subgroup);
  auto& [key, m] = *md.res.begin();
  if (m.rows() > 0 && m.cols() > 0) m.set(0, 0, m(0, 0) ^ 1);
  CHECK_THROWS_AS(md.validate(), FunctorialityError);
}
