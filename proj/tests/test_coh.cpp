#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fusionlim/coh/syzygy.hpp"
#include "fusionlim/error.hpp"
#include "fusionlim/fpla/linalg.hpp"
#include "fusionlim/grp/catalog.hpp"

using namespace fusionlim;
using namespace fusionlim::coh;

namespace {

/// Number of homomorphisms G → C_p, by checking every assignment of the
/// generators against the multiplication table.
std::size_t count_homs_to_cyclic(const grp::GroupPtr& g, unsigned p) {
  const std::size_t k = g->generators().size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= p;
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<unsigned> gen_value(k);
    for (std::size_t i = 0, c = code; i < k; ++i, c /= p) gen_value[i] = c % p;
    std::vector<int> value(g->order(), -1);
    value[0] = 0;
    bool ok = true, changed = true;
    while (changed && ok) {
      changed = false;
      for (grp::ElementId x = 0; x < g->order() && ok; ++x) {
        if (value[x] < 0) continue;
        for (std::size_t i = 0; i < k; ++i) {
          const auto y = g->multiply(x, g->index_of(g->generators()[i]));
          const int v = static_cast<int>((value[x] + gen_value[i]) % p);
          if (value[y] < 0) {
            value[y] = v;
            changed = true;
          } else if (value[y] != v) {
            ok = false;
          }
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

std::size_t log_base(std::size_t x, unsigned p) {
  std::size_t k = 0;
  while (x > 1) {
    x /= p;
    ++k;
  }
  return k;
}

grp::Subgroup first_of_order(const grp::GroupPtr& g, std::size_t n) {
  for (auto& h : grp::all_subgroups(g))
    if (h.order() == n) return h;
  throw Error("no subgroup of that order");
}

}  // namespace

TEST_CASE("cochain dimensions and d∘d = 0") {
  for (const auto& name : {"C2", "C3", "V4", "S3", "C4", "D8", "Q8"}) {
    auto g = grp::named_group(name);
    auto bar = BarResolution::build(g, 2, 3);
    CHECK(bar.verify_d_squared());
    for (std::size_t n = 0; n <= 3; ++n) CHECK(bar.cochain_dim(n) == power(g->order() - 1, n));
  }
  auto c3 = BarResolution::build(grp::named_group("C3"), 3, 2);
  CHECK(c3.cochain_dim(2) == 4);
  auto trivial = BarResolution::build(grp::named_group("C1"), 2, 3);
  CHECK(trivial.cochain_dim(1) == 0);
  CHECK(trivial.verify_d_squared());
}

TEST_CASE("degree budget") {
  auto s4 = grp::named_group("S4");
  CHECK(default_max_degree(12) == 4);
  CHECK(default_max_degree(24) == 3);
  CHECK_THROWS_AS(BarResolution::build(s4, 2, 4), BudgetExceeded);
  try {
    BarResolution::build(s4, 2, 4);
  } catch (const BudgetExceeded& e) {
    CHECK(std::string(e.what()).find("300000") != std::string::npos);
  }
}

TEST_CASE("cohomology of C2 and H^0") {
  CohomologyStore store;
  auto c2 = store.get(grp::named_group("C2"), 2, 4);
  for (std::size_t n = 0; n <= 4; ++n) CHECK((*c2)[n].dim() == 1);
  for (const auto& name : grp::builtin_group_names())
    for (unsigned p : {2u, 3u}) CHECK((*store.get(grp::named_group(name), p, 0))[0].dim() == 1);
}

TEST_CASE("H^1 equals Hom(G, C_p)") {
  CohomologyStore store;
  for (const auto& name : {"C2", "C3", "C4", "V4", "S3", "D8", "Q8", "A4", "S4"})
    for (unsigned p : {2u, 3u}) {
      auto g = grp::named_group(name);
      CHECK_MESSAGE((*store.get(g, p, 1))[1].dim() == log_base(count_homs_to_cyclic(g, p), p),
                    name, " p=", p);
    }
  CHECK((*store.get(grp::named_group("A4"), 2, 1))[1].dim() == 0);
}

TEST_CASE("known dimensions of small groups") {
  CohomologyStore store;
  const std::vector<std::tuple<std::string, unsigned, std::vector<std::size_t>>> cases{
      {"C4", 2, {1, 1, 1, 1, 1}}, {"C3", 3, {1, 1, 1, 1, 1}}, {"V4", 2, {1, 2, 3, 4, 5}},
      {"D8", 2, {1, 2, 3, 4, 5}}, {"Q8", 2, {1, 2, 2, 1, 1}}, {"C3", 2, {1, 0, 0, 0, 0}}};
  for (const auto& [name, p, dims] : cases) {
    auto h = store.get(grp::named_group(name), p, 4);
    for (std::size_t n = 0; n < dims.size(); ++n) CHECK_MESSAGE((*h)[n].dim() == dims[n], name, " n=", n);
  }
}

TEST_CASE("representatives are independent cocycles") {
  CohomologyStore store;
  auto h = store.get(grp::named_group("D8"), 2, 3);
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto& c = (*h)[n];
    for (const auto& r : c.representatives()) CHECK(c.is_cocycle(r));
    auto span = c.boundaries().sum(fpla::Subspace::span(2, c.cochain_dim(), c.representatives()));
    CHECK(span.dim() == c.boundaries().dim() + c.dim());
  }
}

TEST_CASE("restriction maps") {
  CohomologyStore store;
  auto v4 = grp::named_group("V4");
  for (std::size_t n = 0; n <= 3; ++n) {
    auto id = restriction_map(v4, grp::Subgroup::whole(v4), 2, n, store);
    CHECK(id.matrix.is_identity());
  }
  for (const auto& h : grp::all_subgroups(v4))
    if (h.order() == 2) CHECK(fpla::rank(restriction_map(v4, h, 2, 1, store).matrix) == 1);
  auto s3 = grp::named_group("S3");
  auto c2 = grp::sylow(s3, 2).subgroup;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto r = restriction_map(s3, c2, 2, n, store);
    CHECK(r.source_dim == 1);
    CHECK(r.target_dim == 1);
    CHECK(fpla::rank(r.matrix) == 1);
  }
}

TEST_CASE("conjugation maps") {
  CohomologyStore store;
  auto s3 = grp::named_group("S3");
  auto c3 = first_of_order(s3, 3);
  for (std::size_t n = 0; n <= 3; ++n)
    CHECK(conjugation_map(grp::PermGroup::identity(), c3, c3, 3, n, store).matrix.is_identity());
  const auto t = s3->index_of(grp::Perm::from_cycles(3, {{0, 1}}));
  auto inv1 = conjugation_map(t, c3, c3, 3, 1, store);
  CHECK(inv1.matrix == fpla::FpMatrix::from_rows(3, {{-1}}));
  auto inv4 = conjugation_map(t, c3, c3, 3, 4, store);
  CHECK(inv4.matrix.is_identity());
  auto d8 = grp::named_group("D8");
  auto whole = grp::Subgroup::whole(d8);
  for (grp::ElementId g = 0; g < d8->order(); ++g)
    for (std::size_t n = 1; n <= 3; ++n)
      CHECK(conjugation_map(g, whole, whole, 2, n, store).matrix.is_identity());
  auto c2 = first_of_order(s3, 2);
  CHECK_THROWS_AS(conjugation_map(s3->index_of(grp::Perm::from_cycles(3, {{0, 1, 2}})), c2, c2, 2, 1, store),
                  InvalidArgument);
}

TEST_CASE("cohomology diagrams") {
  CohomologyStore store;
  auto c2 = grp::named_group("C2");
  auto f = fincat::build_fusion_category(c2, grp::Subgroup::whole(c2));
  auto cd = cohomology_diagram(f, 2, 1, store);
  CHECK(cd.diagram.dims.back() == 1);

  auto s3 = grp::named_group("S3");
  auto fs = fincat::build_fusion_category(s3, grp::sylow(s3, 2).subgroup);
  auto ds = cohomology_diagram(fs, 2, 1, store);
  for (auto m : fs.category->hom(1, 1)) CHECK(ds.diagram.maps[m].is_identity());

  auto a4 = grp::named_group("A4");
  auto v4 = grp::sylow(a4, 2).subgroup;
  auto fa = fincat::build_fusion_category(a4, v4);
  auto da = cohomology_diagram(fa, 2, 1, store);
  const auto top = fa.object_of(v4);
  CHECK(da.diagram.dims[top] == 2);
  std::size_t order3 = 0;
  for (auto m : fa.category->hom(top, top)) {
    const auto& a = da.diagram.maps[m];
    if (a.is_identity()) continue;
    CHECK((a * a * a).is_identity());
    ++order3;
  }
  CHECK(order3 == 2);
  auto ta = fincat::build_transporter_category(a4, v4);
  CHECK(ta.category->hom(top, top).size() == 12);
  cohomology_diagram(ta, 2, 2, store);  // validates functoriality
}

TEST_CASE("stable elements") {
  CohomologyStore store;
  auto s3 = grp::named_group("S3");
  auto c2 = grp::sylow(s3, 2).subgroup;
  for (std::size_t n = 0; n <= 4; ++n) CHECK(stable_elements(s3, c2, 2, n, store).dim() == 1);
  auto c3 = grp::sylow(s3, 3).subgroup;
  CHECK(stable_elements(s3, c3, 3, 1, store).dim() == 0);
  CHECK(stable_elements(s3, c3, 3, 4, store).dim() == 1);
  auto d8 = grp::named_group("D8");
  for (std::size_t n = 0; n <= 3; ++n)
    CHECK(stable_elements(d8, grp::Subgroup::whole(d8), 2, n, store).dim() ==
          (*store.get(d8, 2, 3))[n].dim());
}

TEST_CASE("Cartan-Eilenberg in small cases") {
  CohomologyStore store;
  auto r = verify_cartan_eilenberg(grp::named_group("S3"), 2, 4, store);
  CHECK(r.all_pass());
  for (const auto& d : r.degrees) CHECK(d.dim_global == 1);
  auto r3 = verify_cartan_eilenberg(grp::named_group("S3"), 3, 4, store);
  CHECK(r3.all_pass());
  const std::vector<std::size_t> dims{1, 0, 0, 1, 1};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(r3.degrees[n].dim_global == dims[n]);
  auto r5 = verify_cartan_eilenberg(grp::named_group("S3"), 5, 3, store);
  CHECK(r5.all_pass());
  CHECK_FALSE(r5.p_divides_order);
  CHECK(r5.degrees[2].dim_global == 0);
}

TEST_CASE("a degree over the cap is reported, not computed") {
  CohomologyStore store(StoreOptions{std::nullopt, 1000, false});
  auto r = verify_cartan_eilenberg(grp::named_group("S3"), 2, 4, store);
  REQUIRE(r.degrees.size() == 5);
  CHECK(r.degrees[2].computed);
  CHECK_FALSE(r.degrees[4].computed);
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("syzygies") {
  auto c2 = grp::named_group("C2");
  auto o1 = syzygy(c2, 2, 1);
  CHECK(o1.module.dim() == 1);
  CHECK(o1.module.action(1).is_identity());
  auto k = rep::trivial_module(c2, 2);
  CHECK(rep::stable_hom(syzygy(c2, 2, 0).module, k).dim() == 1);
  CHECK(syzygy(grp::named_group("C3"), 3, 1).module.dim() == 2);
  for (const auto& name : {"S3", "V4", "A4"}) {
    auto g = grp::named_group(name);
    std::size_t prev = 1;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto o = syzygy(g, 2, n);
      CHECK(o.module.dim() == power(g->order() - 1, n - 1) * g->order() - prev);
      prev = o.module.dim();
    }
  }
}

TEST_CASE("Tate comparison") {
  CohomologyStore store;
  for (const auto& name : {"C2", "C3", "S3", "V4"}) {
    auto r = verify_tate_ce(grp::named_group(name), 2, 3, store);
    CHECK_MESSAGE(r.all_pass(), name);
  }
  auto c2 = verify_tate_ce(grp::named_group("C2"), 2, 3, store);
  for (const auto& d : c2.degrees) CHECK(d.dim_cohomology == 1);
  auto c3 = verify_tate_ce(grp::named_group("C3"), 2, 3, store);
  for (const auto& d : c3.degrees) CHECK(d.dim_stable_global == 0);
}

TEST_CASE("cache round trip and corruption") {
  const auto dir = std::filesystem::temp_directory_path() / "fusionlim-test-cache";
  std::filesystem::remove_all(dir);
  auto g = grp::named_group("D8");
  std::vector<std::size_t> cold_dims;
  {
    CohomologyStore cold(StoreOptions{dir, kDefaultBudget, false});
    auto h = cold.get(g, 2, 3);
    for (std::size_t n = 0; n <= 3; ++n) cold_dims.push_back((*h)[n].dim());
    CHECK(cold.cache_hits() == 0);
  }
  CohomologyStore warm(StoreOptions{dir, kDefaultBudget, false});
  auto h = warm.get(g, 2, 3);
  CHECK(warm.cache_hits() == 1);
  CHECK(h->from_cache);
  CohomologyStore fresh;
  auto ref = fresh.get(g, 2, 3);
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK((*h)[n].dim() == cold_dims[n]);
    CHECK((*h)[n].classes() == (*ref)[n].classes());
  }

  const auto file = warm.cache_file(g->digest(), 2, 3);
  {
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(40);
    f.put('\x7f');
  }
  CohomologyStore healing(StoreOptions{dir, kDefaultBudget, false});
  auto healed = healing.get(g, 2, 3);
  CHECK(healing.cache_hits() == 0);
  REQUIRE(healing.warnings().size() == 1);
  for (std::size_t n = 0; n <= 3; ++n) CHECK((*healed)[n].dim() == cold_dims[n]);
  CohomologyStore again(StoreOptions{dir, kDefaultBudget, false});
  again.get(g, 2, 3);
  CHECK(again.cache_hits() == 1);
  std::filesystem::remove_all(dir);
}
