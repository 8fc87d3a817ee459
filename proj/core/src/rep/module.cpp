#include "fusionlim/rep/module.hpp"

#include "fusionlim/error.hpp"

namespace fusionlim::rep {

using fpla::FpMatrix;
using grp::ElementId;

void KGModule::check(const KGModule& m) {
  const auto& g = *m.group_;
  const auto& acts = *m.actions_;
  if (acts.size() != g.order()) throw InvalidArgument("module needs one matrix per element");
  for (const auto& a : acts)
    if (a.rows() != m.dim_ || a.cols() != m.dim_ || a.p() != m.p_)
      throw InvalidArgument("module action matrix has the wrong shape");
  if (!acts[grp::PermGroup::identity()].is_identity())
    throw InvalidArgument("module: identity does not act as 1");
  std::vector<ElementId> gens;
  for (const auto& s : g.generators()) gens.push_back(g.index_of(s));
  for (ElementId x = 0; x < g.order(); ++x)
    for (const auto s : gens)
      if (acts[x] * acts[s] != acts[g.multiply(x, s)])
        throw InvalidArgument("module: generator matrices violate a group relation");
}

KGModule KGModule::from_generators(grp::GroupPtr g, unsigned p, std::size_t dim,
                                   const std::vector<FpMatrix>& generator_actions,
                                   std::string label) {
  if (generator_actions.size() != g->generators().size())
    throw InvalidArgument("module needs one matrix per generator");
  std::vector<FpMatrix> acts(g->order());
  acts[grp::PermGroup::identity()] = FpMatrix::identity(p, dim);
  // Elements in breadth-first order, so parents are filled first.
  std::vector<std::vector<ElementId>> children(g->order());
  for (ElementId e = 1; e < g->order(); ++e) children[g->word_parent(e)].push_back(e);
  std::vector<ElementId> queue{grp::PermGroup::identity()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto c : children[queue[i]]) {
      const auto& s = generator_actions.at(g->word_generator(c));
      if (s.rows() != dim || s.cols() != dim)
        throw InvalidArgument("module generator matrix has the wrong shape");
      acts[c] = acts[queue[i]] * s;
      queue.push_back(c);
    }
  return from_element_action(std::move(g), p, dim, std::move(acts), std::move(label));
}

KGModule KGModule::from_element_action(grp::GroupPtr g, unsigned p, std::size_t dim,
                                       std::vector<FpMatrix> actions, std::string label) {
  KGModule m;
  m.p_ = p;
  m.group_ = std::move(g);
  m.dim_ = dim;
  m.label_ = std::move(label);
  m.actions_ = std::make_shared<const std::vector<FpMatrix>>(std::move(actions));
  check(m);
  return m;
}

std::vector<FpMatrix> KGModule::generator_actions() const {
  std::vector<FpMatrix> out;
  for (const auto& s : group_->generators()) out.push_back(action(group_->index_of(s)));
  return out;
}

KGModule trivial_module(const grp::GroupPtr& g, unsigned p) {
  std::vector<FpMatrix> acts(g->order(), FpMatrix::identity(p, 1));
  return KGModule::from_element_action(g, p, 1, std::move(acts), "trivial");
}

KGModule regular_module(const grp::GroupPtr& g, unsigned p) {
  const std::size_t n = g->order();
  std::vector<FpMatrix> acts;
  acts.reserve(n);
  for (ElementId x = 0; x < n; ++x) {
    FpMatrix a(p, n, n);
    for (ElementId y = 0; y < n; ++y) a.set(g->multiply(x, y), y, 1);
    acts.push_back(std::move(a));
  }
  return KGModule::from_element_action(g, p, n, std::move(acts), "regular");
}

KGModule permutation_module(const grp::GroupPtr& g, const grp::Subgroup& h, unsigned p) {
  const auto t = grp::left_transversal(g, h);
  const std::size_t n = t.reps.size();
  std::vector<std::size_t> coset_of(g->order());
  for (std::size_t i = 0; i < n; ++i)
    for (const auto y : h.elements()) coset_of[g->multiply(t.reps[i], y)] = i;
  std::vector<FpMatrix> acts;
  acts.reserve(g->order());
  for (ElementId x = 0; x < g->order(); ++x) {
    FpMatrix a(p, n, n);
    for (std::size_t i = 0; i < n; ++i) a.set(coset_of[g->multiply(x, t.reps[i])], i, 1);
    acts.push_back(std::move(a));
  }
  return KGModule::from_element_action(g, p, n, std::move(acts),
                                       "perm:" + grp::structure_label(h));
}

KGModule direct_sum(const KGModule& a, const KGModule& b) {
  require_compatible(a, b);
  const std::size_t n = a.dim() + b.dim();
  std::vector<FpMatrix> acts;
  acts.reserve(a.group()->order());
  for (ElementId x = 0; x < a.group()->order(); ++x) {
    FpMatrix m(a.p(), n, n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m.set(i, j, a.action(x)(i, j));
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) m.set(a.dim() + i, a.dim() + j, b.action(x)(i, j));
    acts.push_back(std::move(m));
  }
  return KGModule::from_element_action(a.group(), a.p(), n, std::move(acts),
                                       a.label() + "+" + b.label());
}

RestrictedModule restrict(const KGModule& m, const grp::Subgroup& h) {
  if (h.parent() != m.group()) throw InvalidArgument("restrict: H is not a subgroup of G");
  auto emb = grp::materialize(h);
  std::vector<FpMatrix> acts;
  acts.reserve(h.order());
  for (const auto x : emb.to_parent) acts.push_back(m.action(x));
  auto module = KGModule::from_element_action(emb.group, m.p(), m.dim(), std::move(acts),
                                              m.label() + "|" + emb.group->name());
  return {std::move(module), std::move(emb)};
}

void require_compatible(const KGModule& m, const KGModule& n) {
  if (m.group() != n.group() && m.group()->digest() != n.group()->digest())
    throw InvalidArgument("modules over different groups");
  if (m.p() != n.p()) throw InvalidArgument("modules over different primes");
}

}  // namespace fusionlim::rep
