#include "fusionlim/fincat/diagram.hpp"

#include "fusionlim/error.hpp"

namespace fusionlim::fincat {

void VectDiagram::validate() const {
  if (!index) throw FunctorialityError("diagram without an index category");
  const auto& c = *index;
  if (dims.size() != c.object_count() || maps.size() != c.morphism_count())
    throw FunctorialityError("diagram tables have the wrong size");
  const bool co = variance == Variance::covariant;
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    const auto rows = dims[co ? c.dst(f) : c.src(f)];
    const auto cols = dims[co ? c.src(f) : c.dst(f)];
    if (maps[f].rows() != rows || maps[f].cols() != cols || maps[f].p() != p)
      throw FunctorialityError("map of '" + c.morphism(f).label + "' has the wrong shape");
  }
  for (ObjectId a = 0; a < c.object_count(); ++a)
    if (!maps[c.identity(a)].is_identity())
      throw FunctorialityError("identity of '" + c.object_label(a) + "' is not sent to 1");
  for (MorphismId f = 0; f < c.morphism_count(); ++f)
    for (const MorphismId g : c.out(c.dst(f))) {
      const auto& lhs = maps[c.compose(g, f)];
      const auto rhs = co ? maps[g] * maps[f] : maps[f] * maps[g];
      if (lhs != rhs)
        throw FunctorialityError("functoriality fails at (" + c.morphism(g).label + ", " +
                                 c.morphism(f).label + ")");
    }
}

fpla::Subspace LimitResult::component(ObjectId a) const {
  fpla::Subspace out(space.p(), dims[a]);
  for (std::size_t i = 0; i < space.dim(); ++i) out.insert(block(space.basis_vector(i), a));
  return out;
}

fpla::Vector LimitResult::block(const fpla::Vector& x, ObjectId a) const {
  return {x.begin() + static_cast<std::ptrdiff_t>(offsets[a]),
          x.begin() + static_cast<std::ptrdiff_t>(offsets[a] + dims[a])};
}

LimitResult limit(const VectDiagram& d) {
  const auto& c = *d.index;
  LimitResult r;
  r.dims = d.dims;
  std::size_t total = 0;
  for (const auto n : d.dims) {
    r.offsets.push_back(total);
    total += n;
  }
  const fpla::PrimeField field(d.p);
  const bool co = d.variance == Variance::covariant;
  // Each constraint row says: coordinate k of x_target − D(f) x_source = 0.
  fpla::Subspace constraints(d.p, total);
  fpla::Vector row(total);
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f)) continue;
    const ObjectId lhs = co ? c.dst(f) : c.src(f);
    const ObjectId rhs = co ? c.src(f) : c.dst(f);
    const auto& m = d.maps[f];
    for (std::size_t k = 0; k < m.rows(); ++k) {
      std::fill(row.begin(), row.end(), 0);
      row[r.offsets[lhs] + k] = 1;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        auto& e = row[r.offsets[rhs] + j];
        e = field.sub(e, m(k, j));
      }
      constraints.insert(row);
      if (constraints.dim() == total) break;
    }
  }
  r.space = constraints.annihilator();
  return r;
}

LimitResult limit_contravariant(const VectDiagram& d) {
  if (d.variance != Variance::contravariant)
    throw InvalidArgument("limit_contravariant on a covariant diagram");
  return limit(d);
}

VectDiagram pull_back(const VectDiagram& d, const Functor& f) {
  if (f.target != d.index && f.target->digest() != d.index->digest())
    throw InvalidArgument("functor does not land in the diagram's index");
  VectDiagram out{f.source, d.p, d.variance, {}, {}};
  for (const auto a : f.object_map) out.dims.push_back(d.dims[a]);
  for (const auto m : f.morphism_map) out.maps.push_back(d.maps[m]);
  return out;
}

FinalityComparison compare_along(const VectDiagram& d, const Functor& f) {
  const auto over_target = limit(d);
  const auto over_source = limit(pull_back(d, f));
  FinalityComparison cmp;
  cmp.dim_over_target = over_target.dim();
  cmp.dim_over_source = over_source.dim();
  cmp.same_subspace = f.is_identity_on_objects() && over_target.space == over_source.space;
  return cmp;
}

}  // namespace fusionlim::fincat
