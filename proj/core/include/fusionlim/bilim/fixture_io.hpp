#pragma once

#include <string>
#include <string_view>

#include "fusionlim/bilim/two_category.hpp"

namespace fusionlim::bilim {

/// Reads a diagram fixture:
///
///   {"name": ...,
///    "index": {"objects": [...], "one_cells": [{"name", "src", "dst"}],
///              "identities": {object: cell}, "compose": [[g, f, g∘f]],
///              "two_cells": [{"name", "src", "dst"}]},
///    "values": {object: {"objects", "morphisms", "identities", "compose"}},
///    "functors": {cell: {"objects": {x: y}, "morphisms": {m: n}}},
///    "transformations": {two_cell: {x: m}}}
///
/// Composites with an identity are implied. Functors of identity 1-cells and
/// components of identity 2-cells may be omitted. Throws InvalidArgument on
/// malformed input and FunctorialityError when the result is not a strict
/// 2-functor.
CatValued2Functor parse_diagram(std::string_view json_text);
CatValued2Functor load_diagram_file(const std::string& path);

/// Serializes in the format read by parse_diagram.
std::string diagram_to_json(const CatValued2Functor& d);

}  // namespace fusionlim::bilim
