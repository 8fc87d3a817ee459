#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fusionlim/grp/perm_group.hpp"

namespace fusionlim::grp {

/// Names accepted by named_group().
std::vector<std::string> builtin_group_names();

/// One of C1, C2, C3, C4, V4, S3, D8, Q8, A4, S4. Throws InvalidArgument for
/// an unknown name.
GroupPtr named_group(std::string_view name);

/// Parses a group definition:
///   { "name": "S3", "degree": 3, "generators": [[1,0,2],[1,2,0]] }
/// with 0-based image arrays. Throws InvalidArgument on malformed input.
GroupPtr parse_group_definition(std::string_view json_text);
GroupPtr load_group_file(const std::string& path);

/// A builtin name, or otherwise a path to a definition file.
GroupPtr resolve_group(const std::string& spec);

}  // namespace fusionlim::grp
