#include "fusionlim/grp/catalog.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "fusionlim/error.hpp"

namespace fusionlim::grp {

namespace {

/// Left multiplication on the quaternion units ±1, ±i, ±j, ±k, indexed as
/// 4·sign + unit with unit ∈ {1, i, j, k}.
Perm quaternion_left(std::size_t q) {
  // kUnit[a][b] = (sign, unit) of unit_a · unit_b.
  static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> kUnit{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  std::vector<Point> images(8);
  for (std::size_t x = 0; x < 8; ++x) {
    const auto [s, u] = kUnit[q][x % 4];
    const std::size_t sign = (x / 4 + static_cast<std::size_t>(s)) % 2;
    images[x] = static_cast<Point>(4 * sign + static_cast<std::size_t>(u));
  }
  return Perm(std::move(images));
}

}  // namespace

std::vector<std::string> builtin_group_names() {
  return {"C1", "C2", "C3", "C4", "V4", "S3", "D8", "Q8", "A4", "S4"};
}

GroupPtr named_group(std::string_view name) {
  const std::string n(name);
  if (n == "C1") return PermGroup::closure(1, {}, n);
  if (n == "C2") return PermGroup::closure(2, {Perm::from_cycles(2, {{0, 1}})}, n);
  if (n == "C3") return PermGroup::closure(3, {Perm::from_cycles(3, {{0, 1, 2}})}, n);
  if (n == "C4") return PermGroup::closure(4, {Perm::from_cycles(4, {{0, 1, 2, 3}})}, n);
  if (n == "V4")
    return PermGroup::closure(
        4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})}, n);
  if (n == "S3")
    return PermGroup::closure(3, {Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})},
                              n);
  if (n == "D8")
    return PermGroup::closure(
        4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{1, 3}})}, n);
  if (n == "Q8") return PermGroup::closure(8, {quaternion_left(1), quaternion_left(2)}, n);
  if (n == "A4")
    return PermGroup::closure(
        4, {Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{0, 1}, {2, 3}})}, n);
  if (n == "S4")
    return PermGroup::closure(
        4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 1}})}, n);
  throw InvalidArgument("unknown builtin group '" + n + "'");
}

GroupPtr parse_group_definition(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed group file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("generators"))
    throw InvalidArgument("group file needs 'degree' and 'generators'");
  try {
    const auto degree = doc.at("degree").get<std::size_t>();
    std::vector<Perm> gens;
    for (const auto& g : doc.at("generators"))
      gens.emplace_back(g.get<std::vector<Point>>());
    const std::string name = doc.value("name", std::string{});
    return PermGroup::closure(degree, std::move(gens), name);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed group file: ") + e.what());
  }
}

GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open group file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_group_definition(text.str());
}

GroupPtr resolve_group(const std::string& spec) {
  for (const auto& n : builtin_group_names())
    if (n == spec) return named_group(spec);
  if (std::filesystem::exists(spec)) return load_group_file(spec);
  throw InvalidArgument("'" + spec + "' is neither a builtin group nor a readable file");
}

}  // namespace fusionlim::grp
