#include "fusionlim/bilim/fixture_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "fusionlim/error.hpp"
#include "json.hpp"

namespace fusionlim::bilim {

using nlohmann::json;

namespace {

template <class Id>
Id lookup(const std::map<std::string, Id>& names, const std::string& key, const char* what) {
  const auto it = names.find(key);
  if (it == names.end()) throw InvalidArgument(std::string("diagram: unknown ") + what + " '" + key + "'");
  return it->second;
}

struct ParsedCategory {
  FinCatPtr category;
  std::map<std::string, ObjectId> objects;
  std::map<std::string, MorphismId> morphisms;
};

ParsedCategory parse_category(const json& j, const char* cells_key) {
  ParsedCategory out;
  std::vector<std::string> objects;
  for (const auto& o : j.at("objects")) {
    const auto name = o.get<std::string>();
    if (!out.objects.emplace(name, static_cast<ObjectId>(objects.size())).second)
      throw InvalidArgument("diagram: duplicate object '" + name + "'");
    objects.push_back(name);
  }
  std::vector<fincat::Morphism> morphisms;
  for (const auto& m : j.at(cells_key)) {
    const auto name = m.at("name").get<std::string>();
    if (!out.morphisms.emplace(name, static_cast<MorphismId>(morphisms.size())).second)
      throw InvalidArgument("diagram: duplicate morphism '" + name + "'");
    morphisms.push_back({lookup(out.objects, m.at("src").get<std::string>(), "object"),
                         lookup(out.objects, m.at("dst").get<std::string>(), "object"), name});
  }
  std::vector<MorphismId> ids(objects.size(), fincat::kNoMorphism);
  for (const auto& [obj, cell] : j.at("identities").items())
    ids[lookup(out.objects, obj, "object")] = lookup(out.morphisms, cell.get<std::string>(), "morphism");
  for (std::size_t a = 0; a < ids.size(); ++a)
    if (ids[a] == fincat::kNoMorphism)
      throw InvalidArgument("diagram: object '" + objects[a] + "' has no identity");
  std::map<std::pair<MorphismId, MorphismId>, MorphismId> table;
  if (j.contains("compose"))
    for (const auto& row : j.at("compose")) {
      if (!row.is_array() || row.size() != 3)
        throw InvalidArgument("diagram: compose entries are [g, f, g∘f]");
      table[{lookup(out.morphisms, row[0].get<std::string>(), "morphism"),
             lookup(out.morphisms, row[1].get<std::string>(), "morphism")}] =
          lookup(out.morphisms, row[2].get<std::string>(), "morphism");
    }
  std::vector<bool> is_id(morphisms.size(), false);
  for (const auto i : ids) is_id[i] = true;
  const auto names = morphisms;
  out.category = std::make_shared<const FinCat>(FinCat::build(
      std::move(objects), std::move(morphisms), ids, [&](MorphismId g, MorphismId f) {
        if (is_id[g]) return f;
        if (is_id[f]) return g;
        const auto it = table.find({g, f});
        if (it == table.end())
          throw InvalidArgument("diagram: missing composite of '" + names[g].label + "' after '" +
                                names[f].label + "'");
        return it->second;
      }));
  return out;
}

json category_to_json(const FinCat& c, const char* cells_key) {
  json j;
  j["objects"] = json::array();
  for (ObjectId a = 0; a < c.object_count(); ++a) j["objects"].push_back(c.object_label(a));
  j[cells_key] = json::array();
  for (MorphismId f = 0; f < c.morphism_count(); ++f)
    j[cells_key].push_back({{"name", c.morphism(f).label},
                            {"src", c.object_label(c.src(f))},
                            {"dst", c.object_label(c.dst(f))}});
  j["identities"] = json::object();
  for (ObjectId a = 0; a < c.object_count(); ++a)
    j["identities"][c.object_label(a)] = c.morphism(c.identity(a)).label;
  j["compose"] = json::array();
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    if (c.is_identity(f)) continue;
    for (const auto g : c.out(c.dst(f)))
      if (!c.is_identity(g))
        j["compose"].push_back({c.morphism(g).label, c.morphism(f).label,
                                c.morphism(c.compose(g, f)).label});
  }
  return j;
}

}  // namespace

CatValued2Functor parse_diagram(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("diagram: ") + e.what());
  }
  try {
    CatValued2Functor d;
    d.name = j.value("name", std::string("diagram"));
    const auto& ji = j.at("index");
    auto index = parse_category(ji, "one_cells");
    std::vector<TwoCell> cells;
    std::map<std::string, std::pair<MorphismId, MorphismId>> cell_names;
    if (ji.contains("two_cells"))
      for (const auto& c : ji.at("two_cells")) {
        const auto name = c.at("name").get<std::string>();
        const auto src = lookup(index.morphisms, c.at("src").get<std::string>(), "1-cell");
        const auto dst = lookup(index.morphisms, c.at("dst").get<std::string>(), "1-cell");
        cell_names.emplace(name, std::pair{src, dst});
        cells.push_back({src, dst, name});
      }
    d.index = std::make_shared<const TwoCat>(TwoCat::build(*index.category, std::move(cells)));
    const auto& one = d.index->one_cells();

    std::vector<ParsedCategory> values;
    for (ObjectId a = 0; a < one.object_count(); ++a) {
      const auto& name = one.object_label(a);
      if (!j.at("values").contains(name))
        throw InvalidArgument("diagram: no value for index object '" + name + "'");
      values.push_back(parse_category(j.at("values").at(name), "morphisms"));
      d.values.push_back(values.back().category);
    }

    const json functors = j.value("functors", json::object());
    for (MorphismId f = 0; f < one.morphism_count(); ++f) {
      const auto& label = one.morphism(f).label;
      const auto& src = values[one.src(f)];
      const auto& dst = values[one.dst(f)];
      if (!functors.contains(label)) {
        if (!one.is_identity(f)) throw InvalidArgument("diagram: no functor for 1-cell '" + label + "'");
        d.on_one_cells.push_back(fincat::identity_functor(src.category));
        continue;
      }
      const auto& jf = functors.at(label);
      Functor F{src.category, dst.category,
                std::vector<ObjectId>(src.category->object_count(), 0),
                std::vector<MorphismId>(src.category->morphism_count(), 0)};
      for (const auto& [x, y] : src.objects)
        F.object_map[y] = lookup(dst.objects, jf.at("objects").at(x).get<std::string>(), "object");
      for (const auto& [x, y] : src.morphisms)
        F.morphism_map[y] =
            lookup(dst.morphisms, jf.at("morphisms").at(x).get<std::string>(), "morphism");
      d.on_one_cells.push_back(std::move(F));
    }

    const json transformations = j.value("transformations", json::object());
    for (TwoCellId a = 0; a < d.index->two_cell_count(); ++a) {
      const auto& cell = d.index->two_cell(a);
      const auto& src = values[one.src(cell.src)];
      const auto& dst = values[one.dst(cell.src)];
      NatTrans t;
      t.components.resize(src.category->object_count());
      if (d.index->is_identity2(a)) {
        for (ObjectId x = 0; x < t.components.size(); ++x)
          t.components[x] = dst.category->identity(d.on_one_cells[cell.src].object_map[x]);
      } else {
        if (!transformations.contains(cell.label))
          throw InvalidArgument("diagram: no components for 2-cell '" + cell.label + "'");
        for (const auto& [x, y] : src.objects)
          t.components[y] = lookup(
              dst.morphisms, transformations.at(cell.label).at(x).get<std::string>(), "morphism");
      }
      d.on_two_cells.push_back(std::move(t));
    }
    d.validate();
    return d;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("diagram: ") + e.what());
  }
}

CatValued2Functor load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open diagram file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

std::string diagram_to_json(const CatValued2Functor& d) {
  const auto& one = d.index->one_cells();
  json j;
  j["name"] = d.name;
  j["index"] = category_to_json(one, "one_cells");
  j["index"]["two_cells"] = json::array();
  for (TwoCellId a = 0; a < d.index->two_cell_count(); ++a) {
    const auto& c = d.index->two_cell(a);
    if (!d.index->is_identity2(a))
      j["index"]["two_cells"].push_back({{"name", c.label},
                                         {"src", one.morphism(c.src).label},
                                         {"dst", one.morphism(c.dst).label}});
  }
  j["values"] = json::object();
  for (ObjectId a = 0; a < one.object_count(); ++a)
    j["values"][one.object_label(a)] = category_to_json(*d.values[a], "morphisms");
  j["functors"] = json::object();
  for (MorphismId f = 0; f < one.morphism_count(); ++f) {
    const auto& F = d.on_one_cells[f];
    json jf;
    jf["objects"] = json::object();
    jf["morphisms"] = json::object();
    for (ObjectId x = 0; x < F.source->object_count(); ++x)
      jf["objects"][F.source->object_label(x)] = F.target->object_label(F.object_map[x]);
    for (MorphismId m = 0; m < F.source->morphism_count(); ++m)
      jf["morphisms"][F.source->morphism(m).label] = F.target->morphism(F.morphism_map[m]).label;
    j["functors"][one.morphism(f).label] = std::move(jf);
  }
  j["transformations"] = json::object();
  for (TwoCellId a = 0; a < d.index->two_cell_count(); ++a) {
    if (d.index->is_identity2(a)) continue;
    const auto& c = d.index->two_cell(a);
    const auto& src = *d.values[one.src(c.src)];
    const auto& dst = *d.values[one.dst(c.src)];
    json jt = json::object();
    for (ObjectId x = 0; x < src.object_count(); ++x)
      jt[src.object_label(x)] = dst.morphism(d.on_two_cells[a].components[x]).label;
    j["transformations"][c.label] = std::move(jt);
  }
  return j.dump(2) + "\n";
}

}  // namespace fusionlim::bilim
