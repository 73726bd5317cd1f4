#include "cellstrat/io.hpp"

namespace cellstrat::io {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_of(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

const json& array_of(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  return a;
}

Rational rational_of(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError("rationals are written as strings \"p/q\"");
  const std::string text = j.get<std::string>();
  Rational value;
  if (text.empty() || value.set_str(text, 10) != 0) throw InputError("malformed rational '" + text + "'");
  if (value.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  value.canonicalize();
  return value;
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

CategorySpec category_from_json(const json& j) {
  CategorySpec spec;
  for (const auto& o : array_of(j, "objects")) spec.objects.push_back(string_of(field(o, "id"), "object id"));
  if (j.contains("morphisms")) {
    for (const auto& m : array_of(j, "morphisms")) {
      spec.morphisms.push_back({string_of(field(m, "id"), "morphism id"), string_of(field(m, "src"), "src"),
                                string_of(field(m, "dst"), "dst")});
    }
  }
  if (j.contains("compose")) {
    for (const auto& c : array_of(j, "compose")) {
      spec.compositions.push_back(
          {string_of(field(c, "g"), "g"), string_of(field(c, "f"), "f"), string_of(field(c, "gf"), "gf")});
    }
  }
  return spec;
}

namespace {

json category_json(const FiniteAcyclicCategory& c, const std::vector<int>* dims) {
  json objects = json::array();
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    json o = {{"id", c.object(i)}};
    if (dims) o["dim"] = (*dims)[i];
    objects.push_back(std::move(o));
  }
  json morphisms = json::array();
  for (const auto& m : c.morphisms()) {
    morphisms.push_back({{"id", m.id}, {"src", c.object(m.source)}, {"dst", c.object(m.target)}});
  }
  json compose = json::array();
  for (const auto& k : c.compositions()) {
    compose.push_back({{"g", c.morphism(k.g).id}, {"f", c.morphism(k.f).id}, {"gf", c.morphism(k.gf).id}});
  }
  return {{"objects", objects}, {"morphisms", morphisms}, {"compose", compose}};
}

}  // namespace

json category_to_json(const FiniteAcyclicCategory& c) { return category_json(c, nullptr); }

TotallyNormalCSS css_from_json(const json& j) {
  CategorySpec spec = category_from_json(j);
  std::map<std::string, int> dims;
  for (const auto& o : array_of(j, "objects")) {
    const json& d = field(o, "dim");
    if (!d.is_number_integer()) throw InputError("object dim must be an integer");
    dims[o.at("id").get<std::string>()] = d.get<int>();
  }
  return TotallyNormalCSS(FiniteAcyclicCategory(std::move(spec)), dims);
}

json css_to_json(const TotallyNormalCSS& s) { return category_json(s.category(), &s.dims()); }

DeltaSet deltaset_from_json(const json& j) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& level : array_of(j, "cells")) {
    if (!level.is_array()) throw InputError("each entry of 'cells' must be an array of ids");
    std::vector<std::string> ids;
    for (const auto& id : level) ids.push_back(string_of(id, "cell id"));
    cells.push_back(std::move(ids));
  }
  std::map<std::string, std::vector<std::string>> faces;
  if (j.contains("faces")) {
    const json& f = j.at("faces");
    if (!f.is_object()) throw InputError("'faces' must be an object");
    for (const auto& [cell, list] : f.items()) {
      if (!list.is_array()) throw InputError("face list of '" + cell + "' must be an array");
      std::vector<std::string> targets;
      for (const auto& t : list) targets.push_back(string_of(t, "face target"));
      faces.emplace(cell, std::move(targets));
    }
  }
  return DeltaSet(std::move(cells), faces);
}

json deltaset_to_json(const DeltaSet& d) {
  json cells = json::array();
  json faces = json::object();
  for (std::size_t n = 0; n < d.levels(); ++n) {
    cells.push_back(d.cells(n));
    if (n == 0) continue;
    for (std::size_t i = 0; i < d.size(n); ++i) {
      json list = json::array();
      for (std::size_t t : d.faces_of(n, i)) list.push_back(d.id(n - 1, t));
      faces[d.id(n, i)] = std::move(list);
    }
  }
  return {{"cells", cells}, {"faces", faces}};
}

json homology_to_json(const HomologyResult& h) {
  json torsion = json::array();
  for (const auto& level : h.torsion) {
    json t = json::array();
    for (const auto& d : level) t.push_back(d.get_str());
    torsion.push_back(std::move(t));
  }
  return {{"betti", h.betti}, {"torsion", torsion}};
}

HomologyResult homology_from_json(const json& j) {
  HomologyResult h;
  for (const auto& b : array_of(j, "betti")) h.betti.push_back(b.get<std::size_t>());
  for (const auto& level : array_of(j, "torsion")) {
    std::vector<BigInt> t;
    for (const auto& d : level) t.emplace_back(string_of(d, "torsion coefficient"));
    h.torsion.push_back(std::move(t));
  }
  return h;
}

json report_to_json(const ValidationReport& r) {
  json out = json::array();
  for (const auto& v : r) out.push_back({{"check", v.check}, {"cell", v.cell}, {"detail", v.detail}});
  return out;
}

Arrangement arrangement_from_json(const json& j) {
  const json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<long>() < 0) throw InputError("'dim' must be a non-negative integer");
  const auto n = dim.get<std::size_t>();
  std::vector<AffineForm> forms;
  for (const auto& f : array_of(j, "forms")) {
    AffineForm form;
    for (const auto& a : array_of(f, "a")) form.coefficients.push_back(rational_of(a));
    form.constant = f.contains("c") ? rational_of(f.at("c")) : Rational(0);
    forms.push_back(std::move(form));
  }
  return Arrangement(n, std::move(forms));
}

json arrangement_to_json(const Arrangement& a) {
  json forms = json::array();
  for (const auto& f : a.forms()) {
    json coeffs = json::array();
    for (const auto& c : f.coefficients) coeffs.push_back(c.get_str());
    forms.push_back({{"a", coeffs}, {"c", f.constant.get_str()}});
  }
  return {{"dim", a.dimension()}, {"forms", forms}};
}

json face_poset_to_json(const FacePoset& fp) {
  json elements = json::array();
  for (const auto& f : fp.faces) elements.push_back({{"sign", f.id()}, {"dim", f.dimension}});
  json covers = json::array();
  for (const auto& [a, b] : fp.poset.covers()) covers.push_back({fp.poset.element(a), fp.poset.element(b)});
  return {{"order", fp.order}, {"elements", elements}, {"covers", covers}};
}

Graph graph_from_json(const json& j) {
  std::vector<std::string> vertices;
  for (const auto& v : array_of(j, "vertices")) vertices.push_back(string_of(v, "vertex id"));
  std::vector<EdgeSpec> edges;
  if (j.contains("edges")) {
    for (const auto& e : array_of(j, "edges")) {
      const json& ends = field(e, "ends");
      if (!ends.is_array() || ends.size() != 2) throw InputError("edge 'ends' must list two vertices");
      edges.push_back({string_of(field(e, "id"), "edge id"), string_of(ends[0], "endpoint"), string_of(ends[1], "endpoint")});
    }
  }
  return Graph(std::move(vertices), std::move(edges));
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edge_specs()) edges.push_back({{"id", e.id}, {"ends", {e.tail, e.head}}});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

json graded_poset_to_json(const Poset& p, const std::vector<int>& dims) {
  json elements = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) elements.push_back({{"id", p.element(i)}, {"dim", dims.at(i)}});
  json covers = json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back({p.element(a), p.element(b)});
  return {{"elements", elements}, {"covers", covers}};
}

}  // namespace cellstrat::io
