#pragma once

#include <json.hpp>

#include "cellstrat/arrangement.hpp"
#include "cellstrat/css.hpp"
#include "cellstrat/delta_set.hpp"
#include "cellstrat/errors.hpp"
#include "cellstrat/graph.hpp"
#include "cellstrat/homology.hpp"

namespace cellstrat::io {

using nlohmann::json;

// Every reader throws InputError on malformed input.

/// {"objects":[{"id","dim"?}], "morphisms":[{"id","src","dst"}], "compose":[{"g","f","gf"}]}
CategorySpec category_from_json(const json& j);
json category_to_json(const FiniteAcyclicCategory& c);

/// Category JSON with a mandatory "dim" on every object.
TotallyNormalCSS css_from_json(const json& j);
json css_to_json(const TotallyNormalCSS& s);

/// {"cells":[[ids dim 0],...], "faces":{"<id>":[d_0 target, ...]}}
DeltaSet deltaset_from_json(const json& j);
json deltaset_to_json(const DeltaSet& d);

/// {"betti":[...], "torsion":[["2"], ...]}
json homology_to_json(const HomologyResult& h);
HomologyResult homology_from_json(const json& j);

/// [{"check","cell","detail"}, ...]
json report_to_json(const ValidationReport& r);

/// {"dim":n, "forms":[{"a":["p/q",...], "c":"p/q"}]}
Arrangement arrangement_from_json(const json& j);
json arrangement_to_json(const Arrangement& a);

/// {"order":ℓ, "elements":[{"sign","dim"}], "covers":[[lower, upper], ...]}
json face_poset_to_json(const FacePoset& fp);

/// {"vertices":[...], "edges":[{"id","ends":[v⁻, v⁺]}]}
Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g);

/// {"elements":[{"id","dim"}], "covers":[[lower, upper], ...]}
json graded_poset_to_json(const Poset& p, const std::vector<int>& dims);

/// Parses text, mapping parse failures to InputError.
json parse(const std::string& text);

}  // namespace cellstrat::io
