#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cellstrat/errors.hpp"
#include "cellstrat/graph.hpp"

namespace cellstrat {

int ConfCell::dimension() const {
  return static_cast<int>(std::count_if(tokens.begin(), tokens.end(), [](const TokenSlot& s) { return s.on_edge; }));
}

std::string ConfCell::id(const Graph& g) const {
  std::string out;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    if (t) out += '|';
    out += std::to_string(t + 1) + '@';
    const auto& s = tokens[t];
    if (s.on_edge) {
      out += g.edge(s.index).id + ':' + std::to_string(s.position);
    } else {
      out += g.vertex(s.index);
    }
  }
  return out;
}

std::vector<std::size_t> ConfigurationModel::cell_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(tokens) + 1, 0);
  for (const auto& c : cells) ++counts[static_cast<std::size_t>(c.dimension())];
  return counts;
}

namespace {

// Number of tokens on each edge of `c`.
std::vector<std::size_t> edge_loads(const Graph& g, const ConfCell& c) {
  std::vector<std::size_t> load(g.edge_count(), 0);
  for (const auto& s : c.tokens) {
    if (s.on_edge) ++load[s.index];
  }
  return load;
}

std::string pin_label(const PinAssignment& pins) {
  std::string out;
  for (std::size_t t = 0; t < pins.size(); ++t) {
    if (pins[t] == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(t + 1) + (pins[t] < 0 ? '-' : '+');
  }
  return out;
}

std::string morphism_id(const std::string& target_id, const PinAssignment& pins) {
  return target_id + "<" + pin_label(pins);
}

// Every pin assignment allowed by the end rule: only the first token of an
// edge may go to v⁻ and only the last to v⁺. The all-stay assignment is
// excluded.
std::vector<PinAssignment> candidate_pins(const Graph& g, const ConfCell& upper) {
  const auto load = edge_loads(g, upper);
  std::vector<std::vector<int>> options(upper.tokens.size(), std::vector<int>{0});
  for (std::size_t t = 0; t < upper.tokens.size(); ++t) {
    const auto& s = upper.tokens[t];
    if (!s.on_edge) continue;
    if (s.position == 0) options[t].push_back(-1);
    if (s.position + 1 == load[s.index]) options[t].push_back(+1);
  }
  std::vector<PinAssignment> out;
  PinAssignment current(upper.tokens.size(), 0);
  auto walk = [&](auto&& self, std::size_t t) -> void {
    if (t == current.size()) {
      if (std::any_of(current.begin(), current.end(), [](int p) { return p != 0; })) out.push_back(current);
      return;
    }
    for (int p : options[t]) {
      current[t] = p;
      self(self, t + 1);
    }
    current[t] = 0;
  };
  walk(walk, 0);
  return out;
}

void check_ids(const Graph& g) {
  auto bad = [](const std::string& id) { return id.find_first_of("|@:;<,") != std::string::npos; };
  for (const auto& v : g.vertices()) {
    if (bad(v)) throw InputError("configuration model: vertex id '" + v + "' uses a reserved character");
  }
  for (const auto& e : g.edges()) {
    if (bad(e.id)) throw InputError("configuration model: edge id '" + e.id + "' uses a reserved character");
  }
}

}  // namespace

std::optional<ConfCell> apply_pins(const Graph& g, const ConfCell& upper, const PinAssignment& pins) {
  if (pins.size() != upper.tokens.size()) return std::nullopt;
  const auto load = edge_loads(g, upper);
  ConfCell lower = upper;
  std::set<std::size_t> occupied;
  for (std::size_t t = 0; t < pins.size(); ++t) {
    const auto& s = upper.tokens[t];
    if (pins[t] == 0) continue;
    if (!s.on_edge) return std::nullopt;
    if (pins[t] < 0 && s.position != 0) return std::nullopt;
    if (pins[t] > 0 && s.position + 1 != load[s.index]) return std::nullopt;
    const auto& e = g.edge(s.index);
    lower.tokens[t] = TokenSlot{false, pins[t] < 0 ? e.tail : e.head, 0};
  }
  for (const auto& s : lower.tokens) {
    if (!s.on_edge && !occupied.insert(s.index).second) return std::nullopt;  // collision
  }
  // Unpinned tokens keep their relative order on each edge.
  for (std::size_t t = 0; t < lower.tokens.size(); ++t) {
    auto& s = lower.tokens[t];
    if (!s.on_edge) continue;
    std::size_t rank = 0;
    for (std::size_t u = 0; u < lower.tokens.size(); ++u) {
      const auto& o = lower.tokens[u];
      if (o.on_edge && o.index == s.index && upper.tokens[u].position < upper.tokens[t].position) ++rank;
    }
    s.position = rank;
  }
  return lower;
}

ConfCell permute_tokens(const ConfCell& c, const std::vector<std::size_t>& permutation) {
  ConfCell out;
  out.tokens.resize(c.tokens.size());
  for (std::size_t t = 0; t < c.tokens.size(); ++t) out.tokens[permutation[t]] = c.tokens[t];
  return out;
}

bool is_closed_cell(const Graph& g, const ConfCell& c) {
  std::vector<int> per_edge(g.edge_count(), 0);
  for (const auto& t : c.tokens) {
    if (t.on_edge && ++per_edge[t.index] > 1) return false;
  }
  const auto candidates = candidate_pins(g, c);
  return std::all_of(candidates.begin(), candidates.end(),
                     [&](const PinAssignment& p) { return apply_pins(g, c, p).has_value(); });
}

ConfigurationModel conf_face_category(const Graph& g, int k) {
  if (k < 1) throw InputError("configuration model needs k >= 1");
  check_ids(g);
  const auto tokens = static_cast<std::size_t>(k);

  // Slot choices per token, then all token orders on each edge.
  std::vector<ConfCell> cells;
  std::vector<std::pair<bool, std::size_t>> place(tokens);
  std::vector<char> vertex_used(g.vertex_count(), 0);
  auto orders = [&]() {
    std::vector<std::vector<std::size_t>> on_edge(g.edge_count());
    for (std::size_t t = 0; t < tokens; ++t) {
      if (place[t].first) on_edge[place[t].second].push_back(t);
    }
    ConfCell cell;
    cell.tokens.resize(tokens);
    for (std::size_t t = 0; t < tokens; ++t) cell.tokens[t] = TokenSlot{place[t].first, place[t].second, 0};
    std::vector<std::size_t> busy;
    for (std::size_t e = 0; e < on_edge.size(); ++e) {
      if (!on_edge[e].empty()) busy.push_back(e);
    }
    auto permute = [&](auto&& self, std::size_t b) -> void {
      if (b == busy.size()) {
        cells.push_back(cell);
        return;
      }
      auto list = on_edge[busy[b]];
      std::sort(list.begin(), list.end());
      do {
        for (std::size_t p = 0; p < list.size(); ++p) cell.tokens[list[p]].position = p;
        self(self, b + 1);
      } while (std::next_permutation(list.begin(), list.end()));
    };
    permute(permute, 0);
  };
  auto assign = [&](auto&& self, std::size_t t) -> void {
    if (t == tokens) {
      orders();
      return;
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (vertex_used[v]) continue;
      vertex_used[v] = 1;
      place[t] = {false, v};
      self(self, t + 1);
      vertex_used[v] = 0;
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      place[t] = {true, e};
      self(self, t + 1);
    }
  };
  assign(assign, 0);

  std::vector<std::pair<std::string, ConfCell>> named;
  for (auto& c : cells) named.emplace_back(c.id(g), std::move(c));
  std::sort(named.begin(), named.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  ConfigurationModel model;
  model.graph = g;
  model.tokens = k;
  std::map<ConfCell, std::size_t> cell_index;
  CategorySpec spec;
  std::map<std::string, int> dims;
  for (auto& [id, c] : named) {
    cell_index.emplace(c, model.cells.size());
    spec.objects.push_back(id);
    dims.emplace(id, c.dimension());
    model.cells.push_back(std::move(c));
  }

  struct Arrow {
    std::size_t source;
    std::size_t target;
    PinAssignment pins;
  };
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::size_t>> into(model.cells.size());
  for (std::size_t u = 0; u < model.cells.size(); ++u) {
    for (auto& p : candidate_pins(g, model.cells[u])) {
      auto lower = apply_pins(g, model.cells[u], p);
      if (!lower) continue;
      into[u].push_back(arrows.size());
      arrows.push_back({cell_index.at(*lower), u, std::move(p)});
    }
  }
  std::map<std::string, std::size_t> arrow_by_id;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    std::string id = morphism_id(spec.objects[arrows[a].target], arrows[a].pins);
    arrow_by_id.emplace(id, a);
    spec.morphisms.push_back({std::move(id), spec.objects[arrows[a].source], spec.objects[arrows[a].target]});
  }
  // g: M -> U after f: L -> M pins the union of both token sets.
  for (const auto& outer : arrows) {
    for (std::size_t inner : into[outer.source]) {
      PinAssignment both = outer.pins;
      for (std::size_t t = 0; t < both.size(); ++t) {
        if (arrows[inner].pins[t] != 0) both[t] = arrows[inner].pins[t];
      }
      std::string gf = morphism_id(spec.objects[outer.target], both);
      if (!arrow_by_id.count(gf)) throw InvariantViolation("configuration model: composite pin set '" + gf + "' is not a morphism");
      spec.compositions.push_back({morphism_id(spec.objects[outer.target], outer.pins),
                                   morphism_id(spec.objects[outer.source], arrows[inner].pins), std::move(gf)});
    }
  }

  model.css = TotallyNormalCSS(FiniteAcyclicCategory(std::move(spec)), dims);
  const auto& cat = model.css.category();
  model.pins.resize(cat.morphism_count());
  for (const auto& [id, a] : arrow_by_id) model.pins[*cat.morphism_index(id)] = arrows[a].pins;
  return model;
}

DeltaSet unordered_quotient(const ConfigurationModel& model) {
  const DeltaSet sd = barycentric_subdivision(model.css);
  const auto& cat = model.css.category();
  const Graph& g = model.graph;
  const auto k = static_cast<std::size_t>(model.tokens);

  std::map<ConfCell, std::size_t> cell_index;
  for (std::size_t i = 0; i < model.cells.size(); ++i) cell_index.emplace(model.cells[i], i);

  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Action of each permutation on object and morphism ids.
  std::vector<std::vector<std::string>> object_image(perms.size());
  std::vector<std::map<std::string, std::string>> morphism_image(perms.size());
  for (std::size_t p = 0; p < perms.size(); ++p) {
    for (const auto& c : model.cells) object_image[p].push_back(permute_tokens(c, perms[p]).id(g));
    for (std::size_t m = 0; m < cat.morphism_count(); ++m) {
      const auto& mor = cat.morphism(m);
      PinAssignment moved(k, 0);
      for (std::size_t t = 0; t < k; ++t) moved[perms[p][t]] = model.pins[m][t];
      const ConfCell target = permute_tokens(model.cells[mor.target], perms[p]);
      morphism_image[p].emplace(mor.id, morphism_id(target.id(g), moved));
    }
  }

  auto image = [&](std::size_t p, std::size_t n, std::size_t i) -> std::string {
    if (n == 0) return object_image[p][i];
    const std::string& id = sd.id(n, i);
    std::string out;
    std::size_t start = 0;
    while (true) {
      std::size_t end = id.find(';', start);
      const std::string part = id.substr(start, end == std::string::npos ? std::string::npos : end - start);
      if (!out.empty()) out += ';';
      out += morphism_image[p].at(part);
      if (end == std::string::npos) break;
      start = end + 1;
    }
    return out;
  };

  // rep[n][i] = index (in sd level n) of the least id in the orbit of cell i.
  std::vector<std::vector<std::size_t>> rep(sd.levels());
  for (std::size_t n = 0; n < sd.levels(); ++n) {
    rep[n].assign(sd.size(n), DeltaSet::kMissing);
    for (std::size_t i = 0; i < sd.size(n); ++i) {
      if (rep[n][i] != DeltaSet::kMissing) continue;
      std::vector<std::size_t> orbit;
      for (std::size_t p = 0; p < perms.size(); ++p) {
        auto found = sd.find(image(p, n, i));
        if (!found || found->first != n) throw InvariantViolation("unordered quotient: image of a cell is missing");
        orbit.push_back(found->second);
      }
      std::vector<std::size_t> distinct = orbit;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      if (distinct.size() != perms.size()) {
        throw InvariantViolation("unordered quotient: token permutations do not act freely on '" + sd.id(n, i) + "'");
      }
      std::size_t least = *std::min_element(distinct.begin(), distinct.end(),
                                            [&](std::size_t a, std::size_t b) { return sd.id(n, a) < sd.id(n, b); });
      for (std::size_t j : distinct) rep[n][j] = least;
    }
  }

  std::vector<std::vector<std::string>> cells(sd.levels());
  std::vector<std::vector<std::vector<std::size_t>>> faces(sd.levels());
  std::vector<std::map<std::size_t, std::size_t>> position(sd.levels());
  for (std::size_t n = 0; n < sd.levels(); ++n) {
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < sd.size(n); ++i) {
      if (rep[n][i] == i) reps.push_back(i);
    }
    std::sort(reps.begin(), reps.end(), [&](std::size_t a, std::size_t b) { return sd.id(n, a) < sd.id(n, b); });
    for (std::size_t r : reps) {
      position[n].emplace(r, cells[n].size());
      cells[n].push_back(sd.id(n, r));
    }
    if (n == 0) continue;
    for (std::size_t r : reps) {
      std::vector<std::size_t> f;
      for (std::size_t j = 0; j <= n; ++j) f.push_back(position[n - 1].at(rep[n - 1][sd.face(n, r, j)]));
      faces[n].push_back(std::move(f));
    }
  }
  return DeltaSet::from_indices(std::move(cells), std::move(faces));
}

// -- Abrams ------------------------------------------------------------------

AbramsComplex abrams_complex(const Graph& g, int k, bool ordered) {
  if (k < 1) throw InputError("Abrams complex needs k >= 1");
  const std::size_t nv = g.vertex_count();
  const std::size_t ncells = nv + g.edge_count();
  auto is_edge = [&](std::size_t c) { return c >= nv; };
  auto cell_id = [&](std::size_t c) -> const std::string& { return is_edge(c) ? g.edge(c - nv).id : g.vertex(c); };
  auto closure = [&](std::size_t c) {
    std::vector<std::size_t> out{c};
    if (is_edge(c)) {
      out.push_back(g.edge(c - nv).tail);
      out.push_back(g.edge(c - nv).head);
    }
    return out;
  };
  auto disjoint = [&](std::size_t a, std::size_t b) {
    for (std::size_t x : closure(a)) {
      for (std::size_t y : closure(b)) {
        if (x == y) return false;
      }
    }
    return true;
  };
  auto name = [&](std::vector<std::size_t> tuple) {
    if (!ordered) {
      std::sort(tuple.begin(), tuple.end(), [&](std::size_t a, std::size_t b) { return cell_id(a) < cell_id(b); });
    }
    std::string out = ordered ? "(" : "{";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) out += '|';
      out += cell_id(tuple[i]);
    }
    return out + (ordered ? ")" : "}");
  };

  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> current;
  auto choose = [&](auto&& self, std::size_t from) -> void {
    if (current.size() == static_cast<std::size_t>(k)) {
      tuples.push_back(current);
      return;
    }
    for (std::size_t c = ordered ? 0 : from; c < ncells; ++c) {
      if (!std::all_of(current.begin(), current.end(), [&](std::size_t o) { return o != c && disjoint(o, c); })) continue;
      current.push_back(c);
      self(self, c + 1);
      current.pop_back();
    }
  };
  choose(choose, 0);

  std::vector<std::pair<std::string, std::vector<std::size_t>>> named;
  for (auto& t : tuples) named.emplace_back(name(t), std::move(t));
  std::sort(named.begin(), named.end());

  std::map<std::string, std::size_t> index;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < named.size(); ++i) {
    index.emplace(named[i].first, i);
    ids.push_back(named[i].first);
  }

  AbramsComplex out;
  std::vector<std::vector<std::size_t>> above(named.size());
  for (std::size_t i = 0; i < named.size(); ++i) {
    const auto& tuple = named[i].second;
    out.dims.push_back(static_cast<int>(std::count_if(tuple.begin(), tuple.end(), is_edge)));
    // Every proper face: each edge component stays or drops to an endpoint.
    std::vector<std::vector<std::size_t>> options;
    for (std::size_t c : tuple) {
      std::vector<std::size_t> opt{c};
      if (is_edge(c)) {
        opt.push_back(g.edge(c - nv).tail);
        if (!g.edge(c - nv).is_loop()) opt.push_back(g.edge(c - nv).head);
      }
      options.push_back(std::move(opt));
    }
    std::vector<std::size_t> face(tuple.size());
    auto walk = [&](auto&& self, std::size_t pos) -> void {
      if (pos == tuple.size()) {
        if (face == tuple) return;
        above[index.at(name(face))].push_back(i);
        return;
      }
      for (std::size_t c : options[pos]) {
        face[pos] = c;
        self(self, pos + 1);
      }
    };
    walk(walk, 0);
  }
  out.poset = Poset::from_indices(std::move(ids), std::move(above));
  return out;
}

}  // namespace cellstrat
