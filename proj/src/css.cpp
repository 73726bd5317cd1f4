#include "cellstrat/css.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "cellstrat/homology.hpp"

namespace cellstrat {

TotallyNormalCSS::TotallyNormalCSS(FiniteAcyclicCategory category, const std::map<std::string, int>& dims)
    : category_(std::move(category)), dims_(category_.object_count(), -1) {
  for (const auto& [id, d] : dims) {
    auto i = category_.object_index(id);
    if (!i) throw InputError("css: dimension given for unknown cell '" + id + "'");
    if (d < 0) throw InputError("css: negative dimension for cell '" + id + "'");
    dims_[*i] = d;
  }
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 0) throw InputError("css: cell '" + category_.object(i) + "' has no dimension");
  }
}

int TotallyNormalCSS::dim(std::string_view object) const {
  auto i = category_.object_index(object);
  if (!i) throw InputError("css: unknown cell '" + std::string(object) + "'");
  return dims_[*i];
}

std::map<std::string, int> TotallyNormalCSS::dim_map() const {
  std::map<std::string, int> out;
  for (std::size_t i = 0; i < dims_.size(); ++i) out.emplace(category_.object(i), dims_[i]);
  return out;
}

int TotallyNormalCSS::max_dimension() const noexcept {
  int top = -1;
  for (int d : dims_) top = std::max(top, d);
  return top;
}

BoundaryPoset boundary_poset(const TotallyNormalCSS& s, std::string_view cell) {
  const auto& c = s.category();
  auto lambda = c.object_index(cell);
  if (!lambda) throw InputError("boundary poset: unknown cell '" + std::string(cell) + "'");

  std::vector<std::string> elements;
  std::vector<Poset::Pair> relation;
  for (std::size_t b1 : c.incoming(*lambda)) {
    elements.push_back(c.morphism(b1).id);
    // (μ0, b0) <= (μ1, b1) whenever b0 = b1 ∘ c for some c: μ0 -> μ1.
    for (std::size_t f : c.incoming(c.morphism(b1).source)) {
      if (auto b0 = c.compose(b1, f)) relation.emplace_back(c.morphism(*b0).id, c.morphism(b1).id);
    }
  }

  BoundaryPoset out;
  out.cell = std::string(cell);
  out.poset = Poset(std::move(elements), relation);
  for (const auto& id : out.poset.elements()) {
    std::size_t m = *c.morphism_index(id);
    out.morphisms.push_back(m);
    out.dims.push_back(s.dim(c.morphism(m).source));
  }
  return out;
}

ValidationReport closed_cell_violations(const TotallyNormalCSS& s, std::size_t cell) {
  ValidationReport report;
  const int n = s.dim(cell);
  if (n == 0) return report;
  const std::string& name = s.category().object(cell);
  BoundaryPoset bp = boundary_poset(s, name);
  const Poset& p = bp.poset;

  for (std::size_t m : p.maximal_elements()) {
    if (bp.dims[m] != n - 1) {
      report.push_back({"purity", name,
                        "maximal boundary lift '" + p.element(m) + "' has dimension " + std::to_string(bp.dims[m])});
    }
  }

  for (std::size_t i = 0; i < p.size(); ++i) {
    if (bp.dims[i] != n - 2) continue;
    auto above = p.strictly_above(i);
    auto count = std::count_if(above.begin(), above.end(), [&](std::size_t j) { return bp.dims[j] == n - 1; });
    if (count != 2) {
      report.push_back({"diamond", name,
                        "'" + p.element(i) + "' lies below " + std::to_string(count) + " codimension-one lifts"});
    }
  }

  HomologyResult sphere;
  if (n == 1) {
    sphere.betti = {2};
  } else {
    sphere.betti.assign(static_cast<std::size_t>(n), 0);
    sphere.betti[0] = 1;
    sphere.betti[static_cast<std::size_t>(n) - 1] = 1;
  }
  HomologyResult h = homology(order_complex(p));
  if (!(h == sphere)) {
    std::string betti;
    for (std::size_t b : h.betti) betti += (betti.empty() ? "" : ",") + std::to_string(b);
    report.push_back({"sphericity", name,
                      "boundary order complex is not a homology " + std::to_string(n - 1) +
                          "-sphere (betti [" + betti + "])"});
  }
  return report;
}

ValidationReport validate_css(const TotallyNormalCSS& s, CssMode mode) {
  const auto& c = s.category();
  ValidationReport report = validate_category(c);
  if (!report.empty()) return report;

  for (const auto& m : c.morphisms()) {
    if (s.dim(m.source) >= s.dim(m.target)) {
      report.push_back({"dimension", m.id,
                        "lift from dimension " + std::to_string(s.dim(m.source)) + " into dimension " +
                            std::to_string(s.dim(m.target))});
    }
  }

  // b1 ∘ c = b0 must determine c.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> factorizations;
  for (const auto& comp : c.compositions()) factorizations[{comp.g, comp.gf}].push_back(comp.f);
  for (const auto& [key, factors] : factorizations) {
    if (factors.size() > 1) {
      std::string list;
      for (std::size_t f : factors) list += (list.empty() ? "" : ", ") + c.morphism(f).id;
      report.push_back({"unique-factorization", c.object(c.morphism(key.first).target),
                        "'" + c.morphism(key.second).id + "' = '" + c.morphism(key.first).id + "' ∘ c for c in {" +
                            list + "}"});
    }
  }

  for (std::size_t x = 0; x < c.object_count(); ++x) {
    try {
      (void)boundary_poset(s, c.object(x));
    } catch (const InputError& e) {
      report.push_back({"boundary-poset", c.object(x), e.what()});
    }
  }

  if (mode == CssMode::Closed && report.empty()) {
    for (std::size_t x = 0; x < c.object_count(); ++x) {
      auto more = closed_cell_violations(s, x);
      report.insert(report.end(), more.begin(), more.end());
    }
  }
  return report;
}

DeltaSet barycentric_subdivision(const TotallyNormalCSS& s) {
  auto report = validate_css(s, CssMode::General);
  if (!report.empty()) throw ValidationError("barycentric subdivision: stratification is not valid", std::move(report));
  return nondegenerate_nerve(s.category());
}

namespace {

std::string face_morphism_id(const std::string& cell, const std::vector<std::size_t>& u) {
  std::string id = cell + "[";
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (k) id += ",";
    id += std::to_string(u[k]);
  }
  return id + "]";
}

// Proper nonempty strictly increasing maps [m] -> [n], as index lists.
std::vector<std::vector<std::size_t>> proper_faces(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t full = (std::size_t{1} << (n + 1)) - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::vector<std::size_t> u;
    for (std::size_t i = 0; i <= n; ++i) {
      if (mask & (std::size_t{1} << i)) u.push_back(i);
    }
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace

TotallyNormalCSS css_of_deltaset(const DeltaSet& d) {
  auto report = validate_deltaset(d);
  if (!report.empty()) throw ValidationError("css_of_deltaset: Δ-set is not valid", std::move(report));

  CategorySpec spec;
  std::map<std::string, int> dims;
  for (std::size_t n = 0; n < d.levels(); ++n) {
    for (const auto& id : d.cells(n)) {
      spec.objects.push_back(id);
      dims.emplace(id, static_cast<int>(n));
    }
  }

  for (std::size_t n = 1; n < d.levels(); ++n) {
    const auto faces = proper_faces(n);
    for (std::size_t sigma = 0; sigma < d.size(n); ++sigma) {
      for (const auto& u : faces) {
        // Delete the vertices outside u, highest index first.
        std::size_t cell = sigma;
        std::size_t dim = n;
        for (std::size_t i = n + 1; i-- > 0;) {
          if (std::binary_search(u.begin(), u.end(), i)) continue;
          cell = d.face(dim, cell, i);
          --dim;
        }
        const std::string& tau = d.id(dim, cell);
        spec.morphisms.push_back({face_morphism_id(d.id(n, sigma), u), tau, d.id(n, sigma)});
        if (dim == 0) continue;
        for (const auto& v : proper_faces(dim)) {
          std::vector<std::size_t> uv;
          for (std::size_t k : v) uv.push_back(u[k]);
          spec.compositions.push_back(
              {face_morphism_id(d.id(n, sigma), u), face_morphism_id(tau, v), face_morphism_id(d.id(n, sigma), uv)});
        }
      }
    }
  }
  return TotallyNormalCSS(FiniteAcyclicCategory(std::move(spec)), dims);
}

TotallyNormalCSS css_of_regular_poset(const Poset& p, const std::map<std::string, int>& dims) {
  for (const auto& [a, b] : p.strict_pairs()) {
    auto da = dims.find(p.element(a));
    auto db = dims.find(p.element(b));
    if (da == dims.end() || db == dims.end()) throw InputError("css_of_regular_poset: missing dimension");
    if (da->second >= db->second) {
      throw InputError("css_of_regular_poset: '" + p.element(a) + "' < '" + p.element(b) +
                       "' but dimensions do not increase");
    }
  }
  return TotallyNormalCSS(poset_to_category(p), dims);
}

namespace {

TotallyNormalCSS make(std::vector<std::pair<std::string, int>> cells, std::vector<MorphismSpec> morphisms,
                      std::vector<CompositionSpec> compositions) {
  CategorySpec spec;
  std::map<std::string, int> dims;
  for (auto& [id, d] : cells) {
    spec.objects.push_back(id);
    dims.emplace(id, d);
  }
  spec.morphisms = std::move(morphisms);
  spec.compositions = std::move(compositions);
  return TotallyNormalCSS(FiniteAcyclicCategory(std::move(spec)), dims);
}

}  // namespace

TotallyNormalCSS fixture(std::string_view name) {
  if (name == "circle_min") {
    // S^1 = e^0 ∪ e^1 with the two endpoint lifts of ∂D^1 = {-1, 1}.
    return make({{"e0", 0}, {"e1", 1}}, {{"b_-1", "e0", "e1"}, {"b_1", "e0", "e1"}}, {});
  }
  if (name == "punctured_torus") {
    return make({{"e0xe1", 1}, {"e1xe0", 1}, {"e1xe1", 2}},
                {{"b01'", "e0xe1", "e1xe1"},
                 {"b01''", "e0xe1", "e1xe1"},
                 {"b10'", "e1xe0", "e1xe1"},
                 {"b10''", "e1xe0", "e1xe1"}},
                {});
  }
  if (name == "torus") {
    // Square [-1,1]^2: b10' bottom, b10'' top, b01' left, b01'' right;
    // p± / q± are the ends of the horizontal / vertical 1-cell, k(x)(y) the corners.
    return make({{"e0xe0", 0}, {"e0xe1", 1}, {"e1xe0", 1}, {"e1xe1", 2}},
                {{"p-", "e0xe0", "e1xe0"},
                 {"p+", "e0xe0", "e1xe0"},
                 {"q-", "e0xe0", "e0xe1"},
                 {"q+", "e0xe0", "e0xe1"},
                 {"b01'", "e0xe1", "e1xe1"},
                 {"b01''", "e0xe1", "e1xe1"},
                 {"b10'", "e1xe0", "e1xe1"},
                 {"b10''", "e1xe0", "e1xe1"},
                 {"k--", "e0xe0", "e1xe1"},
                 {"k-+", "e0xe0", "e1xe1"},
                 {"k+-", "e0xe0", "e1xe1"},
                 {"k++", "e0xe0", "e1xe1"}},
                {{"b10'", "p-", "k--"},
                 {"b10'", "p+", "k+-"},
                 {"b10''", "p-", "k-+"},
                 {"b10''", "p+", "k++"},
                 {"b01'", "q-", "k--"},
                 {"b01'", "q+", "k-+"},
                 {"b01''", "q-", "k+-"},
                 {"b01''", "q+", "k++"}});
  }
  if (name == "rp2") {
    // The boundary circle of D^2 wraps twice around e^1.
    return make({{"e0", 0}, {"e1", 1}, {"e2", 2}},
                {{"sigma-", "e0", "e1"},
                 {"sigma+", "e0", "e1"},
                 {"tau1", "e1", "e2"},
                 {"tau2", "e1", "e2"},
                 {"p1", "e0", "e2"},
                 {"p2", "e0", "e2"}},
                {{"tau1", "sigma-", "p1"},
                 {"tau1", "sigma+", "p2"},
                 {"tau2", "sigma-", "p2"},
                 {"tau2", "sigma+", "p1"}});
  }
  if (name == "interval_cell") {
    // Int D^2 ∪ {(1,0)}.
    return make({{"e0", 0}, {"en", 2}}, {{"b", "e0", "en"}}, {});
  }
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() { return {"circle_min", "interval_cell", "punctured_torus", "rp2", "torus"}; }

}  // namespace cellstrat
