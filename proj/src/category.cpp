#include "cellstrat/category.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace cellstrat {

FiniteAcyclicCategory::FiniteAcyclicCategory(CategorySpec spec) {
  std::sort(spec.objects.begin(), spec.objects.end());
  for (auto& id : spec.objects) {
    if (!object_index_.emplace(id, objects_.size()).second) {
      issues_.push_back({"duplicate-id", id, "object listed more than once"});
      continue;
    }
    objects_.push_back(std::move(id));
  }

  std::sort(spec.morphisms.begin(), spec.morphisms.end(),
            [](const MorphismSpec& a, const MorphismSpec& b) { return a.id < b.id; });
  for (auto& m : spec.morphisms) {
    auto s = object_index(m.src);
    auto t = object_index(m.dst);
    if (!s || !t) {
      issues_.push_back({"unknown-object", m.id, "endpoint '" + (s ? m.dst : m.src) + "' is not an object"});
      continue;
    }
    if (object_index_.count(m.id)) {
      issues_.push_back({"duplicate-id", m.id, "morphism id equals an object id"});
      continue;
    }
    if (!morphism_index_.emplace(m.id, morphisms_.size()).second) {
      issues_.push_back({"duplicate-id", m.id, "morphism listed more than once"});
      continue;
    }
    morphisms_.push_back({std::move(m.id), *s, *t});
  }

  outgoing_.assign(objects_.size(), {});
  incoming_.assign(objects_.size(), {});
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    outgoing_[morphisms_[i].source].push_back(i);
    incoming_[morphisms_[i].target].push_back(i);
  }

  for (const auto& c : spec.compositions) {
    const std::string label = c.g + "∘" + c.f;
    auto g = morphism_index(c.g);
    auto f = morphism_index(c.f);
    auto gf = morphism_index(c.gf);
    if (!g || !f || !gf) {
      issues_.push_back({"unknown-morphism", label, "composition names an unknown morphism"});
      continue;
    }
    if (morphisms_[*g].source != morphisms_[*f].target) {
      issues_.push_back({"ill-typed-composition", label, "source of g differs from target of f"});
      continue;
    }
    if (morphisms_[*gf].source != morphisms_[*f].source || morphisms_[*gf].target != morphisms_[*g].target) {
      issues_.push_back({"ill-typed-composition", label, "'" + c.gf + "' does not go from src(f) to tgt(g)"});
      continue;
    }
    auto [it, inserted] = composition_index_.emplace(key(*g, *f), *gf);
    if (!inserted) {
      if (it->second != *gf) {
        issues_.push_back({"conflicting-composition", label, "listed with two different results"});
      }
      continue;
    }
    compositions_.push_back({*g, *f, *gf});
  }
  std::sort(compositions_.begin(), compositions_.end(), [](const Composition& a, const Composition& b) {
    return std::tie(a.g, a.f) < std::tie(b.g, b.f);
  });
}

std::optional<std::size_t> FiniteAcyclicCategory::object_index(std::string_view id) const {
  auto it = object_index_.find(id);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FiniteAcyclicCategory::morphism_index(std::string_view id) const {
  auto it = morphism_index_.find(id);
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> FiniteAcyclicCategory::hom(std::size_t x, std::size_t y) const {
  std::vector<std::size_t> out;
  for (std::size_t m : outgoing_.at(x)) {
    if (morphisms_[m].target == y) out.push_back(m);
  }
  return out;
}

std::optional<std::size_t> FiniteAcyclicCategory::compose(std::size_t g, std::size_t f) const {
  auto it = composition_index_.find(key(g, f));
  if (it == composition_index_.end()) return std::nullopt;
  return it->second;
}

CategorySpec FiniteAcyclicCategory::spec() const {
  CategorySpec out;
  out.objects = objects_;
  for (const auto& m : morphisms_) out.morphisms.push_back({m.id, objects_[m.source], objects_[m.target]});
  for (const auto& c : compositions_) {
    out.compositions.push_back({morphisms_[c.g].id, morphisms_[c.f].id, morphisms_[c.gf].id});
  }
  return out;
}

ValidationReport validate_category(const FiniteAcyclicCategory& c) {
  ValidationReport report = c.structural_issues();
  const auto& ms = c.morphisms();

  std::set<std::pair<std::size_t, std::size_t>> nonempty;
  for (const auto& m : ms) {
    if (m.source == m.target) {
      report.push_back({"acyclicity", c.object(m.source), "non-identity endomorphism '" + m.id + "'"});
    } else {
      nonempty.emplace(m.source, m.target);
    }
  }
  for (const auto& [x, y] : nonempty) {
    if (x < y && nonempty.count({y, x})) {
      report.push_back({"acyclicity", "(" + c.object(x) + ", " + c.object(y) + ")",
                        "Hom in both directions is nonempty"});
    }
  }

  for (std::size_t g = 0; g < ms.size(); ++g) {
    for (std::size_t f : c.incoming(ms[g].source)) {
      if (!c.compose(g, f)) {
        report.push_back({"missing-composition", ms[g].id + "∘" + ms[f].id, "composable pair has no listed composite"});
      }
    }
  }

  for (const auto& gf : c.compositions()) {
    for (std::size_t h : c.outgoing(ms[gf.g].target)) {
      auto hg = c.compose(h, gf.g);
      auto h_gf = c.compose(h, gf.gf);
      if (!hg || !h_gf) continue;  // already reported as missing
      auto hg_f = c.compose(*hg, gf.f);
      if (hg_f && *hg_f != *h_gf) {
        report.push_back({"associativity", ms[h].id + "∘" + ms[gf.g].id + "∘" + ms[gf.f].id,
                          "(hg)f = '" + ms[*hg_f].id + "' but h(gf) = '" + ms[*h_gf].id + "'"});
      }
    }
  }
  return report;
}

void require_valid(const FiniteAcyclicCategory& c) {
  auto report = validate_category(c);
  if (!report.empty()) throw ValidationError("category fails the acyclic category axioms", std::move(report));
}

Poset underlying_poset(const FiniteAcyclicCategory& c) {
  require_valid(c);
  std::vector<std::vector<std::size_t>> above(c.object_count());
  for (const auto& m : c.morphisms()) above[m.source].push_back(m.target);
  return Poset::from_indices(c.objects(), std::move(above));
}

FiniteAcyclicCategory poset_to_category(const Poset& p) {
  CategorySpec spec;
  spec.objects = p.elements();
  auto name = [&](std::size_t a, std::size_t b) { return p.element(a) + "<" + p.element(b); };
  for (const auto& [a, b] : p.strict_pairs()) spec.morphisms.push_back({name(a, b), p.element(a), p.element(b)});
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b : p.strictly_above(a)) {
      for (std::size_t c : p.strictly_above(b)) spec.compositions.push_back({name(b, c), name(a, b), name(a, c)});
    }
  }
  return FiniteAcyclicCategory(std::move(spec));
}

DeltaSet nondegenerate_nerve(const FiniteAcyclicCategory& c) {
  require_valid(c);
  const auto& ms = c.morphisms();

  std::vector<std::vector<std::string>> cells{c.objects()};
  std::vector<std::vector<std::vector<std::size_t>>> faces(1);

  auto join = [&](const std::vector<std::size_t>& chain) {
    std::string id;
    for (std::size_t k = 0; k < chain.size(); ++k) {
      if (k) id += ';';
      id += ms[chain[k]].id;
    }
    return id;
  };

  std::vector<std::vector<std::size_t>> previous;
  std::map<std::vector<std::size_t>, std::size_t> previous_index;
  std::vector<std::vector<std::size_t>> level;
  for (std::size_t m = 0; m < ms.size(); ++m) level.push_back({m});

  for (std::size_t n = 1; !level.empty(); ++n) {
    std::vector<std::string> ids;
    std::vector<std::vector<std::size_t>> level_faces;
    ids.reserve(level.size());
    level_faces.reserve(level.size());
    for (const auto& chain : level) {
      ids.push_back(join(chain));
      std::vector<std::size_t> f(n + 1);
      if (n == 1) {
        f[0] = ms[chain[0]].target;
        f[1] = ms[chain[0]].source;
      } else {
        auto lookup = [&](const std::vector<std::size_t>& sub) {
          auto it = previous_index.find(sub);
          if (it == previous_index.end()) throw InvariantViolation("nerve: face of a chain is not a chain");
          return it->second;
        };
        f[0] = lookup(std::vector<std::size_t>(chain.begin() + 1, chain.end()));
        f[n] = lookup(std::vector<std::size_t>(chain.begin(), chain.end() - 1));
        for (std::size_t i = 1; i < n; ++i) {
          auto composite = c.compose(chain[i], chain[i - 1]);
          if (!composite) throw InvariantViolation("nerve: composable pair without composite");
          std::vector<std::size_t> sub(chain.begin(), chain.begin() + (i - 1));
          sub.push_back(*composite);
          sub.insert(sub.end(), chain.begin() + (i + 1), chain.end());
          f[i] = lookup(sub);
        }
      }
      level_faces.push_back(std::move(f));
    }
    cells.push_back(std::move(ids));
    faces.push_back(std::move(level_faces));

    previous_index.clear();
    for (std::size_t i = 0; i < level.size(); ++i) previous_index.emplace(level[i], i);
    previous = std::move(level);
    level.clear();
    for (const auto& chain : previous) {
      for (std::size_t h : c.outgoing(ms[chain.back()].target)) {
        auto next = chain;
        next.push_back(h);
        level.push_back(std::move(next));
      }
    }
  }
  return DeltaSet::from_indices(std::move(cells), std::move(faces));
}

DeltaSet order_complex(const Poset& p) { return nondegenerate_nerve(poset_to_category(p)); }

}  // namespace cellstrat
