#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cellstrat/arrangement.hpp"
#include "cellstrat/css.hpp"
#include "cellstrat/graph.hpp"
#include "cellstrat/homology.hpp"
#include "cellstrat/io.hpp"

namespace cellstrat::cli {
namespace {

using nlohmann::json;

json load(const std::string& path, std::istream& input) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << input.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    buffer << file.rdbuf();
  }
  return io::parse(buffer.str());
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::string homology_text(const HomologyResult& h) {
  std::string out = "betti: " + join(h.betti) + "\ntorsion:";
  for (const auto& level : h.torsion) {
    std::string t;
    for (const auto& d : level) t += (t.empty() ? "" : ",") + d.get_str();
    out += " " + (t.empty() ? std::string("-") : t);
  }
  out += "\n";
  for (std::size_t n = 0; n < h.betti.size(); ++n) {
    std::string group;
    if (h.betti[n] == 1) group = "Z";
    if (h.betti[n] > 1) group = "Z^" + std::to_string(h.betti[n]);
    for (const auto& d : h.torsion[n]) group += (group.empty() ? "" : " + ") + ("Z/" + d.get_str());
    out += "H_" + std::to_string(n) + " = " + (group.empty() ? "0" : group) + "\n";
  }
  return out;
}

std::string deltaset_text(const DeltaSet& d) {
  std::string out = "cells: " + join(d.cell_counts()) + "\n";
  for (std::size_t n = 0; n < d.levels(); ++n) {
    for (std::size_t i = 0; i < d.size(n); ++i) {
      out += "  [" + std::to_string(n) + "] " + d.id(n, i);
      if (n > 0) {
        out += " :";
        for (std::size_t t : d.faces_of(n, i)) out += " " + d.id(n - 1, t);
      }
      out += "\n";
    }
  }
  return out;
}

std::string report_text(const ValidationReport& r) {
  if (r.empty()) return "valid\n";
  std::string out = "invalid (" + std::to_string(r.size()) + " violations)\n";
  for (const auto& v : r) out += "  " + v.check + " " + v.cell + ": " + v.detail + "\n";
  return out;
}

CommandResult homology_result(const DeltaSet& d, json payload, std::string text) {
  const HomologyResult h = homology(d);
  payload["homology"] = io::homology_to_json(h);
  return {Status::Ok, std::move(payload), std::move(text) + homology_text(h)};
}

}  // namespace

CommandResult execute(const std::vector<std::string>& args, std::istream& input) {
  CLI::App app{"Cellular stratified spaces: face categories, subdivisions and homology", "cellstrat"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "Write output to a file");

  bool closed = false;
  std::string css_path;
  std::string deltaset_path;
  std::string arrangement_path;
  std::string graph_path;
  std::string fixture_name;
  int order = 1;
  int k = 2;
  int subdivide = 0;
  bool poset_only = false;
  bool unordered = false;

  auto* validate = app.add_subcommand("validate", "Validate a cellular stratification");
  validate->add_option("css", css_path, "CSS JSON file ('-' for stdin)")->required();
  validate->add_flag("--closed", closed, "Also run the closed-cell sphere checks");

  auto* sd = app.add_subcommand("sd", "Barycentric subdivision as a Δ-set");
  sd->add_option("css", css_path, "CSS JSON file ('-' for stdin)")->required();

  auto* hom = app.add_subcommand("homology", "Integral homology");
  auto* hom_css = hom->add_option("css", css_path, "CSS JSON file ('-' for stdin)");
  auto* hom_ds = hom->add_option("--deltaset", deltaset_path, "Δ-set JSON file");
  hom_css->excludes(hom_ds);

  auto* sal = app.add_subcommand("salvetti", "Higher order Salvetti complex");
  sal->add_option("--arrangement", arrangement_path, "Arrangement JSON file")->required();
  sal->add_option("--order", order, "Order ℓ")->required()->check(CLI::PositiveNumber);
  sal->add_flag("--poset-only", poset_only, "Emit the complement face poset instead of the Δ-set");

  auto* faces = app.add_subcommand("faces", "Face poset of an arrangement");
  faces->add_option("--arrangement", arrangement_path, "Arrangement JSON file")->required();
  faces->add_option("--order", order, "Order ℓ")->check(CLI::PositiveNumber);

  auto* conf = app.add_subcommand("conf", "Cellular model of a graph configuration space");
  conf->add_option("--graph", graph_path, "Graph JSON file")->required();
  conf->add_option("-k", k, "Number of points")->required()->check(CLI::PositiveNumber);
  conf->add_flag("--unordered", unordered, "Divide by the symmetric group");

  auto* abrams = app.add_subcommand("abrams", "Abrams discretized configuration space");
  abrams->add_option("--graph", graph_path, "Graph JSON file")->required();
  abrams->add_option("-k", k, "Number of points")->required()->check(CLI::PositiveNumber);
  abrams->add_option("--subdivide", subdivide, "Subdivision factor (default k + 1)")->check(CLI::PositiveNumber);
  abrams->add_flag("--unordered", unordered, "Unordered configurations");

  auto* fix = app.add_subcommand("fixture", "Emit a built-in stratification");
  fix->add_option("name", fixture_name, "Fixture name")->required()->check(CLI::IsMember(fixture_names()));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {Status::Ok, json::object(), app.help()};
  } catch (const CLI::ParseError& e) {
    return {Status::InputError, {{"error", e.what()}}, std::string(e.what()) + "\n"};
  }

  try {
    if (validate->parsed()) {
      const TotallyNormalCSS s = io::css_from_json(load(css_path, input));
      const ValidationReport r = validate_css(s, closed ? CssMode::Closed : CssMode::General);
      return {r.empty() ? Status::Ok : Status::ValidationFailed,
              {{"valid", r.empty()}, {"violations", io::report_to_json(r)}}, report_text(r)};
    }
    if (sd->parsed()) {
      const DeltaSet d = barycentric_subdivision(io::css_from_json(load(css_path, input)));
      return {Status::Ok, io::deltaset_to_json(d), deltaset_text(d)};
    }
    if (hom->parsed()) {
      DeltaSet d;
      if (!deltaset_path.empty()) {
        d = io::deltaset_from_json(load(deltaset_path, input));
        auto r = validate_deltaset(d);
        if (!r.empty()) throw ValidationError("Δ-set is not valid", r);
      } else {
        d = barycentric_subdivision(io::css_from_json(load(css_path.empty() ? "-" : css_path, input)));
      }
      const HomologyResult h = homology(d);
      return {Status::Ok, io::homology_to_json(h), homology_text(h)};
    }
    if (sal->parsed()) {
      const Arrangement a = io::arrangement_from_json(load(arrangement_path, input));
      const FacePoset complement = complement_subposet(enumerate_higher_faces(a, order));
      const DeltaSet d = order_complex(complement.poset);
      json payload;
      std::string text;
      if (poset_only) {
        payload["poset"] = io::face_poset_to_json(complement);
        text = "complement faces: " + std::to_string(complement.faces.size()) + "\n";
      } else {
        payload["complex"] = io::deltaset_to_json(d);
        text = "cells: " + join(d.cell_counts()) + "\n";
      }
      return homology_result(d, std::move(payload), std::move(text));
    }
    if (faces->parsed()) {
      const Arrangement a = io::arrangement_from_json(load(arrangement_path, input));
      const FacePoset fp = enumerate_higher_faces(a, order);
      std::vector<std::size_t> by_dim;
      std::string text;
      for (const auto& f : fp.faces) {
        if (by_dim.size() <= static_cast<std::size_t>(f.dimension)) by_dim.resize(f.dimension + 1, 0);
        ++by_dim[f.dimension];
        text += "  " + f.id() + " (dim " + std::to_string(f.dimension) + ")\n";
      }
      return {Status::Ok, io::face_poset_to_json(fp),
              "faces: " + std::to_string(fp.faces.size()) + "\nby dimension: " + join(by_dim) + "\n" + text};
    }
    if (conf->parsed()) {
      const Graph g = io::graph_from_json(load(graph_path, input));
      const ConfigurationModel model = conf_face_category(g, k);
      const DeltaSet d = unordered ? unordered_quotient(model) : barycentric_subdivision(model.css);
      json payload{{"cells", model.cell_counts()}, {"sd", io::deltaset_to_json(d)}};
      std::string text = "model cells: " + join(model.cell_counts()) + "\nsd cells: " + join(d.cell_counts()) + "\n";
      return homology_result(d, std::move(payload), std::move(text));
    }
    if (abrams->parsed()) {
      const Graph g = io::graph_from_json(load(graph_path, input));
      const Graph fine = subdivide_graph(g, subdivide > 0 ? subdivide : k + 1);
      const AbramsComplex ac = abrams_complex(fine, k, !unordered);
      const DeltaSet d = order_complex(ac.poset);
      std::vector<std::size_t> by_dim(static_cast<std::size_t>(k) + 1, 0);
      for (int dim : ac.dims) ++by_dim[static_cast<std::size_t>(dim)];
      json payload{{"complex", io::graded_poset_to_json(ac.poset, ac.dims)}, {"cells", by_dim}};
      return homology_result(d, std::move(payload), "complex cells: " + join(by_dim) + "\n");
    }
    if (fix->parsed()) {
      const TotallyNormalCSS s = fixture(fixture_name);
      std::string text;
      for (std::size_t i = 0; i < s.category().object_count(); ++i) {
        text += "cell " + s.category().object(i) + " (dim " + std::to_string(s.dim(i)) + ")\n";
      }
      for (const auto& m : s.category().morphisms()) {
        text += "lift " + m.id + ": " + s.category().object(m.source) + " -> " + s.category().object(m.target) + "\n";
      }
      return {Status::Ok, io::css_to_json(s), text};
    }
  } catch (const ValidationError& e) {
    return {Status::ValidationFailed, {{"error", e.what()}, {"violations", io::report_to_json(e.report())}},
            std::string(e.what()) + "\n" + report_text(e.report())};
  } catch (const InputError& e) {
    return {Status::InputError, {{"error", e.what()}}, std::string(e.what()) + "\n"};
  } catch (const nlohmann::json::exception& e) {
    return {Status::InputError, {{"error", e.what()}}, std::string(e.what()) + "\n"};
  } catch (const InvariantViolation& e) {
    return {Status::InternalError, {{"error", e.what()}}, std::string("internal invariant violated: ") + e.what() + "\n"};
  }
  return {Status::InputError, {{"error", "no command"}}, "no command\n"};
}

int run(const std::vector<std::string>& args, std::istream& input, std::ostream& out, std::ostream& err) {
  CommandResult result = execute(args, input);

  std::string format = "text";
  std::string out_path;
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == "--format") format = args[i + 1];
    if (args[i] == "--out") out_path = args[i + 1];
  }
  const std::string rendered = (format == "json") ? result.payload.dump(2) + "\n" : result.text;

  std::ostream* target = &out;
  if (result.status != Status::Ok && result.status != Status::ValidationFailed) target = &err;
  std::ofstream file;
  if (!out_path.empty() && target == &out) {
    file.open(out_path);
    if (!file) {
      err << "cannot write '" << out_path << "'\n";
      return static_cast<int>(Status::InputError);
    }
    target = &file;
  }
  *target << rendered;
  return static_cast<int>(result.status);
}

}  // namespace cellstrat::cli
