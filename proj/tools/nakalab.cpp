#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "nakalab/ar.hpp"
#include "nakalab/classify.hpp"
#include "nakalab/errors.hpp"
#include "nakalab/hereditary.hpp"
#include "nakalab/oracle.hpp"
#include "nakalab/parse.hpp"
#include "nakalab/strings.hpp"

using nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string algebra_file;
  std::string module_file;
  std::string dot_path;
  std::optional<unsigned> field;
  long long budget = 4096;
  int max_rank = 9;
  bool json = false;
  bool table = false;
};

std::string dims_text(const std::vector<int>& dims) {
  std::string s = "(";
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + ")";
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw nakalab::ParseError("cannot write " + path);
  out << text;
}

int cmd_classify(const RunConfig& cfg) {
  auto alg = nakalab::parse_algebra_file(cfg.algebra_file, cfg.field);
  auto report = nakalab::classify(alg);
  if (cfg.json) {
    ordered_json j;
    j["backend"] = report.backend;
    j["rightIndex"] = report.right_index;
    j["leftIndex"] = report.left_index;
    j["rightWitness"] = report.right_witness;
    j["rightWitnessDims"] = report.right_witness_dims;
    j["leftWitness"] = report.left_witness;
    j["leftWitnessDims"] = report.left_witness_dims;
    j["indecomposables"] = ordered_json::array();
    for (const auto& rec : report.table) {
      j["indecomposables"].push_back({{"name", rec.name},
                                      {"dims", rec.module.dims()},
                                      {"length", rec.factor.length},
                                      {"factorIndex", rec.factor.index}});
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (report.right_index == 1 && report.left_index == 1) {
    std::cout << "Nakayama (index 1)\n";
  } else {
    std::cout << "right " << report.right_index << "-Nakayama, left " << report.left_index
              << "-Nakayama\n";
  }
  std::cout << "backend: " << report.backend << ", " << report.table.size()
            << " indecomposables\n";
  std::cout << "right witness: " << report.right_witness << " "
            << dims_text(report.right_witness_dims) << "\n";
  std::cout << "left witness: " << report.left_witness << " "
            << dims_text(report.left_witness_dims) << "\n";
  if (cfg.table) {
    for (const auto& rec : report.table)
      std::cout << rec.name << "  dim " << dims_text(rec.module.dims()) << "  length "
                << rec.factor.length << "  index " << rec.factor.index << "\n";
  }
  return 0;
}

int cmd_module(const RunConfig& cfg) {
  nakalab::Representation m =
      cfg.module_file.empty()
          ? nakalab::parse_module_file(cfg.algebra_file, nullptr, cfg.field)
          : nakalab::parse_module_file(cfg.module_file,
                                       nakalab::parse_algebra_file(cfg.algebra_file, cfg.field));
  auto factor = nakalab::factor_serial_index(m);
  auto cofactor = nakalab::cofactor_serial_index(m);
  if (cfg.json) {
    ordered_json j;
    j["length"] = factor.length;
    j["loewyLength"] = factor.loewy_length;
    j["local"] = nakalab::is_local(m);
    j["uniserial"] = nakalab::is_uniserial(m);
    j["factorIndex"] = factor.index;
    j["cofactorIndex"] = cofactor.index;
    j["radicalLayerDims"] = factor.radical_layers;
    j["socleLayerDims"] = factor.socle_layers;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "dim " << dims_text(m.dims()) << ", length " << factor.length
            << ", Loewy length " << factor.loewy_length << "\n";
  std::cout << (nakalab::is_local(m) ? "local" : "not local") << ", "
            << (nakalab::is_uniserial(m) ? "uniserial" : "not uniserial") << "\n";
  std::cout << "factor index " << factor.index << ", cofactor index " << cofactor.index << "\n";
  std::cout << "radical layers " << dims_text(factor.radical_layers) << "\n";
  std::cout << "socle layers " << dims_text(factor.socle_layers) << "\n";
  return 0;
}

int cmd_strings(const RunConfig& cfg) {
  auto alg = nakalab::parse_algebra_file(cfg.algebra_file, cfg.field);
  auto words = nakalab::enumerate_strings(*alg, static_cast<size_t>(cfg.budget));
  if (cfg.json) {
    ordered_json j;
    j["count"] = words.size();
    j["strings"] = ordered_json::array();
    for (const auto& w : words) {
      auto mod = nakalab::string_module(alg, w);
      j["strings"].push_back(
          {{"text", nakalab::string_to_text(*alg, w)}, {"dims", mod.dims()}});
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& w : words) {
    auto mod = nakalab::string_module(alg, w);
    std::cout << nakalab::string_to_text(*alg, w) << "  dim " << dims_text(mod.dims()) << "\n";
  }
  std::cout << words.size() << " strings\n";
  return 0;
}

int cmd_ar(const RunConfig& cfg) {
  auto alg = nakalab::parse_algebra_file(cfg.algebra_file, cfg.field);
  auto graph = nakalab::build_ar_quiver(alg);
  if (!cfg.dot_path.empty()) write_output(cfg.dot_path, nakalab::ar_quiver_dot(graph, alg->quiver()));
  if (cfg.json) {
    ordered_json j;
    j["nodes"] = ordered_json::array();
    for (const auto& n : graph.nodes)
      j["nodes"].push_back({{"name", n.name}, {"dims", n.dims}, {"projective", n.projective}});
    j["edges"] = graph.edges;
    j["translates"] = graph.translates;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << graph.nodes.size() << " nodes, " << graph.edges.size() << " edges, "
            << graph.translates.size() << " translates\n";
  for (const auto& [a, b] : graph.edges)
    std::cout << graph.nodes[a].name << " -> " << graph.nodes[b].name << "\n";
  for (const auto& [a, b] : graph.translates)
    std::cout << graph.nodes[a].name << " ~> " << graph.nodes[b].name << "  (tau)\n";
  return 0;
}

int cmd_check2(const RunConfig& cfg) {
  auto alg = nakalab::parse_algebra_file(cfg.algebra_file, cfg.field);
  auto check = nakalab::is_right_2_nakayama_syntactic(*alg);
  if (cfg.json) {
    ordered_json j;
    j["right2Nakayama"] = check.ok;
    j["conditions"] = ordered_json::array();
    for (const auto& c : check.conditions)
      j["conditions"].push_back({{"name", c.name}, {"ok", c.ok}, {"witness", c.witness}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : check.conditions) {
      std::cout << (c.ok ? "ok   " : "FAIL ") << c.name;
      if (!c.ok) std::cout << ": " << c.witness;
      std::cout << "\n";
    }
    std::cout << (check.ok ? "right 2-Nakayama\n" : "not right 2-Nakayama\n");
  }
  return check.ok ? 0 : 3;
}

int cmd_oracle(const RunConfig& cfg) {
  auto alg = nakalab::parse_algebra_file(cfg.algebra_file, cfg.field);
  auto results = nakalab::run_module_invariants(alg, cfg.budget);
  bool all_ok = true;
  for (const auto& r : results) {
    if (r.ok) {
      std::cout << "ok   " << r.name << " (" << r.checked << " checked)\n";
    } else {
      all_ok = false;
      std::cout << "FAIL " << r.name << ": " << r.witness << "\n";
    }
  }
  return all_ok ? 0 : 3;
}

int cmd_hereditary(const RunConfig& cfg) {
  auto alg = nakalab::parse_algebra_file(cfg.algebra_file, cfg.field);
  if (alg->quiver().num_vertices() > cfg.max_rank)
    throw nakalab::PreconditionError("quiver rank exceeds --max-rank");
  auto shape = nakalab::classify_shape(*alg);
  auto roots = nakalab::positive_roots(alg->quiver());
  auto mods = nakalab::hereditary_indecomposables(alg);
  auto predicted = nakalab::predicted_nakayama_index(*alg);
  int right = 0;
  for (const auto& m : mods) right = std::max(right, nakalab::factor_serial_index(m).index);
  if (cfg.json) {
    ordered_json j;
    j["dynkin"] = shape.dynkin ? shape.dynkin->to_string() : "";
    j["positiveRoots"] = roots.size();
    j["indecomposables"] = mods.size();
    j["predictedRightIndex"] = predicted.right;
    j["predictedLeftIndex"] = predicted.left;
    j["rightIndex"] = right;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "type " << (shape.dynkin ? shape.dynkin->to_string() : "?") << ", "
            << roots.size() << " positive roots, " << mods.size() << " indecomposables\n";
  std::cout << "right index " << right << " (predicted " << predicted.right << "), left predicted "
            << predicted.left << "\n";
  if (cfg.table)
    for (const auto& m : mods)
      std::cout << "dim " << dims_text(m.dims()) << "  index "
                << nakalab::factor_serial_index(m).index << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial-index classification of bound quiver algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  unsigned field_value = 0;

  auto add_common = [&](CLI::App* sub, bool with_module) {
    sub->add_option("algebra", cfg.algebra_file, "algebra file")->required();
    if (with_module) sub->add_option("module", cfg.module_file, "module file");
    sub->add_option("--field", field_value, "field characteristic override");
    sub->add_option("--budget", cfg.budget, "search budget")->check(CLI::PositiveNumber);
    sub->add_flag("--json", cfg.json, "JSON output");
    return sub;
  };

  auto* c_classify = add_common(app.add_subcommand("classify", "both-sided serial index"), false);
  c_classify->add_flag("--table", cfg.table, "list every indecomposable");
  add_common(app.add_subcommand("module", "serial index report for one module"), true);
  add_common(app.add_subcommand("strings", "enumerate strings"), false);
  auto* c_ar = add_common(app.add_subcommand("ar", "almost split sequences and AR quiver"), false);
  c_ar->add_option("--dot", cfg.dot_path, "write DOT here ('-' for stdout)");
  add_common(app.add_subcommand("check2", "arrow-level right 2-Nakayama test"), false);
  add_common(app.add_subcommand("oracle", "module invariant suite"), false);
  auto* c_her = add_common(app.add_subcommand("hereditary", "reflection enumeration"), false);
  c_her->add_option("--max-rank", cfg.max_rank, "largest accepted rank")
      ->check(CLI::PositiveNumber);
  c_her->add_flag("--table", cfg.table, "list every indecomposable");

  CLI11_PARSE(app, argc, argv);
  if (field_value) cfg.field = field_value;

  try {
    if (app.got_subcommand("classify")) return cmd_classify(cfg);
    if (app.got_subcommand("module")) return cmd_module(cfg);
    if (app.got_subcommand("strings")) return cmd_strings(cfg);
    if (app.got_subcommand("ar")) return cmd_ar(cfg);
    if (app.got_subcommand("check2")) return cmd_check2(cfg);
    if (app.got_subcommand("oracle")) return cmd_oracle(cfg);
    if (app.got_subcommand("hereditary")) return cmd_hereditary(cfg);
  } catch (const nakalab::ParseError& e) {
    std::cerr << "parse error";
    if (e.line) std::cerr << " at line " << e.line << ", column " << e.col;
    std::cerr << ": " << e.what() << "\n";
    return 1;
  } catch (const nakalab::RepresentationInfiniteError& e) {
    std::cerr << e.what() << "\n" << e.certificate << "\n";
    return 2;
  } catch (const nakalab::UnsupportedClassError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const nakalab::PreconditionError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const nakalab::BudgetExceededError& e) {
    std::cerr << e.what() << "\n";
    return 4;
  }
  return 0;
}
