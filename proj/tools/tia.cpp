#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tia/decomposer.hpp"
#include "tia/degeneracy.hpp"
#include "tia/harness.hpp"
#include "tia/oracles.hpp"
#include "tia/separators.hpp"

using namespace tia;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kWitness = 2;

void print(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int report_witness(const Graph& g, const Witness& w) {
  nlohmann::json j = witness_to_json(w);
  j["verified"] = verify_witness(g, w);
  print(j);
  return kWitness;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tia: tree-independence number tools for P5-free graphs"};
  app.require_subcommand(1);
  int code = kOk;

  std::string graph_path, td_path, emit_td, pattern, kind = "union-join", forbid, corpus, report, out_dir, out;
  std::size_t ell = 2, d = 2, t = 5, n = 10, count = 1;
  std::uint64_t seed = 0;
  std::optional<std::size_t> cap;
  bool with_log = false, no_p5 = false, no_biclique = false;

  auto* dec = app.add_subcommand("decompose", "K_{l,l} or a tree-decomposition with bag alpha <= 4l");
  dec->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  dec->add_option("--ell", ell, "l (>= 2)")->required();
  dec->add_option("--emit-td", emit_td, "write the decomposition in td format");
  dec->add_flag("--log", with_log, "include per-level provenance");
  dec->add_flag("--no-p5-check", no_p5);
  dec->add_flag("--no-biclique-check", no_biclique, "only the extraction route can produce a biclique");
  dec->callback([&] {
    const Graph g = read_graph_file(graph_path);
    const DecomposeResult r = decompose(g, ell, DecomposeOptions{!no_p5, !no_biclique});
    print(r.to_json(with_log));
    if (r.td && !emit_td.empty()) write_file(emit_td, serialize_td(*r.td));
    code = r.outcome == Outcome::Decomposition ? kOk : kWitness;
  });

  auto* chk = app.add_subcommand("check-td", "validate a decomposition and report its alpha");
  chk->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  chk->add_option("td", td_path)->required()->check(CLI::ExistingFile);
  chk->callback([&] {
    const Graph g = read_graph_file(graph_path);
    const TreeDecomposition td = read_td_file(td_path, g.order());
    const auto errs = validate(g, td);
    nlohmann::json j{{"valid", errs.empty()}, {"violations", errs}, {"nodes", td.node_count()}};
    if (errs.empty()) j["alpha"] = td_alpha(g, td);
    print(j);
    code = errs.empty() ? kOk : kError;
  });

  auto* adg = app.add_subcommand("alpha-degeneracy", "greedy alpha-degeneracy and its elimination order");
  adg->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  adg->callback([&] {
    const Graph g = read_graph_file(graph_path);
    nlohmann::json order = nlohmann::json::array();
    std::size_t k = 0;
    for (const auto& [v, a] : alpha_degeneracy_order(g)) {
      order.push_back({v, a});
      k = std::max(k, a);
    }
    print({{"alpha_degeneracy", k}, {"order", order}});
  });

  auto* fnd = app.add_subcommand("find", "search for an induced pattern");
  fnd->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  fnd->add_option("--pattern", pattern, "p5 | path:T | kll:L | k2l:L | sd:D")->required();
  fnd->callback([&] {
    const Graph g = read_graph_file(graph_path);
    if (auto w = find_pattern(g, parse_pattern(pattern)))
      code = report_witness(g, *w);
    else
      print({{"found", false}, {"pattern", pattern}});
  });

  auto* low = app.add_subcommand("low-alpha", "vertex with small alpha(N[v]) or an extraction witness");
  low->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  low->add_option("--ell", ell)->required();
  low->add_option("--d", d)->required();
  low->callback([&] {
    const Graph g = read_graph_file(graph_path);
    const LowAlphaReport r = low_alpha_vertex(g, ell, d);
    print(r.to_json());
    code = r.witness ? kWitness : kOk;
  });

  auto* sep = app.add_subcommand("separator", "dominated balanced separator of a connected P_t-free graph");
  sep->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  sep->add_option("--t", t)->required();
  sep->callback([&] {
    const Graph g = read_graph_file(graph_path);
    const SeparatorOutcome o = gyarfas_dominated_separator(g, t);
    if (const auto* c = std::get_if<SeparatorCertificate>(&o)) {
      nlohmann::json j = c->to_json();
      j["valid"] = c->validate(g, t - 1);
      print(j);
    } else {
      code = report_witness(g, std::get<InducedPath>(o));
    }
  });

  auto* dbs = app.add_subcommand("dbs-vertex", "low-alpha vertex through the separator recursion");
  dbs->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  dbs->add_option("--ell", ell)->required();
  dbs->add_option("--t", t)->required();
  dbs->callback([&] {
    const Graph g = read_graph_file(graph_path);
    const NamedProvider p = pt_free_provider(t);
    try {
      print(dbs_low_alpha_vertex(g, ell, p.d, p.provide).to_json());
    } catch (const PromiseBreach& e) {
      std::cerr << e.what() << '\n';
      if (!e.witness()) throw;
      code = report_witness(g, *e.witness());
    }
  });

  auto* ex = app.add_subcommand("exact-tia", "exact tree-independence number (small graphs)");
  ex->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  ex->add_option("--cap", cap, "largest n accepted (default: TIA_ORACLE_CAP or 8)");
  ex->callback([&] {
    const Graph g = read_graph_file(graph_path);
    print({{"tia", exact_tia(g, cap)}, {"chordal", is_chordal(g)}});
  });

  auto* gen = app.add_subcommand("gen", "generate certified P5-free or class-free graphs");
  gen->add_option("--kind", kind, "union-join | perturb-filter | class")->check(CLI::IsMember({"union-join", "perturb-filter", "class"}));
  gen->add_option("--n", n)->required();
  gen->add_option("--seed", seed);
  gen->add_option("--forbid", forbid, "patterns for --kind class, e.g. p5,kll:2");
  gen->add_option("--count", count, "graphs with seeds seed, seed+1, ...");
  gen->add_option("--out-dir", out_dir, "one file per graph instead of stdout");
  gen->callback([&] {
    if (kind == "class" && forbid.empty()) throw CLI::ValidationError("--forbid", "required with --kind class");
    if (!out_dir.empty()) fs::create_directories(out_dir);
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t s = seed + i;
      const Graph g = kind == "class" ? gen_class_free(n, s, parse_patterns(forbid))
                                      : gen_p5_free(n, s, gen_method_from_name(kind));
      if (out_dir.empty()) {
        std::cout << serialize_graph(g);
      } else {
        char name[64];
        std::snprintf(name, sizeof name, "%s-n%zu-s%llu.txt", kind.c_str(), n, static_cast<unsigned long long>(s));
        write_file((fs::path(out_dir) / name).string(), serialize_graph(g));
      }
    }
  });

  auto* aud = app.add_subcommand("audit", "bound sandwich over a corpus directory");
  aud->add_option("--corpus", corpus)->required()->check(CLI::ExistingDirectory);
  aud->add_option("--report", report, "CSV output")->required();
  aud->callback([&] {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(corpus))
      if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<TrialRecord> records;
    std::ofstream csv(report);
    if (!csv) throw std::runtime_error("cannot write " + report);
    csv << TrialRecord::csv_header() << '\n';
    for (std::size_t i = 0; i < files.size(); ++i) {
      const Graph g = read_graph_file(files[i].string());
      TrialRecord r;
      try {
        r = audit_sandwich(g, i, files[i].filename().string());
      } catch (const PromiseBreach&) {
        r.seed = i;
        r.generator = files[i].filename().string();
        r.n = g.order();
        r.m = g.size();
        r.outcome = outcome_name(Outcome::RejectedP5);
        code = kWitness;
      }
      csv << r.to_csv() << '\n';
      if (r.outcome != outcome_name(Outcome::RejectedP5)) records.push_back(r);
    }
    std::cout << summary_table(records);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  } catch (const PromiseBreach& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.witness() ? kWitness : kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return code;
}
