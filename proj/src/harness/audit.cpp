#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "tia/decomposer.hpp"
#include "tia/degeneracy.hpp"
#include "tia/harness.hpp"
#include "tia/oracles.hpp"

namespace tia {

std::string TrialRecord::csv_header() {
  return "seed,generator,n,m,l_star,outcome,k_star,tia,alpha_degeneracy,biclique_number,iterations,"
         "max_level_iterations,wall_ms";
}

std::string TrialRecord::to_csv() const {
  std::ostringstream os;
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", wall_ms);
  os << seed << ',' << generator << ',' << n << ',' << m << ',' << l_star << ',' << outcome << ',' << k_star << ','
     << (tia ? std::to_string(*tia) : std::string()) << ',' << alpha_degeneracy << ',' << biclique_number << ','
     << iterations << ',' << max_level_iterations << ',' << ms;
  return os.str();
}

namespace {

void require(bool ok, const std::string& what, const TrialRecord& r) {
  if (!ok) throw AuditViolation("audit: " + what + " fails (" + r.to_csv() + ")");
}

}  // namespace

TrialRecord audit_sandwich(const Graph& g, std::uint64_t seed, const std::string& generator) {
  const auto t0 = std::chrono::steady_clock::now();
  TrialRecord r;
  r.seed = seed;
  r.generator = generator;
  r.n = g.order();
  r.m = g.size();

  const TiaApproximation approx = approximate_tia(g);
  r.l_star = approx.l_star;
  r.k_star = approx.k_star;
  r.outcome = outcome_name(Outcome::Decomposition);
  for (const auto& lv : approx.log) {
    r.iterations += lv.iterations.size();
    r.max_level_iterations = std::max(r.max_level_iterations, lv.iterations.size());
    require(lv.iterations.size() <= lv.degree * (lv.degree - (lv.degree ? 1 : 0)) / 2, "iterations <= C(deg r, 2)", r);
  }
  require(validate(g, approx.td).empty(), "returned decomposition validates", r);
  require(td_alpha(g, approx.td) == r.k_star, "k* = td_alpha", r);
  r.alpha_degeneracy = alpha_degeneracy(g);
  r.biclique_number = induced_biclique_number(g);
  if (g.order() <= oracle_cap()) r.tia = exact_tia(g);

  require(r.k_star <= 4 * r.l_star, "k* <= 4l*", r);
  require(r.l_star == 0 || r.l_star - 1 <= r.biclique_number, "l* - 1 <= biclique number", r);
  require(r.biclique_number <= r.k_star, "biclique number <= k*", r);
  require(r.alpha_degeneracy <= r.k_star, "alpha-degeneracy <= k*", r);
  if (r.tia) {
    require(r.l_star == 0 || r.l_star - 1 <= *r.tia, "l* - 1 <= tia", r);
    require(*r.tia <= r.k_star, "tia <= k*", r);
    require(r.alpha_degeneracy <= *r.tia, "alpha-degeneracy <= tia", r);
    require(r.biclique_number <= *r.tia, "biclique number <= tia", r);
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string summary_table(const std::vector<TrialRecord>& records) {
  struct Row {
    std::size_t graphs = 0;
    std::size_t max_k = 0;
    std::size_t max_tia = 0;
    bool any_tia = false;
  };
  std::map<std::size_t, Row> rows;
  for (const auto& r : records) {
    Row& row = rows[r.l_star];
    ++row.graphs;
    row.max_k = std::max(row.max_k, r.k_star);
    if (r.tia) {
      row.any_tia = true;
      row.max_tia = std::max(row.max_tia, *r.tia);
    }
  }
  std::ostringstream os;
  char line[128];
  std::snprintf(line, sizeof line, "%4s %8s %8s %8s %6s\n", "l*", "graphs", "max k*", "max tia", "4l*");
  os << line;
  for (const auto& [l, row] : rows) {
    std::snprintf(line, sizeof line, "%4zu %8zu %8zu %8s %6zu\n", l, row.graphs, row.max_k,
                  row.any_tia ? std::to_string(row.max_tia).c_str() : "-", 4 * l);
    os << line;
  }
  return os.str();
}

}  // namespace tia
