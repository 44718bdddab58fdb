#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tia/graph.hpp"
#include "tia/witness.hpp"

namespace tia {

/// TIA_ORACLE_CAP from the environment, 8 when unset.
std::size_t oracle_cap();

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact tree-independence number, by a subset DP over elimination orders.
std::size_t exact_tia(const Graph& g, std::optional<std::size_t> cap = std::nullopt);

/// The same quantity by enumerating every chordal supergraph; n <= 6 only.
std::size_t exact_tia_by_completions(const Graph& g);

bool is_chordal(const Graph& g);

class GeneratorExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GenMethod { UnionJoin, PerturbFilter };
GenMethod gen_method_from_name(const std::string& name);
std::string gen_method_name(GenMethod m);

Graph gen_p5_free(std::size_t n, std::uint64_t seed, GenMethod method);

struct Pattern {
  enum Kind { P5, Path, Kll, K2l, Sd } kind = P5;
  std::size_t param = 5;

  std::string name() const;
};

/// "p5", "path:T", "kll:L", "k2l:L", "sd:D".
Pattern parse_pattern(const std::string& text);
std::vector<Pattern> parse_patterns(const std::string& comma_separated);

std::optional<Witness> find_pattern(const Graph& g, const Pattern& p);

/// Random member of the class excluding every pattern. A candidate is grown by
/// edge flips kept only while the graph stays in the class; `budget` bounds the
/// number of candidates. With `start`, flips begin from that graph (n is ignored).
Graph gen_class_free(std::size_t n, std::uint64_t seed, const std::vector<Pattern>& forbidden,
                     std::size_t budget = 16, const Graph* start = nullptr);

/// First forbidden pattern found in G, in list order.
std::optional<Witness> first_forbidden(const Graph& g, const std::vector<Pattern>& forbidden);

struct TrialRecord {
  std::uint64_t seed = 0;
  std::string generator;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t l_star = 0;
  std::string outcome;
  std::size_t k_star = 0;
  std::optional<std::size_t> tia;  // exact, when the oracle ran
  std::size_t alpha_degeneracy = 0;
  std::size_t biclique_number = 0;
  std::size_t iterations = 0;
  std::size_t max_level_iterations = 0;
  double wall_ms = 0;

  static std::string csv_header();
  std::string to_csv() const;
};

class AuditViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// approximate_tia, exact_tia (when n <= cap), alpha_degeneracy and the
/// induced biclique number, with every inequality between them checked.
TrialRecord audit_sandwich(const Graph& g, std::uint64_t seed = 0, const std::string& generator = "");

/// Rows of (l*, graphs, max k*, 4l*).
std::string summary_table(const std::vector<TrialRecord>& records);

}  // namespace tia
