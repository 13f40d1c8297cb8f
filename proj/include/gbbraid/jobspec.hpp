#ifndef GBBRAID_JOBSPEC_HPP
#define GBBRAID_JOBSPEC_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gbbraid/braid.hpp"
#include "gbbraid/lagrangian.hpp"

namespace gbbraid {

using ojson = nlohmann::ordered_json;

// A fully built job: the owned algebraic objects (stable addresses -- the
// modules point back at the group and cocycle) plus the effective settings
// after command-line overrides.
struct Job {
  std::unique_ptr<FiniteGroup> group;
  std::unique_ptr<ThreeCocycle> omega;
  std::vector<std::unique_ptr<LagrangianData>> boundaries;

  std::string command;
  int n = 2;
  std::uint64_t cap = 1'000'000;
  std::uint64_t max_tuples = kDefaultMaxTuples;
  bool oracle = false;
  int threads = 1;
  std::string out;  // empty = stdout
};

struct CliOverrides {
  std::optional<std::string> command;
  std::optional<int> n;
  std::optional<std::uint64_t> cap;
  std::optional<std::uint64_t> max_tuples;
  std::optional<bool> oracle;
  std::optional<int> threads;
  std::optional<std::string> out;
};

// Individual parsers (strict: unknown keys are rejected).
FiniteGroup parse_group(const nlohmann::json& j);
ThreeCocycle parse_cocycle(const nlohmann::json& j, const FiniteGroup& g);
Subgroup parse_subgroup(const nlohmann::json& j, const FiniteGroup& g);
TwoCochain parse_cochain(const nlohmann::json& j, const ThreeCocycle& omega,
                         const Subgroup& h);

// Parses the job file and applies overrides.  The "boundary"/"boundaries"
// keys are mutually exclusive; every boundary is validated on construction.
Job build_job(const nlohmann::json& file, const CliOverrides& cli);

// Deterministic serializers shared by the CLI and the tests.
std::string phase_string(const Phase& q);
// "0", "1", "-1", "i", "-i", or "e(num/den)".
std::string symbolic_entry(const Phase& q);
ojson braid_rep_json(const BraidRep& rep);
ojson pure_braid_rep_json(const PureBraidRep& rep);
ojson orbits_json(const TupleSpace& s);
std::string matrices_csv(const std::vector<std::vector<int>>& basis,
                         const std::vector<MonomialMatrix>& generators,
                         const std::vector<std::string>& names);
// dump(2) + trailing newline; the single formatting used everywhere.
std::string json_text(const ojson& j);

// Writes atomically: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace gbbraid

#endif
