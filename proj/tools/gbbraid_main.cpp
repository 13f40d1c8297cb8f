// gbbraid: exact braid-group representations from gapped boundaries.
//
//   gbbraid <command> <job.json> [--n N] [--cap C] [--max-tuples M]
//                                [--oracle] [--threads T] [--out PATH]
//
// Commands: check, dim, orbits, matrices, image, verify.  All problem data
// lives in the JSON job file; the flags override its settings.  Exit codes:
// 0 ok, 1 invalid input, 2 size limit exceeded, 3 internal error.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbbraid/braid.hpp"
#include "gbbraid/cocycle.hpp"
#include "gbbraid/errors.hpp"
#include "gbbraid/jobspec.hpp"
#include "gbbraid/lagrangian.hpp"
#include "gbbraid/monomial.hpp"
#include "gbbraid/oracle.hpp"
#include "gbbraid/threading.hpp"

namespace {

using namespace gbbraid;

// The factor list of the tuple space: one module repeated n times for a
// single boundary, the listed modules in order when several are given.
std::vector<const MonomialYD*> job_factors(const Job& job) {
  if (job.boundaries.empty())
    throw ValidationError("this command needs a \"boundary\" (or \"boundaries\")");
  std::vector<const MonomialYD*> fs;
  if (job.boundaries.size() == 1) {
    fs.assign(static_cast<size_t>(job.n), &job.boundaries[0]->module());
  } else {
    for (const auto& b : job.boundaries) fs.push_back(&b->module());
  }
  return fs;
}

void emit(const Job& job, const std::string& text) {
  if (job.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    write_file_atomic(job.out, text);
  }
}

// Re-runs a named consistency check on data that already passed construction;
// a failure here is a bug, not bad input.
void add_check(ojson& checks, const std::string& name, const CheckReport& r) {
  ojson c;
  c["name"] = name;
  c["ok"] = r.ok;
  if (!r.ok) c["detail"] = r.detail;
  checks.push_back(c);
  if (!r.ok) throw InternalError(name + " failed after validation: " + r.detail);
}

// Validation happened while the job was built (any violation already exited
// with code 1); this re-runs the cheap structural checks and reports each.
ojson check_report(const Job& job) {
  ojson checks = ojson::array();
  add_check(checks, "group table", CheckReport::pass());
  add_check(checks, "cocycle pentagon and normalization", CheckReport::pass());
  for (size_t i = 0; i < job.boundaries.size(); ++i) {
    const LagrangianData& b = *job.boundaries[i];
    const std::string tag = "boundary " + std::to_string(i) + ": ";
    add_check(checks, tag + "subgroup closure", CheckReport::pass());
    add_check(checks, tag + "cochain coboundary matches cocycle", CheckReport::pass());
    add_check(checks, tag + "coset factorization", kappa_identity_check(b.cosets()));
    add_check(checks, tag + "label crossed-set axioms",
              crossed_axioms_check(b.module().labels()));
    add_check(checks, tag + "coefficient composition law",
              action_composition_check(b.module()));
  }
  ojson rep;
  rep["ok"] = true;
  rep["checks"] = checks;
  return rep;
}

int cmd_check(const Job& job) {
  emit(job, json_text(check_report(job)));
  return 0;
}

int cmd_dim(const Job& job) {
  TupleSpace s(job_factors(job), job.max_tuples);
  const int d = s.dimension();
  if (job.oracle) {
    const int brute = brute_force_dimension(s);
    if (brute != d)
      throw InternalError("projector rank " + std::to_string(brute) +
                          " disagrees with regular-orbit count " + std::to_string(d));
  }
  emit(job, std::to_string(d) + "\n");
  return 0;
}

int cmd_orbits(const Job& job) {
  TupleSpace s(job_factors(job), job.max_tuples);
  emit(job, json_text(orbits_json(s)));
  return 0;
}

int cmd_matrices(const Job& job) {
  if (job.boundaries.empty())
    throw ValidationError("this command needs a \"boundary\" (or \"boundaries\")");
  ojson out;
  std::vector<std::vector<int>> basis;
  std::vector<MonomialMatrix> gens;
  std::vector<std::string> names;
  if (job.boundaries.size() == 1) {
    BraidRep rep = braid_matrices(job.boundaries[0]->module(), job.n, job.max_tuples);
    CheckReport rel = verify_braid_relations(rep);
    if (!rel.ok)
      throw InternalError("refusing to emit matrices: " + rel.detail);
    if (job.oracle) {
      TupleSpace s(job_factors(job), job.max_tuples);
      CheckReport orc = oracle_braid_check(s, rep);
      if (!orc.ok) throw InternalError("projector oracle rejected matrices: " + orc.detail);
    }
    out = braid_rep_json(rep);
    basis = rep.basis;
    gens = rep.generators;
    for (size_t i = 1; i <= gens.size(); ++i)
      names.push_back("sigma_" + std::to_string(i));
  } else {
    const int n = static_cast<int>(job.boundaries.size());
    std::vector<const MonomialYD*> ms = job_factors(job);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    PureBraidRep rep = pure_braid_matrices(ms, pairs, job.max_tuples);
    out = pure_braid_rep_json(rep);
    basis = rep.basis;
    gens = rep.matrices;
    for (const auto& [i, j] : rep.pairs)
      names.push_back("A_" + std::to_string(i) + "_" + std::to_string(j));
  }
  emit(job, json_text(out));
  if (!job.out.empty())
    write_file_atomic(job.out + ".csv", matrices_csv(basis, gens, names));
  return 0;
}

int cmd_image(const Job& job) {
  if (job.boundaries.empty())
    throw ValidationError("this command needs a \"boundary\" (or \"boundaries\")");
  std::vector<MonomialMatrix> gens;
  int dim = 0;
  if (job.boundaries.size() == 1) {
    BraidRep rep = braid_matrices(job.boundaries[0]->module(), job.n, job.max_tuples);
    gens = rep.generators;
    dim = rep.dim;
  } else {
    std::vector<const MonomialYD*> ms = job_factors(job);
    const int n = static_cast<int>(job.boundaries.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    PureBraidRep rep = pure_braid_matrices(ms, pairs, job.max_tuples);
    gens = rep.matrices;
    dim = rep.dim;
  }
  ImageOrderResult r = image_order(gens, job.cap);
  ojson out;
  out["dim"] = dim;
  out["exceeded"] = r.exceeded;
  if (r.exceeded)
    out["cap"] = job.cap;
  else
    out["order"] = r.order;
  emit(job, json_text(out));
  return 0;
}

// Everything `check` runs, plus the expensive representation-level
// re-verifications on the tuple space of this job.
int cmd_verify(const Job& job) {
  ojson rep = check_report(job);
  ojson& checks = rep["checks"];
  if (!job.boundaries.empty()) {
    TupleSpace s(job_factors(job), job.max_tuples);
    add_check(checks, "regularity constant on orbits",
              s.verify_regularity_orbit_invariance());
    add_check(checks, "braiding coefficient transporter-independent",
              beta_transporter_independence(s));
    if (job.boundaries.size() == 1 && job.n >= 2) {
      BraidRep br = braid_matrices(job.boundaries[0]->module(), job.n, job.max_tuples);
      add_check(checks, "braid relations", verify_braid_relations(br));
      if (job.oracle)
        add_check(checks, "projector oracle", oracle_braid_check(s, br));
    } else if (job.oracle) {
      const int brute = brute_force_dimension(s);
      add_check(checks, "projector oracle",
                brute == s.dimension()
                    ? CheckReport::pass()
                    : CheckReport::fail("projector rank " + std::to_string(brute) +
                                        " != " + std::to_string(s.dimension())));
    }
  }
  emit(job, json_text(rep));
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"exact braid representations from gapped boundaries"};
  app.require_subcommand(0);

  std::string command;
  std::string jobpath;
  int n = 0;
  std::uint64_t cap = 0;
  std::uint64_t max_tuples = 0;
  bool oracle = false;
  int threads = 0;
  std::string out;

  app.add_option("command", command, "check | dim | orbits | matrices | image | verify")
      ->required();
  app.add_option("job", jobpath, "JSON job file")->required();
  CLI::Option* n_opt = app.add_option("--n", n, "number of tensor factors");
  CLI::Option* cap_opt = app.add_option("--cap", cap, "image-order search cap");
  CLI::Option* mt_opt = app.add_option("--max-tuples", max_tuples,
                                       "largest allowed tuple count");
  CLI::Option* oracle_opt =
      app.add_flag("--oracle", oracle, "cross-check against the averaging projector");
  CLI::Option* threads_opt = app.add_option("--threads", threads, "worker thread count");
  CLI::Option* out_opt = app.add_option("--out", out, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  CliOverrides cli;
  cli.command = command;
  if (n_opt->count()) cli.n = n;
  if (cap_opt->count()) cli.cap = cap;
  if (mt_opt->count()) cli.max_tuples = max_tuples;
  if (oracle_opt->count()) cli.oracle = oracle;
  if (threads_opt->count()) cli.threads = threads;
  if (out_opt->count()) cli.out = out;

  std::ifstream in(jobpath);
  if (!in) throw ValidationError("cannot open job file \"" + jobpath + "\"");
  nlohmann::json file;
  try {
    file = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("job file is not valid JSON: " + std::string(e.what()));
  }

  Job job = build_job(file, cli);
  set_worker_threads(job.threads);

  if (job.command == "check") return cmd_check(job);
  if (job.command == "dim") return cmd_dim(job);
  if (job.command == "orbits") return cmd_orbits(job);
  if (job.command == "matrices") return cmd_matrices(job);
  if (job.command == "image") return cmd_image(job);
  if (job.command == "verify") return cmd_verify(job);
  throw InternalError("unhandled command " + job.command);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
