#include "gbbraid/jobspec.hpp"

#include <cstdio>
#include <fstream>
#include <set>

#include "gbbraid/errors.hpp"

namespace gbbraid {

namespace {

using nlohmann::json;

void expect_object(const json& j, const std::string& what) {
  if (!j.is_object()) throw ValidationError(what + " must be a JSON object");
}

void expect_keys(const json& j, const std::set<std::string>& allowed,
                 const std::string& what) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw ValidationError("unknown key \"" + it.key() + "\" in " + what);
}

int get_int(const json& j, const std::string& key, const std::string& what) {
  if (!j.contains(key)) throw ValidationError(what + " needs \"" + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer())
    throw ValidationError("\"" + key + "\" in " + what + " must be an integer");
  return v.get<int>();
}

std::string type_of(const json& j, const std::string& what) {
  if (!j.contains("type") || !j.at("type").is_string())
    throw ValidationError(what + " needs a string \"type\"");
  return j.at("type").get<std::string>();
}

}  // namespace

FiniteGroup parse_group(const json& j) {
  expect_object(j, "group spec");
  std::string type = type_of(j, "group spec");
  if (type == "table") {
    expect_keys(j, {"type", "order", "mult"}, "table group spec");
    int order = get_int(j, "order", "table group spec");
    if (!j.contains("mult") || !j.at("mult").is_array())
      throw ValidationError("table group spec needs \"mult\" array");
    auto table = j.at("mult").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != order)
      throw ValidationError("\"mult\" size differs from \"order\"");
    return FiniteGroup::from_table(table);
  }
  if (type == "cyclic") {
    expect_keys(j, {"type", "m"}, "cyclic group spec");
    return cyclic_group(get_int(j, "m", "cyclic group spec"));
  }
  if (type == "dihedral") {
    expect_keys(j, {"type", "k"}, "dihedral group spec");
    return dihedral_group(get_int(j, "k", "dihedral group spec"));
  }
  if (type == "symmetric") {
    expect_keys(j, {"type", "n"}, "symmetric group spec");
    return symmetric_group(get_int(j, "n", "symmetric group spec"));
  }
  if (type == "product") {
    expect_keys(j, {"type", "factors"}, "product group spec");
    if (!j.contains("factors") || !j.at("factors").is_array() || j.at("factors").empty())
      throw ValidationError("product group spec needs a nonempty \"factors\" array");
    std::vector<FiniteGroup> built;
    for (const json& f : j.at("factors")) built.push_back(parse_group(f));
    std::vector<const FiniteGroup*> ptrs;
    for (const auto& g : built) ptrs.push_back(&g);
    return product_group(ptrs);
  }
  throw UnknownFamily(type);
}

ThreeCocycle parse_cocycle(const json& j, const FiniteGroup& g) {
  expect_object(j, "cocycle spec");
  std::string type = type_of(j, "cocycle spec");
  if (type == "trivial") {
    expect_keys(j, {"type"}, "trivial cocycle spec");
    return ThreeCocycle::trivial(g);
  }
  if (type == "cyclic") {
    expect_keys(j, {"type", "m", "p"}, "cyclic cocycle spec");
    int m = get_int(j, "m", "cyclic cocycle spec");
    if (m != g.order())
      throw ValidationError("cyclic cocycle parameter m = " + std::to_string(m) +
                            " differs from the group order " + std::to_string(g.order()));
    return cyclic_cocycle(g, get_int(j, "p", "cyclic cocycle spec"));
  }
  if (type == "table") {
    expect_keys(j, {"type", "values"}, "table cocycle spec");
    if (!j.contains("values") || !j.at("values").is_array())
      throw ValidationError("table cocycle spec needs \"values\" array");
    const int n = g.order();
    if (n > ThreeCocycle::kMaxTableOrder)
      throw SizeLimitExceeded(static_cast<std::uint64_t>(n),
                              ThreeCocycle::kMaxTableOrder);
    std::vector<Phase> values(static_cast<size_t>(n) * n * n, Phase::zero());
    std::vector<char> seen(values.size(), 0);
    for (const json& row : j.at("values")) {
      if (!row.is_array() || row.size() != 4 || !row[3].is_string())
        throw ValidationError("cocycle table rows must be [a, b, c, \"num/den\"]");
      int a = row[0].get<int>(), b = row[1].get<int>(), c = row[2].get<int>();
      if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n)
        throw IndexOutOfRange("cocycle table index out of range");
      size_t idx = (static_cast<size_t>(a) * n + b) * n + c;
      if (seen[idx])
        throw ValidationError("duplicate cocycle table entry at (" + std::to_string(a) +
                              "," + std::to_string(b) + "," + std::to_string(c) + ")");
      seen[idx] = 1;
      values[idx] = Phase::parse(row[3].get<std::string>());
    }
    return check_three_cocycle(g, values);
  }
  throw UnknownFamily(type);
}

Subgroup parse_subgroup(const json& j, const FiniteGroup& g) {
  expect_object(j, "subgroup spec");
  expect_keys(j, {"elements"}, "subgroup spec");
  if (!j.contains("elements") || !j.at("elements").is_array())
    throw ValidationError("subgroup spec needs \"elements\" array");
  return Subgroup(g, j.at("elements").get<std::vector<int>>());
}

TwoCochain parse_cochain(const json& j, const ThreeCocycle& omega, const Subgroup& h) {
  expect_object(j, "cochain spec");
  std::string type = type_of(j, "cochain spec");
  std::vector<Phase> values(static_cast<size_t>(h.size()) * h.size(), Phase::zero());
  if (type == "trivial") {
    expect_keys(j, {"type"}, "trivial cochain spec");
  } else if (type == "table") {
    expect_keys(j, {"type", "values"}, "table cochain spec");
    if (!j.contains("values") || !j.at("values").is_array())
      throw ValidationError("table cochain spec needs \"values\" array");
    std::vector<char> seen(values.size(), 0);
    for (const json& row : j.at("values")) {
      if (!row.is_array() || row.size() != 3 || !row[2].is_string())
        throw ValidationError("cochain table rows must be [h1, h2, \"num/den\"]");
      int h1 = h.local_index(row[0].get<int>());
      int h2 = h.local_index(row[1].get<int>());
      size_t idx = static_cast<size_t>(h1) * h.size() + h2;
      if (seen[idx])
        throw ValidationError("duplicate cochain table entry at (" +
                              std::to_string(row[0].get<int>()) + "," +
                              std::to_string(row[1].get<int>()) + ")");
      seen[idx] = 1;
      values[idx] = Phase::parse(row[2].get<std::string>());
    }
  } else {
    throw UnknownFamily(type);
  }
  return check_two_cochain(omega, h, values);
}

namespace {

std::uint64_t get_u64(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw ValidationError("\"" + key + "\" must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

const std::set<std::string> kCommands = {"check", "dim", "orbits",
                                         "matrices", "image", "verify"};

}  // namespace

Job build_job(const json& file, const CliOverrides& cli) {
  expect_object(file, "job file");
  expect_keys(file,
              {"group", "cocycle", "boundary", "boundaries", "command", "n", "cap",
               "max_tuples", "oracle", "threads", "out"},
              "job file");
  if (!file.contains("group")) throw ValidationError("job file needs \"group\"");

  Job job;
  job.group = std::make_unique<FiniteGroup>(parse_group(file.at("group")));
  job.omega = std::make_unique<ThreeCocycle>(
      file.contains("cocycle") ? parse_cocycle(file.at("cocycle"), *job.group)
                               : ThreeCocycle::trivial(*job.group));

  if (file.contains("boundary") && file.contains("boundaries"))
    throw ValidationError("job file has both \"boundary\" and \"boundaries\"");
  std::vector<json> boundary_specs;
  if (file.contains("boundary")) boundary_specs.push_back(file.at("boundary"));
  if (file.contains("boundaries")) {
    if (!file.at("boundaries").is_array())
      throw ValidationError("\"boundaries\" must be an array");
    for (const json& b : file.at("boundaries")) boundary_specs.push_back(b);
  }
  for (const json& b : boundary_specs) {
    expect_object(b, "boundary spec");
    expect_keys(b, {"subgroup", "gamma"}, "boundary spec");
    if (!b.contains("subgroup")) throw ValidationError("boundary spec needs \"subgroup\"");
    Subgroup h = parse_subgroup(b.at("subgroup"), *job.group);
    TwoCochain gamma = b.contains("gamma")
                           ? parse_cochain(b.at("gamma"), *job.omega, h)
                           : check_two_cochain(*job.omega, h,
                                               std::vector<Phase>(
                                                   static_cast<size_t>(h.size()) * h.size(),
                                                   Phase::zero()));
    job.boundaries.push_back(
        std::make_unique<LagrangianData>(*job.group, *job.omega, h, gamma));
  }

  if (file.contains("command")) {
    std::string c = file.at("command").get<std::string>();
    if (!kCommands.count(c)) throw ValidationError("unknown command \"" + c + "\"");
    job.command = c;
  }
  if (file.contains("n")) job.n = get_int(file, "n", "job file");
  if (file.contains("cap")) job.cap = get_u64(file, "cap");
  if (file.contains("max_tuples")) job.max_tuples = get_u64(file, "max_tuples");
  if (file.contains("oracle")) {
    if (!file.at("oracle").is_boolean())
      throw ValidationError("\"oracle\" must be a boolean");
    job.oracle = file.at("oracle").get<bool>();
  }
  if (file.contains("threads")) job.threads = get_int(file, "threads", "job file");
  if (file.contains("out")) job.out = file.at("out").get<std::string>();

  if (cli.command) {
    if (!kCommands.count(*cli.command))
      throw ValidationError("unknown command \"" + *cli.command + "\"");
    job.command = *cli.command;
  }
  if (cli.n) job.n = *cli.n;
  if (cli.cap) job.cap = *cli.cap;
  if (cli.max_tuples) job.max_tuples = *cli.max_tuples;
  if (cli.oracle) job.oracle = *cli.oracle;
  if (cli.threads) job.threads = *cli.threads;
  if (cli.out) job.out = *cli.out;

  if (job.command.empty())
    throw ValidationError("no command given (argument or \"command\" in the job file)");
  if (job.n < 1 || job.n > 16) throw ValidationError("n must be in [1,16]");
  if (job.threads < 1 || job.threads > 256)
    throw ValidationError("threads must be in [1,256]");
  return job;
}

std::string phase_string(const Phase& q) { return q.str(); }

std::string symbolic_entry(const Phase& q) {
  if (q == Phase::zero()) return "1";
  if (q == Phase::of(1, 2)) return "-1";
  if (q == Phase::of(1, 4)) return "i";
  if (q == Phase::of(3, 4)) return "-i";
  return "e(" + q.str() + ")";
}

namespace {

ojson matrix_json(const MonomialMatrix& m) {
  ojson g;
  g["perm"] = m.perm;
  std::vector<std::string> phases;
  phases.reserve(m.phases.size());
  for (const Phase& q : m.phases) phases.push_back(phase_string(q));
  g["phases"] = phases;
  return g;
}

}  // namespace

ojson braid_rep_json(const BraidRep& rep) {
  ojson out;
  out["dim"] = rep.dim;
  out["generators"] = ojson::array();
  for (const auto& m : rep.generators) out["generators"].push_back(matrix_json(m));
  out["basis"] = rep.basis;
  return out;
}

ojson pure_braid_rep_json(const PureBraidRep& rep) {
  ojson out;
  out["dim"] = rep.dim;
  out["pairs"] = ojson::array();
  for (auto [i, j] : rep.pairs) out["pairs"].push_back(std::vector<int>{i, j});
  out["generators"] = ojson::array();
  for (const auto& m : rep.matrices) out["generators"].push_back(matrix_json(m));
  out["basis"] = rep.basis;
  return out;
}

ojson orbits_json(const TupleSpace& s) {
  const OrbitTable& t = s.orbit_table();
  ojson out = ojson::array();
  std::vector<int> digits(s.n());
  for (int o = 0; o < t.num_orbits(); ++o) {
    s.decode(s.graded_id(t.rep_index[o]), digits);
    ojson row;
    row["rep"] = digits;
    row["size"] = t.orbit_size[o];
    row["regular"] = static_cast<bool>(t.regular[o]);
    out.push_back(row);
  }
  return out;
}

std::string matrices_csv(const std::vector<std::vector<int>>& basis,
                         const std::vector<MonomialMatrix>& generators,
                         const std::vector<std::string>& names) {
  std::string csv;
  for (size_t j = 0; j < basis.size(); ++j) {
    csv += "# basis " + std::to_string(j) + ":";
    for (int x : basis[j]) csv += " " + std::to_string(x);
    csv += "\n";
  }
  for (size_t k = 0; k < generators.size(); ++k) {
    const MonomialMatrix& m = generators[k];
    csv += "# " + names[k] + "\n";
    for (int r = 0; r < m.dim; ++r) {
      for (int c = 0; c < m.dim; ++c) {
        if (c) csv += ",";
        csv += (m.perm[c] == r) ? symbolic_entry(m.phases[c]) : "0";
      }
      csv += "\n";
    }
  }
  return csv;
}

std::string json_text(const ojson& j) { return j.dump(2) + "\n"; }

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ValidationError("cannot open output file " + tmp);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw ValidationError("failed writing " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw ValidationError("failed moving output into place at " + path);
  }
}

}  // namespace gbbraid
