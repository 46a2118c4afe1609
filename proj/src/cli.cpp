// Copyright 2026 The gqt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gqt/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "gqt/json_io.hpp"

namespace gqt::cli {

namespace {

using json_io::Json;

struct Options {
  std::string spec_path;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  double tol = kStateTol;
  int n = -1;
  int dense_cap_flag = -1;
  int general_cap_flag = -1;
  // matrix
  std::string kind;
  // simulate
  std::string circuit_path;
  std::uint64_t input = 0;
  std::uint64_t shots = 0;
  // dhsp
  std::uint64_t d = 0;
  std::string samples = "perfect";
  std::uint64_t trials = 100;
  // haar
  std::string dump_path;
};

Json config_json(const std::string& command, const Options& o) {
  Json c{{"command", command},
         {"seed", o.seed},
         {"tol", o.tol},
         {"dense_cap", dense_cap()},
         {"general_check_cap", general_check_cap()},
         {"format", o.format}};
  if (!o.spec_path.empty()) c["spec"] = o.spec_path;
  if (o.n >= 0) c["n"] = o.n;
  return c;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + path + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_json_format(const Options& o, const char* command) {
  if (o.format != "json") {
    throw InvalidInput(std::string(command) + " supports --format json only");
  }
}

std::string spec_kind(const Json& spec) {
  if (spec.contains("kind")) return spec.at("kind").get<std::string>();
  if (spec.contains("variant")) return "rot";
  if (spec.contains("phi")) return "gqft";
  throw InvalidInput("cannot tell the spec kind: add a 'kind' field");
}

int spec_n(const Json& spec) {
  if (!spec.contains("n") || !spec.at("n").is_number_integer()) {
    throw InvalidInput("spec needs an integer 'n'");
  }
  return spec.at("n").get<int>();
}

int require_n(const Options& o, const std::optional<Json>& spec) {
  if (o.n >= 1) return o.n;
  if (spec) return spec_n(*spec);
  throw InvalidInput("--n is required");
}

// --- matrix ---------------------------------------------------------------

int cmd_matrix(const Options& o, std::ostream& out) {
  std::optional<Json> spec;
  if (!o.spec_path.empty()) spec = json_io::read_file(o.spec_path);
  std::optional<DenseUnitary> m;
  if (o.kind == "gqft") {
    if (!spec) throw InvalidInput("matrix --kind gqft needs --spec");
    m = gqft_dense(json_io::gqft_spec_from_json(*spec));
  } else if (o.kind == "rot1" || o.kind == "rot2") {
    if (!spec) throw InvalidInput("matrix --kind rot1/rot2 needs --spec");
    const RotSpec rs = json_io::rot_spec_from_json(*spec);
    m = o.kind == "rot1" ? rot1_dense(rs) : rot2_dense(rs);
  } else if (o.kind == "haar") {
    m = haar_matrix(require_n(o, spec)).p_unitary();
  } else if (o.kind == "dft") {
    m = dft_dense(require_n(o, spec));
  } else {
    throw InvalidInput("unknown matrix kind '" + o.kind + "'");
  }
  if (o.format == "csv") {
    emit(json_io::dense_to_csv(*m, o.kind), o.out_path, out);
    return kOk;
  }
  Json cfg = config_json("matrix", o);
  cfg["kind"] = o.kind;
  Json j{{"config", std::move(cfg)}, {"kind", o.kind}};
  const Json body = json_io::to_json(*m);
  for (const auto& [k, v] : body.items()) j[k] = v;
  emit(dump(j), o.out_path, out);
  return kOk;
}

// --- check-unitary ---------------------------------------------------------

int cmd_check(const Options& o, std::ostream& out) {
  require_json_format(o, "check-unitary");
  if (o.spec_path.empty()) throw InvalidInput("check-unitary needs --spec");
  const GqftSpec spec = json_io::gqft_spec_from_json(json_io::read_file(o.spec_path));
  const ValidityReport verdict = validate(spec);
  Json j{{"config", config_json("check-unitary", o)},
         {"n", spec.pm.n()},
         {"regime", regime_name(spec.regime)},
         {"valid", verdict.valid},
         {"report", json_io::to_json(verdict)},
         {"triangular", json_io::to_json(check_triangular(spec.pm))},
         {"unsigned_subsets", json_io::to_json(check_unsigned_subsets(spec.pm))}};
  if (spec.regime == Regime::kTriangular) {
    j["general"] = json_io::to_json(check_general(spec.pm));
  }
  if (spec.pm.n() <= dense_cap()) {
    const double err = phase_transform_matrix(spec.pm).unitarity_error();
    j["consistency_unitary"] = consistency_unitary(spec.pm, o.tol);
    j["numeric"] = {{"max_unitarity_error", err}, {"unitary", err < o.tol}};
  }
  emit(dump(j), o.out_path, out);
  return verdict.valid ? kOk : kValidityFailure;
}

// --- circuit / compare -----------------------------------------------------

struct Built {
  std::string kind;
  Circuit circuit;
  DenseUnitary formula;
  std::size_t gate_bound;
  std::string note;
};

Built build_from_spec(const Json& spec) {
  const std::string kind = spec_kind(spec);
  if (kind == "gqft") {
    const GqftSpec gs = json_io::gqft_spec_from_json(spec);
    return {kind, gqft_circuit(gs), gqft_dense(gs), gqft_gate_bound(gs), ""};
  }
  if (kind == "rot") {
    const RotSpec rs = json_io::rot_spec_from_json(spec);
    const std::size_t n = rs.n();
    const bool first = rs.variant() == RotVariant::kHadamardFirst;
    return {std::string(first ? "rot1" : "rot2"),
            first ? rot1_circuit(rs) : rot2_circuit(rs),
            first ? rot1_dense(rs) : rot2_dense(rs), n + n * (n - 1), ""};
  }
  if (kind == "toeplitz" || kind == "dft") {
    const int n = spec_n(spec);
    const std::size_t un = n;
    return {kind, dft_circuit(n), dft_dense(n), un * (un + 1) / 2 + 2 * un,
            "toeplitz phase matrix gives the bit-reversed DFT; the circuit "
            "appends floor(n/2) swaps to restore standard output order"};
  }
  throw InvalidInput("no circuit construction for spec kind '" + kind + "'");
}

int cmd_circuit(const Options& o, std::ostream& out) {
  require_json_format(o, "circuit");
  if (o.spec_path.empty()) throw InvalidInput("circuit needs --spec");
  const Json spec = json_io::read_file(o.spec_path);
  Circuit c(1);
  if (spec_kind(spec) == "haar_inverse") {
    c = haar_inverse_circuit(spec_n(spec), spec.at("i").get<int>());
  } else {
    c = build_from_spec(spec).circuit;
  }
  emit(dump(json_io::to_json(c)), o.out_path, out);
  return kOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  if (o.spec_path.empty()) throw InvalidInput("compare needs --spec");
  const Built b = build_from_spec(json_io::read_file(o.spec_path));
  const double diff =
      circuit_to_dense(b.circuit).matrix().max_abs_diff(b.formula.matrix());
  const bool pass = diff < o.tol && b.circuit.size() <= b.gate_bound;
  if (o.format == "csv") {
    std::ostringstream s;
    s << "kind,n,max_abs_diff,gate_count,gate_bound,pass\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", diff);
    s << b.kind << ',' << b.circuit.n() << ',' << buf << ',' << b.circuit.size()
      << ',' << b.gate_bound << ',' << (pass ? "true" : "false") << '\n';
    emit(s.str(), o.out_path, out);
  } else {
    Json j{{"config", config_json("compare", o)},
           {"kind", b.kind},
           {"n", b.circuit.n()},
           {"max_abs_diff", diff},
           {"gate_count", b.circuit.size()},
           {"gate_bound", b.gate_bound},
           {"pass", pass}};
    if (!b.note.empty()) j["note"] = b.note;
    emit(dump(j), o.out_path, out);
  }
  return pass ? kOk : kValidityFailure;
}

// --- simulate --------------------------------------------------------------

int cmd_simulate(const Options& o, std::ostream& out) {
  require_json_format(o, "simulate");
  if (o.circuit_path.empty()) throw InvalidInput("simulate needs --circuit");
  const Circuit c = json_io::circuit_from_json(json_io::read_file(o.circuit_path));
  const QState result = apply_circuit(QState::basis(c.n(), o.input), c);
  Json cfg = config_json("simulate", o);
  cfg["circuit"] = o.circuit_path;
  cfg["input"] = o.input;
  cfg["shots"] = o.shots;
  Json j{{"config", std::move(cfg)},
         {"n", c.n()},
         {"input", o.input},
         {"gate_count", c.size()},
         {"amplitudes", json_io::amplitudes_to_json(result)}};
  if (o.shots > 0) j["histogram"] = json_io::to_json(measure_all(result, o.seed, o.shots));
  emit(dump(j), o.out_path, out);
  return kOk;
}

// --- dhsp ------------------------------------------------------------------

int cmd_dhsp(const Options& o, std::ostream& out) {
  if (o.n < 1) throw InvalidInput("dhsp needs --n");
  if (o.trials < 1) throw InvalidInput("--trials must be >= 1");
  require_dense(o.n, "dhsp");
  const SampleMode mode = SampleMode::parse(o.samples);
  const Rng root(o.seed);
  Rng sample_rng = root.split(1);
  const DhspInstance inst(o.n, o.d, draw_samples(o.n, mode, sample_rng));
  const DhspAnalysis a = analyze(inst);
  const RecoveryResult r = recover_d(inst, o.trials, root.split(2).seed());
  if (o.format == "csv") {
    std::ostringstream s;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "# n=%d d=%llu samples=%s trials=%llu seed=%llu "
                  "analytic_p=%.12g empirical_rate=%.12g d_hat=%llu\n",
                  o.n, static_cast<unsigned long long>(o.d), mode.to_string().c_str(),
                  static_cast<unsigned long long>(o.trials),
                  static_cast<unsigned long long>(o.seed), r.analytic_p,
                  r.empirical_rate, static_cast<unsigned long long>(r.d_hat));
    s << buf << "outcome,reversed,count\n";
    for (const auto& [y, count] : r.histogram) {
      s << y << ',' << reverse_bits(y, o.n) << ',' << count << '\n';
    }
    emit(s.str(), o.out_path, out);
    return kOk;
  }
  Json cfg = config_json("dhsp", o);
  cfg["d"] = o.d;
  cfg["samples"] = mode.to_string();
  cfg["trials"] = o.trials;
  Json j{{"config", std::move(cfg)},
         {"s", inst.s()},
         {"phi", json_io::to_json(a.phi)["phi"]},
         {"lambda", a.lambda},
         {"f", a.f},
         {"analytic_p", r.analytic_p},
         {"empirical_rate", r.empirical_rate},
         {"d_hat", r.d_hat},
         {"recovered", r.d_hat == o.d},
         {"histogram", json_io::to_json(r.histogram)}};
  emit(dump(j), o.out_path, out);
  return kOk;
}

// --- haar ------------------------------------------------------------------

int cmd_haar(const Options& o, std::ostream& out) {
  if (o.n < 1) throw InvalidInput("haar needs --n");
  const DenseUnitary p = haar_matrix(o.n).p_unitary();
  const std::string path = o.dump_path.empty() ? o.out_path : o.dump_path;
  if (o.format == "csv") {
    emit(json_io::dense_to_csv(p, "haar"), path, out);
    return kOk;
  }
  Json j{{"config", config_json("haar", o)}, {"kind", "haar"}};
  const Json body = json_io::to_json(p);
  for (const auto& [k, v] : body.items()) j[k] = v;
  emit(dump(j), path, out);
  return kOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out_path, "Write the report to this file");
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--seed", o.seed, "RNG seed (default 2014)");
  sub->add_option("--tol", o.tol, "Comparison tolerance (default 1e-9)");
  sub->add_option("--dense-cap", o.dense_cap_flag,
                  "Largest n for dense matrices (default 12, env GQT_DENSE_CAP)");
  sub->add_option("--general-cap", o.general_cap_flag,
                  "Largest n for the general unitarity check (default 16)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"gqt: generalized quantum Fourier, rotation and Haar transforms"};
  app.name("gqt");
  app.require_subcommand(1);
  Options o;

  auto* matrix = app.add_subcommand("matrix", "Dump a transform as a dense matrix");
  matrix->add_option("--kind", o.kind, "gqft | rot1 | rot2 | haar | dft")
      ->required()
      ->check(CLI::IsMember({"gqft", "rot1", "rot2", "haar", "dft"}));
  matrix->add_option("--spec", o.spec_path, "Spec file (gqft, rot1, rot2)");
  matrix->add_option("--n", o.n, "Qubit count (haar, dft)");

  auto* check = app.add_subcommand("check-unitary", "Validate a phase matrix");
  check->add_option("--spec", o.spec_path, "Phase matrix JSON")->required();

  auto* simulate = app.add_subcommand("simulate", "Apply a circuit dump to a basis state");
  simulate->add_option("--circuit", o.circuit_path, "Circuit JSON")->required();
  simulate->add_option("--input", o.input, "Input basis index");
  simulate->add_option("--shots", o.shots, "Measurement shots (0: none)");

  auto* circuit = app.add_subcommand("circuit", "Emit the gate-level circuit of a spec");
  circuit->add_option("--spec", o.spec_path, "Spec file")->required();

  auto* compare = app.add_subcommand("compare", "Compare circuit and formula matrices");
  compare->add_option("--spec", o.spec_path, "Spec file")->required();

  auto* dhsp = app.add_subcommand("dhsp", "Run a dihedral hidden subgroup experiment");
  dhsp->add_option("--n", o.n, "Qubit count")->required();
  dhsp->add_option("--d", o.d, "Secret d")->required();
  dhsp->add_option("--samples", o.samples, "perfect | random | mixed:<k>");
  dhsp->add_option("--trials", o.trials, "Measurement trials (default 100)");

  auto* haar = app.add_subcommand("haar", "Dump the Haar transform P_{2^n}");
  haar->add_option("--n", o.n, "Qubit count")->required();
  haar->add_option("--dump", o.dump_path, "Write the matrix JSON here");

  for (CLI::App* sub : {matrix, check, simulate, circuit, compare, dhsp, haar}) {
    add_common(sub, o);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  const int saved_dense = dense_cap();
  const int saved_general = general_check_cap();
  try {
    if (const char* env = std::getenv("GQT_DENSE_CAP")) {
      try {
        set_dense_cap(std::stoi(env));
      } catch (const std::logic_error&) {
        throw InvalidInput(std::string("GQT_DENSE_CAP is not an integer: ") + env);
      }
    }
    if (o.dense_cap_flag >= 0) set_dense_cap(o.dense_cap_flag);
    if (o.general_cap_flag >= 0) set_general_check_cap(o.general_cap_flag);

    int code = kOk;
    if (*matrix) code = cmd_matrix(o, out);
    else if (*check) code = cmd_check(o, out);
    else if (*simulate) code = cmd_simulate(o, out);
    else if (*circuit) code = cmd_circuit(o, out);
    else if (*compare) code = cmd_compare(o, out);
    else if (*dhsp) code = cmd_dhsp(o, out);
    else if (*haar) code = cmd_haar(o, out);
    set_dense_cap(saved_dense);
    set_general_check_cap(saved_general);
    return code;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << "\n";
    out << dump(Json{{"error", e.what()}, {"report", json_io::to_json(e.report())}});
    set_dense_cap(saved_dense);
    set_general_check_cap(saved_general);
    return kValidityFailure;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    set_dense_cap(saved_dense);
    set_general_check_cap(saved_general);
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    set_dense_cap(saved_dense);
    set_general_check_cap(saved_general);
    return kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    set_dense_cap(saved_dense);
    set_general_check_cap(saved_general);
    return kInvalidInput;
  }
}

}  // namespace gqt::cli
