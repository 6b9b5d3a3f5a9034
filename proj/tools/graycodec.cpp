#include <CLI11.hpp>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "gqe/encoder.hpp"
#include "gqe/evolve.hpp"
#include "gqe/graycode.hpp"
#include "gqe/rng.hpp"
#include "gqe/sim.hpp"
#include "gqe/vqe.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GRAYCODEC_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 12345;
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << payload;
  if (payload.empty() || payload.back() != '\n') out << "\n";
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto dots = token.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(token.substr(0, dots));
      const int hi = std::stoi(token.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else if (!token.empty()) {
      out.push_back(std::stoi(token));
    }
  }
  return out;
}

int paper_iterations(int n_states) {
  if (n_states <= 2) return 2000;
  if (n_states == 3) return 4000;
  if (n_states <= 8) return 5000;
  return 8000;
}

// ---------------------------------------------------------------- graycode

int cmd_graycode(int bits) {
  const gqe::GrayCode code = gqe::brgc(bits);
  std::cout << "bits " << bits << "\n";
  for (std::size_t a = 0; a < code.codewords.size(); ++a) {
    std::cout << code.codeword_string(a) << "\n";
  }
  std::cout << "transitions";
  for (int s : code.transitions) std::cout << " " << s;
  std::cout << "\n";
  return 0;
}

// ------------------------------------------------------------------ encode

struct EncodeArgs {
  std::string model = "deuteron";
  int n = 4;
  std::string encoding = "gray";
  double hbar_omega = gqe::kDeuteronHbarOmega;
  double v0 = gqe::kDeuteronV0;
  std::string output;
};

int cmd_encode(const EncodeArgs& args) {
  if (args.model != "deuteron") {
    throw std::invalid_argument("unknown model: " + args.model);
  }
  const auto h = gqe::deuteron_hamiltonian(args.n, args.hbar_omega, args.v0);
  const gqe::Encoding enc = gqe::encoding_from_string(args.encoding);
  const gqe::PauliSum sum = gqe::encode(enc, h);
  const auto groups = gqe::partition_commuting(sum);
  json out = {
      {"schema_version", kSchemaVersion},
      {"config",
       {{"model", args.model},
        {"n", args.n},
        {"encoding", args.encoding},
        {"hbar_omega", args.hbar_omega},
        {"v0", args.v0}}},
      {"pauli_sum", sum.to_json()},
      {"stats",
       {{"qubits", sum.qubit_count()},
        {"term_count",
         sum.terms().size() + (sum.identity() != 0.0 ? 1 : 0)},
        {"group_count", groups.size()},
        {"max_weight", sum.max_weight()},
        {"basis_rotations", gqe::measurement_rotation_count(groups)}}}};
  write_output(args.output, out.dump(2));
  return 0;
}

// --------------------------------------------------------------- resources

struct ResourcesArgs {
  std::string kind = "ansatz";
  std::string encoding = "all";
  std::string n_list = "2,4,8,16";
  std::string steps = "1,2,5,10,20,50,100";
  double time = 1.0;
  std::string format = "json";
  std::string output;
};

json ansatz_resource_row(gqe::Encoding enc, int n) {
  const gqe::Ansatz ansatz = gqe::make_ansatz(enc, n);
  const std::vector<double> theta(ansatz.parameter_count, 0.1);
  const gqe::Circuit circuit = ansatz.build(theta);
  const gqe::ResourceReport report = gqe::count_resources(circuit);
  const auto h = gqe::deuteron_hamiltonian(n);
  const gqe::PauliSum sum = gqe::encode(enc, h);
  const auto groups = gqe::partition_commuting(sum);
  const int rotations = gqe::measurement_rotation_count(groups);
  // One circuit execution per commuting group.
  const int copies = static_cast<int>(groups.size());
  return {{"encoding", gqe::to_string(enc)},
          {"n", n},
          {"qubits", circuit.qubit_count},
          {"parameters", ansatz.parameter_count},
          {"single_qubit_gates", report.single_qubit_gates},
          {"two_qubit_gates", report.two_qubit_gates},
          {"depth", report.depth},
          {"commuting_groups", copies},
          {"basis_rotations", rotations},
          {"vqe_single_qubit_gates", copies * report.single_qubit_gates},
          {"vqe_two_qubit_gates", copies * report.two_qubit_gates},
          {"vqe_total_gates",
           copies * (report.single_qubit_gates + report.two_qubit_gates) +
               rotations}};
}

json trotter_resource_row(gqe::Encoding enc, int n, double time, int steps) {
  const auto h = gqe::deuteron_hamiltonian(n);
  const gqe::PauliSum sum = gqe::encode(enc, h);
  const gqe::Circuit circuit =
      gqe::trotter_circuit(gqe::TrotterPlan::group_major(sum, time, steps));
  const gqe::ResourceReport report = gqe::count_resources(circuit);
  return {{"encoding", gqe::to_string(enc)},
          {"n", n},
          {"steps", steps},
          {"single_qubit_gates", report.single_qubit_gates},
          {"two_qubit_gates", report.two_qubit_gates},
          {"depth", report.depth}};
}

std::string rows_to_csv(const json& rows) {
  std::ostringstream os;
  if (rows.empty()) return "";
  std::vector<std::string> keys;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
    keys.push_back(it.key());
  }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    os << (i ? "," : "") << keys[i];
  }
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      os << (i ? "," : "");
      const auto& v = row.at(keys[i]);
      if (v.is_string()) {
        os << v.get<std::string>();
      } else {
        os << v.dump();
      }
    }
    os << "\n";
  }
  return os.str();
}

int cmd_resources(const ResourcesArgs& args) {
  std::vector<gqe::Encoding> encodings;
  if (args.encoding == "all") {
    encodings = {gqe::Encoding::OneHot, gqe::Encoding::Gray};
  } else {
    encodings = {gqe::encoding_from_string(args.encoding)};
  }
  json rows = json::array();
  for (int n : parse_int_list(args.n_list)) {
    for (const auto enc : encodings) {
      if (args.kind == "ansatz") {
        rows.push_back(ansatz_resource_row(enc, n));
      } else if (args.kind == "trotter") {
        for (int steps : parse_int_list(args.steps)) {
          rows.push_back(trotter_resource_row(enc, n, args.time, steps));
        }
      } else {
        throw std::invalid_argument("resources: kind must be ansatz or trotter");
      }
    }
  }
  if (args.format == "csv") {
    write_output(args.output, rows_to_csv(rows));
  } else {
    json out = {{"schema_version", kSchemaVersion},
                {"config",
                 {{"kind", args.kind},
                  {"encoding", args.encoding},
                  {"n_list", args.n_list},
                  {"steps", args.steps},
                  {"t", args.time}}},
                {"rows", rows}};
    write_output(args.output, out.dump(2));
  }
  return 0;
}

// --------------------------------------------------------------------- vqe

struct VqeArgs {
  std::string encoding = "gray";
  int n = 4;
  std::string backend = "statevector";
  std::uint64_t shots = 10000;
  int trials = 1;
  int iterations = 0;  // 0 = derived from N
  std::string noise_config;
  bool mitigate = false;
  std::string zne;  // fold level list, empty disables
  std::uint64_t seed = 0;
  int jobs = 0;  // 0 = hardware concurrency
  bool emit_history = false;
  std::string output;
};

int resolved_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int cmd_vqe(const VqeArgs& args) {
  const gqe::Encoding enc = gqe::encoding_from_string(args.encoding);
  const auto tri = gqe::deuteron_hamiltonian(args.n);
  const gqe::PauliSum h = gqe::encode(enc, tri);
  const gqe::Ansatz ansatz = gqe::make_ansatz(enc, args.n);

  gqe::VqeOptions options;
  options.spsa.iterations =
      args.iterations > 0 ? args.iterations : paper_iterations(args.n);
  if (args.backend == "statevector") {
    options.backend.kind = gqe::BackendKind::Statevector;
  } else if (args.backend == "qasm" || args.backend == "sampled") {
    options.backend.kind = gqe::BackendKind::Sampled;
  } else if (args.backend == "noisy") {
    options.backend.kind = gqe::BackendKind::Noisy;
    if (args.noise_config.empty()) {
      throw std::invalid_argument("vqe: --backend noisy requires --noise-config");
    }
  } else {
    throw std::invalid_argument("vqe: unknown backend " + args.backend);
  }
  if (!args.noise_config.empty()) {
    options.backend.noise = gqe::NoiseModel::from_file(args.noise_config);
  }
  options.backend.shots = args.shots;
  options.mitigate = args.mitigate;
  if (!args.zne.empty()) {
    for (int level : parse_int_list(args.zne)) {
      options.zne_fold_levels.push_back(level);
    }
  }

  const std::uint64_t master = args.seed ? args.seed : default_seed();
  std::vector<gqe::VqeResult> results(args.trials);
  std::atomic<int> next{0};
  auto worker = [&] {
    while (true) {
      const int trial = next.fetch_add(1);
      if (trial >= args.trials) break;
      gqe::VqeOptions opts = options;
      opts.spsa.seed = gqe::Rng::derive(master, 0x747269616c, trial);
      results[trial] = gqe::vqe_run(h, ansatz, opts);
    }
  };
  const int jobs = std::min(resolved_jobs(args.jobs), args.trials);
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  double mean = 0.0;
  for (const auto& r : results) mean += r.reported_energy;
  mean /= results.size();
  double var = 0.0;
  for (const auto& r : results) {
    var += (r.reported_energy - mean) * (r.reported_energy - mean);
  }
  const double stdev =
      results.size() > 1 ? std::sqrt(var / (results.size() - 1)) : 0.0;

  json trials = json::array();
  for (int i = 0; i < args.trials; ++i) {
    const auto& r = results[i];
    json record = {{"trial", i},
                   {"seed", r.seed},
                   {"best_energy", r.best_energy},
                   {"reported_energy", r.reported_energy},
                   {"evaluations", r.evaluations},
                   {"best_parameters", r.best_parameters},
                   {"final_parameters", r.final_parameters}};
    if (args.emit_history) record["history"] = r.energy_history;
    trials.push_back(std::move(record));
  }
  json out = {{"schema_version", kSchemaVersion},
              {"config",
               {{"encoding", args.encoding},
                {"n", args.n},
                {"backend", args.backend},
                {"shots", args.shots},
                {"trials", args.trials},
                {"iterations", options.spsa.iterations},
                {"noise_config", args.noise_config},
                {"mitigate", args.mitigate},
                {"zne", args.zne},
                {"seed", master}}},
              {"exact_ground_energy", tri.ground_energy()},
              {"trials", trials},
              {"summary",
               {{"mean", mean}, {"std", stdev}, {"count", args.trials}}}};
  write_output(args.output, out.dump(2));
  return 0;
}

// ------------------------------------------------------------------ evolve

struct EvolveArgs {
  std::string encoding = "gray";
  int n = 4;
  double time = 1.0;
  std::string steps = "default";
  std::string backend = "qasm";
  std::uint64_t shots = 10000;
  std::string noise_config;
  bool mitigate = false;
  std::uint64_t seed = 0;
  int jobs = 0;
  std::string format = "json";
  std::string output;
};

int cmd_evolve(const EvolveArgs& args) {
  gqe::SweepConfig config;
  config.encoding = gqe::encoding_from_string(args.encoding);
  config.n_states = args.n;
  config.time = args.time;
  config.step_list =
      args.steps == "default" ? gqe::default_step_grid() : parse_int_list(args.steps);
  if (args.backend == "noisy") {
    config.noisy = true;
    if (args.noise_config.empty()) {
      throw std::invalid_argument("evolve: --backend noisy requires --noise-config");
    }
    config.noise = gqe::NoiseModel::from_file(args.noise_config);
  } else if (args.backend != "qasm" && args.backend != "sampled") {
    throw std::invalid_argument("evolve: unknown backend " + args.backend);
  }
  config.mitigate = args.mitigate;
  config.shots = args.shots;
  config.seed = args.seed ? args.seed : default_seed();
  config.jobs = resolved_jobs(args.jobs);

  const auto records = gqe::trotter_sweep(config);
  const double plateau = gqe::decoherence_plateau(config);

  // Per-state probabilities: state n sits on its encoding's codeword.
  const int eta = gqe::encoded_qubit_count(config.encoding, config.n_states);
  std::vector<std::size_t> state_index(config.n_states);
  for (int n = 0; n < config.n_states; ++n) {
    if (config.encoding == gqe::Encoding::OneHot) {
      state_index[n] = std::size_t{1} << n;
    } else if (config.encoding == gqe::Encoding::Binary) {
      state_index[n] = static_cast<std::size_t>(n);
    } else {
      state_index[n] = gqe::brgc(eta).codewords[n];
    }
  }

  json rows = json::array();
  for (const auto& r : records) {
    json probs = json::array(), exact = json::array();
    for (int n = 0; n < config.n_states; ++n) {
      probs.push_back(r.sampled_probabilities[state_index[n]]);
      exact.push_back(r.exact_probabilities[state_index[n]]);
    }
    rows.push_back({{"steps", r.steps},
                    {"trace_distance", r.trace_distance},
                    {"state_probabilities", probs},
                    {"exact_state_probabilities", exact}});
  }

  if (args.format == "csv") {
    std::ostringstream os;
    os << "steps,trace_distance";
    for (int n = 0; n < config.n_states; ++n) os << ",p" << n;
    for (int n = 0; n < config.n_states; ++n) os << ",exact_p" << n;
    os << "\n";
    for (const auto& r : records) {
      os << r.steps << "," << json(r.trace_distance).dump();
      for (int n = 0; n < config.n_states; ++n) {
        os << "," << json(r.sampled_probabilities[state_index[n]]).dump();
      }
      for (int n = 0; n < config.n_states; ++n) {
        os << "," << json(r.exact_probabilities[state_index[n]]).dump();
      }
      os << "\n";
    }
    write_output(args.output, os.str());
  } else {
    json out = {{"schema_version", kSchemaVersion},
                {"config",
                 {{"encoding", args.encoding},
                  {"n", args.n},
                  {"t", args.time},
                  {"steps", args.steps},
                  {"backend", args.backend},
                  {"shots", args.shots},
                  {"noise_config", args.noise_config},
                  {"mitigate", args.mitigate},
                  {"seed", config.seed}}},
                {"plateau_reference", plateau},
                {"records", rows}};
    write_output(args.output, out.dump(2));
  }
  return 0;
}

// --------------------------------------------------------------------- zne

struct ZneArgs {
  std::string encoding = "gray";
  int n = 4;
  std::string folds = "1,3,5,7";
  int trials = 20;
  std::uint64_t shots = 10000;
  std::string noise_config;
  bool mitigate = false;
  std::uint64_t seed = 0;
  int jobs = 0;
  std::string output;
};

int cmd_zne(const ZneArgs& args) {
  if (args.noise_config.empty()) {
    throw std::invalid_argument("zne requires --noise-config");
  }
  const gqe::Encoding enc = gqe::encoding_from_string(args.encoding);
  const auto tri = gqe::deuteron_hamiltonian(args.n);
  const gqe::PauliSum h = gqe::encode(enc, tri);
  const gqe::Ansatz ansatz = gqe::make_ansatz(enc, args.n);
  const gqe::NoiseModel noise = gqe::NoiseModel::from_file(args.noise_config);
  const std::uint64_t master = args.seed ? args.seed : default_seed();

  // Optimal angles from a noiseless statevector VQE.
  gqe::VqeOptions sv_options;
  sv_options.backend.kind = gqe::BackendKind::Statevector;
  sv_options.spsa.iterations = paper_iterations(args.n);
  sv_options.spsa.seed = gqe::Rng::derive(master, 0x616e676c);
  const gqe::VqeResult sv = gqe::vqe_run(h, ansatz, sv_options);
  const gqe::Circuit base = ansatz.build(sv.best_parameters);

  gqe::MitigationCalibration calibration;
  gqe::CountsFilter mitigator;
  if (args.mitigate) {
    calibration = gqe::build_calibration(h.qubit_count(), noise, args.shots,
                                         gqe::Rng::derive(master, 0x6d697467));
    mitigator = gqe::make_mitigator(calibration);
  }

  const std::vector<int> folds = parse_int_list(args.folds);
  std::vector<std::vector<double>> energies(folds.size());
  for (std::size_t f = 0; f < folds.size(); ++f) {
    const gqe::Circuit folded = gqe::fold_cnots(base, (folds[f] - 1) / 2);
    energies[f].resize(args.trials);
    std::atomic<int> next{0};
    auto worker = [&] {
      while (true) {
        const int trial = next.fetch_add(1);
        if (trial >= args.trials) break;
        gqe::SampledBackend backend;
        backend.shots = args.shots;
        backend.noise = &noise;
        backend.mitigator = mitigator ? &mitigator : nullptr;
        energies[f][trial] = gqe::expectation_sampled(
            h, folded, backend, gqe::Rng::derive(master, 0x7a6e65 + f, trial));
      }
    };
    const int jobs = std::min(resolved_jobs(args.jobs), args.trials);
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<gqe::ZnePoint> points;
  json point_rows = json::array();
  for (std::size_t f = 0; f < folds.size(); ++f) {
    double mean = 0.0;
    for (double e : energies[f]) mean += e;
    mean /= energies[f].size();
    double var = 0.0;
    for (double e : energies[f]) var += (e - mean) * (e - mean);
    const double stdev = energies[f].size() > 1
                             ? std::sqrt(var / (energies[f].size() - 1))
                             : 1.0;
    points.push_back({folds[f], mean, stdev > 0 ? stdev : 1e-6});
    point_rows.push_back({{"fold_level", folds[f]},
                          {"mean", mean},
                          {"std", stdev},
                          {"energies", energies[f]}});
  }
  const gqe::ZneFit fit = gqe::zne_extrapolate(points);
  json out = {{"schema_version", kSchemaVersion},
              {"config",
               {{"encoding", args.encoding},
                {"n", args.n},
                {"folds", args.folds},
                {"trials", args.trials},
                {"shots", args.shots},
                {"noise_config", args.noise_config},
                {"mitigate", args.mitigate},
                {"seed", master}}},
              {"optimal_parameters", sv.best_parameters},
              {"statevector_energy", sv.reported_energy},
              {"exact_ground_energy", tri.ground_energy()},
              {"points", point_rows},
              {"fit",
               {{"intercept", fit.intercept},
                {"slope", fit.slope},
                {"uncertainty", fit.intercept_sigma},
                {"fit_rms", fit.fit_rms}}}};
  write_output(args.output, out.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gray-code / one-hot qubit encodings of tridiagonal "
               "Hamiltonians: encoding, VQE and Trotter experiments"};
  app.require_subcommand(1);

  int gray_bits = 3;
  auto* sub_gray = app.add_subcommand("graycode", "Print a binary-reflected Gray code");
  sub_gray->add_option("--bits", gray_bits, "Number of bits")->required();

  EncodeArgs encode_args;
  auto* sub_encode = app.add_subcommand("encode", "Encode a Hamiltonian as a Pauli sum");
  sub_encode->add_option("--model", encode_args.model, "Model (deuteron)");
  sub_encode->add_option("--n", encode_args.n, "Number of basis states")->required();
  sub_encode->add_option("--encoding", encode_args.encoding, "onehot|gray|binary")->required();
  sub_encode->add_option("--hbar-omega", encode_args.hbar_omega, "Oscillator parameter (MeV)");
  sub_encode->add_option("--v0", encode_args.v0, "Contact interaction strength (MeV)");
  sub_encode->add_option("--output,-o", encode_args.output, "Output file");

  ResourcesArgs res_args;
  auto* sub_res = app.add_subcommand("resources", "Gate counts and depth tables");
  sub_res->add_option("--kind", res_args.kind, "ansatz|trotter");
  sub_res->add_option("--encoding", res_args.encoding, "onehot|gray|binary|all");
  sub_res->add_option("--n", res_args.n_list, "Comma list / a..b of state counts");
  sub_res->add_option("--steps", res_args.steps, "Trotter step list");
  sub_res->add_option("--t", res_args.time, "Evolution time");
  sub_res->add_option("--format", res_args.format, "json|csv");
  sub_res->add_option("--output,-o", res_args.output, "Output file");

  VqeArgs vqe_args;
  auto* sub_vqe = app.add_subcommand("vqe", "Run VQE trials");
  sub_vqe->add_option("--encoding", vqe_args.encoding, "onehot|gray")->required();
  sub_vqe->add_option("--n", vqe_args.n, "Number of basis states")->required();
  sub_vqe->add_option("--backend", vqe_args.backend, "statevector|qasm|noisy");
  sub_vqe->add_option("--shots", vqe_args.shots, "Shots per group circuit");
  sub_vqe->add_option("--trials", vqe_args.trials, "Independent VQE runs");
  sub_vqe->add_option("--iterations", vqe_args.iterations, "SPSA iterations (0 = by N)");
  sub_vqe->add_option("--noise-config", vqe_args.noise_config, "Noise model JSON");
  sub_vqe->add_flag("--mitigate", vqe_args.mitigate, "Measurement error mitigation");
  sub_vqe->add_option("--zne", vqe_args.zne, "Fold levels, e.g. 1,3,5,7");
  sub_vqe->add_option("--seed", vqe_args.seed, "Master seed (0 = env/default)");
  sub_vqe->add_option("--jobs", vqe_args.jobs, "Parallel trials (0 = cores)");
  sub_vqe->add_flag("--emit-history", vqe_args.emit_history, "Include energy history");
  sub_vqe->add_option("--output,-o", vqe_args.output, "Output file");

  EvolveArgs evolve_args;
  auto* sub_evolve = app.add_subcommand("evolve", "Trotterized time evolution sweep");
  sub_evolve->add_option("--encoding", evolve_args.encoding, "onehot|gray")->required();
  sub_evolve->add_option("--n", evolve_args.n, "Number of basis states")->required();
  sub_evolve->add_option("--t", evolve_args.time, "Evolution time (MeV^-1)");
  sub_evolve->add_option("--steps", evolve_args.steps, "Step list or 'default'");
  sub_evolve->add_option("--backend", evolve_args.backend, "qasm|noisy");
  sub_evolve->add_option("--shots", evolve_args.shots, "Shots per measurement setting");
  sub_evolve->add_option("--noise-config", evolve_args.noise_config, "Noise model JSON");
  sub_evolve->add_flag("--mitigate", evolve_args.mitigate, "Measurement error mitigation");
  sub_evolve->add_option("--seed", evolve_args.seed, "Master seed (0 = env/default)");
  sub_evolve->add_option("--jobs", evolve_args.jobs, "Parallel sweep points (0 = cores)");
  sub_evolve->add_option("--format", evolve_args.format, "json|csv");
  sub_evolve->add_option("--output,-o", evolve_args.output, "Output file");

  ZneArgs zne_args;
  auto* sub_zne = app.add_subcommand("zne", "Zero-noise extrapolation at optimal angles");
  sub_zne->add_option("--encoding", zne_args.encoding, "onehot|gray")->required();
  sub_zne->add_option("--n", zne_args.n, "Number of basis states")->required();
  sub_zne->add_option("--folds", zne_args.folds, "Fold levels, e.g. 1,3,5,7");
  sub_zne->add_option("--trials", zne_args.trials, "Trials per fold level");
  sub_zne->add_option("--shots", zne_args.shots, "Shots per group circuit");
  sub_zne->add_option("--noise-config", zne_args.noise_config, "Noise model JSON")->required();
  sub_zne->add_flag("--mitigate", zne_args.mitigate, "Measurement error mitigation");
  sub_zne->add_option("--seed", zne_args.seed, "Master seed (0 = env/default)");
  sub_zne->add_option("--jobs", zne_args.jobs, "Parallel trials (0 = cores)");
  sub_zne->add_option("--output,-o", zne_args.output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sub_gray->parsed()) return cmd_graycode(gray_bits);
    if (sub_encode->parsed()) return cmd_encode(encode_args);
    if (sub_res->parsed()) return cmd_resources(res_args);
    if (sub_vqe->parsed()) return cmd_vqe(vqe_args);
    if (sub_evolve->parsed()) return cmd_evolve(evolve_args);
    if (sub_zne->parsed()) return cmd_zne(zne_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
