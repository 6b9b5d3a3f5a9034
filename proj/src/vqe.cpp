#include "gqe/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "gqe/rng.hpp"

namespace gqe {

VqeResult spsa_minimize(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const double> theta0, const SpsaConfig& cfg) {
  if (cfg.a <= 0 || cfg.c <= 0) {
    throw std::invalid_argument("spsa: a and c must be positive");
  }
  if (!(cfg.gamma > 0 && cfg.gamma < cfg.alpha && cfg.alpha <= 1)) {
    throw std::invalid_argument("spsa: need 0 < gamma < alpha <= 1");
  }
  const std::size_t dim = theta0.size();
  std::vector<double> theta(theta0.begin(), theta0.end());
  Rng rng(cfg.seed);

  VqeResult result;
  result.seed = cfg.seed;
  result.final_parameters = theta;
  if (cfg.iterations == 0) {
    const double e = objective(theta);
    result.energy_history = {e};
    result.best_energy = e;
    result.reported_energy = e;
    result.best_parameters = theta;
    result.evaluations = 1;
    return result;
  }

  result.energy_history.reserve(cfg.iterations);
  std::vector<double> delta(dim), plus(dim), minus(dim);
  double best = std::numeric_limits<double>::infinity();
  const double stability = cfg.stability_offset();
  for (int k = 0; k < cfg.iterations; ++k) {
    const double ak = cfg.a / std::pow(k + 1.0 + stability, cfg.alpha);
    const double ck = cfg.c / std::pow(k + 1.0, cfg.gamma);
    for (std::size_t i = 0; i < dim; ++i) {
      delta[i] = static_cast<double>(rng.sign());
      plus[i] = theta[i] + ck * delta[i];
      minus[i] = theta[i] - ck * delta[i];
    }
    const double f_plus = objective(plus);
    const double f_minus = objective(minus);
    const double diff = (f_plus - f_minus) / (2.0 * ck);
    for (std::size_t i = 0; i < dim; ++i) {
      theta[i] -= ak * diff * delta[i];  // 1/delta_i == delta_i for +-1
    }
    // The history tracks the iterate itself, not the perturbed probes; the
    // probes sit O(c_k^2) above the iterate and would bias every reported
    // energy.
    const double estimate = objective(theta);
    result.evaluations += 3;
    result.energy_history.push_back(estimate);
    if (estimate < best) {
      best = estimate;
      result.best_parameters = theta;
    }
  }
  result.final_parameters = theta;
  result.best_energy = best;
  const std::size_t tail =
      std::max<std::size_t>(1, result.energy_history.size() / 20);
  result.reported_energy =
      std::accumulate(result.energy_history.end() - tail,
                      result.energy_history.end(), 0.0) /
      static_cast<double>(tail);
  return result;
}

MitigationCalibration build_calibration(int qubits, const NoiseModel& noise,
                                        std::uint64_t shots,
                                        std::uint64_t seed) {
  if (qubits > 6) {
    throw std::invalid_argument("build_calibration: capped at 6 qubits");
  }
  const std::size_t dim = std::size_t{1} << qubits;
  MitigationCalibration cal;
  cal.qubits = qubits;
  cal.confusion = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t prepared = 0; prepared < dim; ++prepared) {
    Circuit c(qubits);
    for (int q = 0; q < qubits; ++q) {
      if ((prepared >> q) & 1) c.x(q);
    }
    const DensityMatrix rho = run_density(c, noise);
    const ShotCounts counts = sample_counts(
        QuantumState(rho), shots, &noise, Rng::derive(seed, 0x63616c, prepared));
    for (std::size_t j = 0; j < dim; ++j) {
      cal.confusion(j, prepared) = static_cast<double>(counts.counts[j]) /
                                   static_cast<double>(counts.shots);
    }
  }
  return cal;
}

std::vector<double> mitigate_counts(const ShotCounts& counts,
                                    const MitigationCalibration& cal) {
  const std::size_t dim = counts.counts.size();
  if (dim != static_cast<std::size_t>(cal.confusion.rows())) {
    throw std::invalid_argument("mitigate_counts: dimension mismatch");
  }
  Eigen::VectorXd freq(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    freq(i) = static_cast<double>(counts.counts[i]) /
              static_cast<double>(counts.shots);
  }
  std::vector<double> out(dim);
  const auto qr = cal.confusion.colPivHouseholderQr();
  if (qr.rank() < static_cast<Eigen::Index>(dim)) {
    // Singular calibration: fall back to the raw frequencies.
    for (std::size_t i = 0; i < dim; ++i) out[i] = freq(i);
    return out;
  }
  Eigen::VectorXd p = qr.solve(freq);
  double total = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    out[i] = std::max(0.0, p(i));
    total += out[i];
  }
  if (total > 0.0) {
    for (auto& v : out) v /= total;
  }
  return out;
}

CountsFilter make_mitigator(const MitigationCalibration& cal) {
  // The factorization is reused across every mitigated sample.
  auto qr = std::make_shared<Eigen::ColPivHouseholderQR<Eigen::MatrixXd>>(
      cal.confusion);
  const bool singular =
      qr->rank() < static_cast<Eigen::Index>(cal.confusion.rows());
  return [qr, singular](const ShotCounts& counts) {
    const std::size_t dim = counts.counts.size();
    Eigen::VectorXd freq(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      freq(i) = static_cast<double>(counts.counts[i]) /
                static_cast<double>(counts.shots);
    }
    std::vector<double> out(dim);
    if (singular) {
      for (std::size_t i = 0; i < dim; ++i) out[i] = freq(i);
      return out;
    }
    const Eigen::VectorXd p = qr->solve(freq);
    double total = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      out[i] = std::max(0.0, p(i));
      total += out[i];
    }
    if (total > 0.0) {
      for (auto& v : out) v /= total;
    }
    return out;
  };
}

ZneFit zne_extrapolate(std::span<const ZnePoint> points) {
  std::vector<int> levels;
  for (const auto& p : points) {
    if (p.sigma <= 0) throw std::invalid_argument("zne: sigma must be positive");
    if (std::find(levels.begin(), levels.end(), p.fold_level) == levels.end()) {
      levels.push_back(p.fold_level);
    }
  }
  if (levels.size() < 2) {
    throw std::invalid_argument("zne: need at least 2 distinct fold levels");
  }
  // Weighted least squares for E = intercept + slope * level.
  double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
  for (const auto& p : points) {
    const double w = 1.0 / (p.sigma * p.sigma);
    const double x = static_cast<double>(p.fold_level);
    sw += w;
    swx += w * x;
    swy += w * p.energy;
    swxx += w * x * x;
    swxy += w * x * p.energy;
  }
  const double det = sw * swxx - swx * swx;
  ZneFit fit;
  fit.points.assign(points.begin(), points.end());
  fit.intercept = (swxx * swy - swx * swxy) / det;
  fit.slope = (sw * swxy - swx * swy) / det;
  // Statistical error of the intercept from the weights, plus the rms
  // residual of the fit, combined in quadrature.
  const double var_intercept = swxx / det;
  double ss = 0.0;
  for (const auto& p : points) {
    const double r = p.energy - (fit.intercept + fit.slope * p.fold_level);
    ss += r * r;
  }
  fit.fit_rms = std::sqrt(ss / static_cast<double>(points.size()));
  fit.intercept_sigma = std::sqrt(var_intercept + fit.fit_rms * fit.fit_rms);
  return fit;
}

Ansatz make_ansatz(Encoding encoding, int n_states) {
  Ansatz a;
  if (encoding == Encoding::OneHot) {
    a.parameter_count = n_states - 1;
    a.qubit_count = n_states;
    a.build = [n_states](std::span<const double> theta) {
      return onehot_ansatz(n_states, theta);
    };
  } else if (encoding == Encoding::Gray) {
    const int eta = encoded_qubit_count(Encoding::Gray, n_states);
    a.parameter_count = (1 << eta) - 1;
    a.qubit_count = eta;
    a.build = [eta](std::span<const double> theta) {
      return gray_ansatz(eta, theta);
    };
  } else {
    throw std::invalid_argument("make_ansatz: no ansatz for this encoding");
  }
  return a;
}

VqeResult vqe_run(const PauliSum& h, const Ansatz& ansatz,
                  const VqeOptions& options) {
  if (ansatz.qubit_count != h.qubit_count()) {
    throw std::invalid_argument("vqe_run: ansatz/Hamiltonian qubit mismatch");
  }
  const std::uint64_t seed = options.spsa.seed;
  Rng init_rng(Rng::derive(seed, 0x696e6974));
  std::vector<double> theta0(ansatz.parameter_count);
  for (auto& t : theta0) t = init_rng.uniform(-M_PI / 2, M_PI / 2);

  MitigationCalibration calibration;
  CountsFilter mitigator;
  if (options.mitigate && options.backend.kind == BackendKind::Noisy) {
    calibration =
        build_calibration(h.qubit_count(), options.backend.noise,
                          options.calibration_shots, Rng::derive(seed, 0x6d6974));
    mitigator = make_mitigator(calibration);
  }

  long eval_counter = 0;
  auto sampled_energy = [&](const Circuit& circuit,
                            std::uint64_t eval_seed) -> double {
    SampledBackend backend;
    backend.shots = options.backend.shots;
    backend.noise = options.backend.kind == BackendKind::Noisy
                        ? &options.backend.noise
                        : nullptr;
    backend.mitigator = mitigator ? &mitigator : nullptr;
    return expectation_sampled(h, circuit, backend, eval_seed);
  };

  std::function<double(std::span<const double>)> objective;
  if (options.backend.kind == BackendKind::Statevector) {
    objective = [&](std::span<const double> theta) {
      const Statevector psi = run_statevector(ansatz.build(theta));
      return expectation_exact(h, QuantumState(psi));
    };
  } else if (options.zne_fold_levels.empty()) {
    objective = [&](std::span<const double> theta) {
      const std::uint64_t eval_seed = Rng::derive(seed, 0x6576616c, eval_counter);
      ++eval_counter;
      return sampled_energy(ansatz.build(theta), eval_seed);
    };
  } else {
    // Per-step zero-noise extrapolation: evaluate the expectation at every
    // fold level and feed the optimizer the linear intercept.
    objective = [&](std::span<const double> theta) {
      const Circuit base = ansatz.build(theta);
      std::vector<ZnePoint> points;
      points.reserve(options.zne_fold_levels.size());
      for (int level : options.zne_fold_levels) {
        if (level < 1 || level % 2 == 0) {
          throw std::invalid_argument("vqe_run: fold levels must be odd");
        }
        const std::uint64_t eval_seed =
            Rng::derive(seed, 0x7a6e65, eval_counter);
        ++eval_counter;
        const Circuit folded = fold_cnots(base, (level - 1) / 2);
        points.push_back({level, sampled_energy(folded, eval_seed), 1.0});
      }
      return zne_extrapolate(points).intercept;
    };
  }

  return spsa_minimize(objective, theta0, options.spsa);
}

}  // namespace gqe
