#ifndef ZONEST_RUNNER_HPP_
#define ZONEST_RUNNER_HPP_

#include <filesystem>
#include <future>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "zonest/filter.hpp"
#include "zonest/io.hpp"
#include "zonest/rng.hpp"
#include "zonest/scenario.hpp"

namespace zonest {

/// Uniform sampling from a CZ by rejection over its interval hull. Plain
/// axis-aligned boxes bypass the membership LP.
class UniformSampler {
 public:
  explicit UniformSampler(const ConstrainedZonotope& Z)
      : set_(Z), hull_(interval_hull(Z)) {
    is_box_ = Z.is_unconstrained() && Z.G.cols() == Z.G.rows() &&
              Z.G.isDiagonal(0.0);
  }

  Eigen::VectorXd draw(RngStream& rng, long budget = 100000) const {
    const int n = hull_.size();
    const Eigen::VectorXd lo = hull_.lo(), diam = hull_.diam();
    Eigen::VectorXd z(n);
    for (long attempt = 0; attempt < budget; ++attempt) {
      for (int i = 0; i < n; ++i) z[i] = lo[i] + diam[i] * rng.uniform();
      if (is_box_ || membership(set_, z)) return z;
    }
    throw RejectionBudgetExceeded("UniformSampler: acceptance rate too low");
  }

 private:
  ConstrainedZonotope set_;
  IntervalVector hull_;
  bool is_box_ = false;
};

struct TruthData {
  std::vector<Eigen::VectorXd> states;        // k = 0 .. steps-1
  std::vector<Eigen::VectorXd> measurements;  // y_k at index k-1, k >= 1
};

/// Simulates one admissible trajectory: x0 uniform in X0 (or the scenario's
/// pinned x0_true), w_k and v_k uniform in W and V, y_k = mu(x_k) + v_k.
inline TruthData simulate_truth(const SystemModel& model, const Scenario& sc,
                                RngStream& rng) {
  const UniformSampler sample_x0(sc.X0), sample_w(sc.W), sample_v(sc.V);
  TruthData t;
  t.states.push_back(sc.x0_true ? *sc.x0_true : sample_x0.draw(rng));
  for (int k = 1; k < sc.steps; ++k) {
    const Eigen::VectorXd w = sample_w.draw(rng);
    Eigen::VectorXd z(model.nz());
    z << t.states.back(), w;
    t.states.push_back(eval_point(model.f, z));
    const Eigen::VectorXd v = sample_v.draw(rng);
    t.measurements.push_back(eval_point(model.mu, t.states.back()) + v);
  }
  return t;
}

/// Measurement-consistent set: {y_k} - V.
inline SetEnclosure observation_set(const ConstrainedZonotope& V,
                                    const Eigen::VectorXd& y) {
  const Eigen::MatrixXd neg = -Eigen::MatrixXd::Identity(V.dim(), V.dim());
  return SetEnclosure::single(shift(linear_map(neg, V), y));
}

using MethodRecords = std::map<MethodId, std::vector<StepRecord>>;

namespace detail {

constexpr MethodId kBaseMethods[] = {MethodId::rrsr, MethodId::d_rrsr,
                                     MethodId::d_zb, MethodId::d_cz};

inline std::set<MethodId> bases_needed(const std::vector<MethodId>& methods) {
  std::set<MethodId> bases;
  for (MethodId m : methods) {
    if (m == MethodId::comb)
      bases.insert(std::begin(kBaseMethods), std::end(kBaseMethods));
    else
      bases.insert(m);
  }
  return bases;
}

}  // namespace detail

/// Runs the recursive estimation loop for every base method the scenario
/// needs. Per method and step k, record k = 0 holds the initial enclosure,
/// k >= 1 one propagation + update against y_k. A COMB row is the
/// concatenation (intersection) of the four base methods' enclosures at the
/// same step; its wall time is the sum of theirs. A method whose update
/// came back empty continues from its previous enclosure.
inline MethodRecords run_filter(const SystemModel& model, const Scenario& sc,
                                const TruthData& truth, bool with_volumes) {
  with_volumes = with_volumes && sc.samples > 0;
  const std::set<MethodId> bases = detail::bases_needed(sc.methods);
  const bool want_comb =
      std::find(sc.methods.begin(), sc.methods.end(), MethodId::comb) !=
      sc.methods.end();

  MethodRecords records;
  std::map<MethodId, SetEnclosure> state;
  const SetEnclosure init = SetEnclosure::single(sc.X0);
  for (MethodId m : bases) {
    StepRecord r0;
    r0.k = 0;
    r0.method = m;
    r0.propagated = init;
    r0.updated = init;
    if (with_volumes) {
      const VolumeEstimate v = mc_volume(
          init, sc.samples, derive_seed(sc.seed, {0x76u, 0u, static_cast<std::uint64_t>(m)}));
      r0.volume = v.value;
      r0.volume_std_error = v.std_error;
    }
    records[m].push_back(std::move(r0));
    state[m] = init;
  }

  for (int k = 1; k < sc.steps; ++k) {
    const SetEnclosure Y = observation_set(sc.V, truth.measurements[static_cast<std::size_t>(k - 1)]);
    for (MethodId m : bases) {
      StepConfig cfg;
      cfg.family = sc.family;
      cfg.max_members = sc.max_members;
      cfg.volume_samples = with_volumes ? sc.samples : 0;
      cfg.volume_seed = derive_seed(
          sc.seed, {0x76u, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(m)});
      StepRecord rec = estimator_step(m, model, state[m], sc.W, Y, cfg);
      rec.k = k;
      if (rec.status == StepStatus::ok) state[m] = rec.updated;
      records[m].push_back(std::move(rec));
    }
  }

  if (want_comb) {
    std::vector<StepRecord> comb;
    for (int k = 0; k < sc.steps; ++k) {
      StepRecord rec;
      rec.k = k;
      rec.method = MethodId::comb;
      if (k == 0) {
        rec.propagated = init;
        rec.updated = init;
      } else {
        for (MethodId m : detail::kBaseMethods) {
          const StepRecord& base = records[m][static_cast<std::size_t>(k)];
          rec.propagated.members.insert(rec.propagated.members.end(),
                                        base.propagated.members.begin(),
                                        base.propagated.members.end());
          rec.updated.members.insert(rec.updated.members.end(),
                                     base.updated.members.begin(),
                                     base.updated.members.end());
          rec.wall_time_s += base.wall_time_s;
          if (base.status == StepStatus::empty) rec.status = StepStatus::empty;
        }
      }
      if (with_volumes && rec.status == StepStatus::ok) {
        try {
          const VolumeEstimate v = mc_volume(
              rec.updated, sc.samples,
              derive_seed(sc.seed, {0x76u, static_cast<std::uint64_t>(k),
                                    static_cast<std::uint64_t>(MethodId::comb)}));
          rec.volume = v.value;
          rec.volume_std_error = v.std_error;
        } catch (const EmptySetError&) {
          rec.status = StepStatus::empty;
        }
      }
      comb.push_back(std::move(rec));
    }
    records[MethodId::comb] = std::move(comb);
  }
  return records;
}

/// Per-method, per-step containment counts over independently re-simulated
/// trajectories: each trajectory generates its own measurement sequence,
/// the filter is re-run on it, and the true state is membership-tested
/// against each updated enclosure. COMB containment is the conjunction of
/// the four base methods' results (its member list is their concatenation).
inline std::map<MethodId, std::vector<double>> containment_analysis(
    const SystemModel& model, const Scenario& sc, long trajectories) {
  const std::set<MethodId> bases = detail::bases_needed(sc.methods);
  const bool want_comb =
      std::find(sc.methods.begin(), sc.methods.end(), MethodId::comb) !=
      sc.methods.end();

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const long chunk = (trajectories + hw - 1) / hw;

  using Counts = std::map<MethodId, std::vector<long>>;
  auto worker = [&](long t0, long t1) {
    Counts counts;
    for (MethodId m : sc.methods) counts[m].assign(static_cast<std::size_t>(sc.steps), 0);
    Scenario local = sc;
    local.samples = 0;
    for (long t = t0; t < t1; ++t) {
      RngStream rng(sc.seed, {0x7472616aULL, static_cast<std::uint64_t>(t)});
      const TruthData truth = simulate_truth(model, local, rng);
      const MethodRecords recs = run_filter(model, local, truth, false);
      for (int k = 0; k < sc.steps; ++k) {
        std::map<MethodId, bool> inside;
        for (MethodId m : bases)
          inside[m] = membership(recs.at(m)[static_cast<std::size_t>(k)].updated,
                                 truth.states[static_cast<std::size_t>(k)]);
        if (want_comb) {
          bool all = true;
          for (MethodId m : detail::kBaseMethods) all = all && inside[m];
          inside[MethodId::comb] = all;
        }
        for (MethodId m : sc.methods)
          if (inside[m]) ++counts[m][static_cast<std::size_t>(k)];
      }
    }
    return counts;
  };

  std::vector<std::future<Counts>> futures;
  for (unsigned w = 0; w < hw; ++w) {
    const long t0 = static_cast<long>(w) * chunk;
    const long t1 = std::min(trajectories, t0 + chunk);
    if (t0 >= t1) break;
    futures.push_back(std::async(std::launch::async, worker, t0, t1));
  }
  Counts total;
  for (MethodId m : sc.methods) total[m].assign(static_cast<std::size_t>(sc.steps), 0);
  for (auto& f : futures) {
    Counts part = f.get();
    for (MethodId m : sc.methods)
      for (int k = 0; k < sc.steps; ++k)
        total[m][static_cast<std::size_t>(k)] += part[m][static_cast<std::size_t>(k)];
  }

  std::map<MethodId, std::vector<double>> fractions;
  for (MethodId m : sc.methods) {
    fractions[m].assign(static_cast<std::size_t>(sc.steps), 0.0);
    for (int k = 0; k < sc.steps; ++k)
      fractions[m][static_cast<std::size_t>(k)] =
          trajectories > 0
              ? static_cast<double>(total[m][static_cast<std::size_t>(k)]) /
                    static_cast<double>(trajectories)
              : 0.0;
  }
  return fractions;
}

struct RunOutputs {
  TruthData truth;
  MethodRecords records;
  std::map<MethodId, std::vector<double>> containment;
};

inline RunOutputs run_scenario_core(const Scenario& sc, bool with_volumes,
                                    long containment_trajectories) {
  const SystemModel model = sc.validate();
  RunOutputs out;
  RngStream truth_rng(sc.seed, {0x747275ULL});
  out.truth = simulate_truth(model, sc, truth_rng);
  out.records = run_filter(model, sc, out.truth, with_volumes);
  out.containment =
      containment_analysis(model, sc, std::max(0L, containment_trajectories));
  return out;
}

/// Full scenario run: metrics.csv, per-step serialized sets and projection
/// polygons under out_dir. Deterministic for a fixed seed apart from the
/// wall_time_s column.
inline int run_scenario(const Scenario& sc, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(fs::path(out_dir) / "sets", ec);
  fs::create_directories(fs::path(out_dir) / "polygons", ec);
  if (ec) throw IoError("cannot create output directory: " + out_dir);

  const RunOutputs out = run_scenario_core(sc, true, sc.samples);

  std::string csv = "k,method,wall_time_s,mc_volume,mc_stderr,containment_fraction,status\n";
  for (int k = 0; k < sc.steps; ++k) {
    for (MethodId m : sc.methods) {
      const StepRecord& rec = out.records.at(m)[static_cast<std::size_t>(k)];
      csv += std::to_string(k) + "," + to_string(m) + "," +
             format_double(rec.wall_time_s) + "," + format_double(rec.volume) +
             "," + format_double(rec.volume_std_error) + "," +
             format_double(out.containment.at(m)[static_cast<std::size_t>(k)]) +
             "," + (rec.status == StepStatus::ok ? "ok" : "empty") + "\n";
    }
  }
  write_text_file((fs::path(out_dir) / "metrics.csv").string(), csv);

  for (MethodId m : sc.methods) {
    for (int k = 0; k < sc.steps; ++k) {
      const StepRecord& rec = out.records.at(m)[static_cast<std::size_t>(k)];
      const std::string stem = std::to_string(k) + "_" + to_string(m);
      write_text_file((fs::path(out_dir) / "sets" / (stem + ".json")).string(),
                      to_json(rec.updated).dump(1) + "\n");
      std::vector<Eigen::Vector2d> poly;
      if (rec.status == StepStatus::ok)
        poly = project_2d(rec.updated, 0, 1, sc.directions);
      write_polygon_csv((fs::path(out_dir) / "polygons" / (stem + ".csv")).string(), poly);
    }
  }
  return 0;
}

}  // namespace zonest

#endif  // ZONEST_RUNNER_HPP_
