#ifndef ZONEST_SCENARIO_HPP_
#define ZONEST_SCENARIO_HPP_

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zonest/filter.hpp"
#include "zonest/io.hpp"
#include "zonest/model.hpp"
#include "zonest/sets.hpp"

namespace zonest {

/// Builds a CZ from a set spec:
///   {"type":"box","lo":[..],"hi":[..]}
///   {"type":"zonotope","G":[[..]],"c":[..]}
///   {"type":"czonotope","G":..,"c":..,"A":..,"b":..}
///   {"type":"polytope","Ap":[[..]],"bp":[..]}   (must be bounded)
inline ConstrainedZonotope set_from_spec(const json& j) {
  const std::string type = j.value("type", "");
  if (type == "box")
    return ConstrainedZonotope::box(vector_from_json(j.at("lo")),
                                    vector_from_json(j.at("hi")));
  if (type == "polytope")
    return polytope_to_cz(
        HPolytope{matrix_from_json(j.at("Ap")), vector_from_json(j.at("bp"))});
  if (type == "zonotope" || type == "czonotope") return cz_from_json(j);
  throw ParseError("unknown set spec type: '" + type + "'");
}

inline FamilySpec family_from_string(const std::string& s, std::uint64_t seed) {
  if (s == "canonical") return FamilySpec::canonical();
  if (s == "exhaustive") return FamilySpec::exhaustive();
  const std::string prefix = "canonical+";
  if (s.rfind(prefix, 0) == 0) {
    const int extra = std::stoi(s.substr(prefix.size()));
    if (extra < 0) throw ParseError("bad family spec: " + s);
    return FamilySpec::canonical_plus_random(extra, seed);
  }
  throw ParseError("unknown family spec: '" + s + "'");
}

struct Scenario {
  std::string model_name;
  std::map<std::string, double> params;
  ConstrainedZonotope X0, W, V;
  int steps = 1;
  std::uint64_t seed = 0;
  std::vector<MethodId> methods;
  FamilySpec family = FamilySpec::canonical();
  long samples = 1000;
  int max_members = 8;
  int directions = 64;
  std::optional<Eigen::VectorXd> x0_true;

  static Scenario from_json(const json& j) {
    Scenario sc;
    try {
      sc.model_name = j.at("model").get<std::string>();
      if (j.contains("params"))
        for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
          sc.params[it.key()] = it.value().get<double>();
      if (j.contains("landmarks")) {
        const auto& lm = j.at("landmarks");
        for (std::size_t i = 0; i < lm.size(); ++i) {
          sc.params["sx" + std::to_string(i + 1)] = lm[i][0].get<double>();
          sc.params["sy" + std::to_string(i + 1)] = lm[i][1].get<double>();
        }
      }
      sc.X0 = set_from_spec(j.at("X0"));
      sc.W = set_from_spec(j.at("W"));
      sc.V = set_from_spec(j.at("V"));
      sc.steps = j.at("steps").get<int>();
      sc.seed = j.at("seed").get<std::uint64_t>();
      for (const auto& m : j.at("methods"))
        sc.methods.push_back(parse_method(m.get<std::string>()));
      sc.family = family_from_string(j.value("family", "canonical"), sc.seed);
      sc.samples = j.value("samples", 1000L);
      sc.max_members = j.value("max_members", 8);
      sc.directions = j.value("directions", 64);
      if (j.contains("x0_true")) sc.x0_true = vector_from_json(j.at("x0_true"));
    } catch (const json::exception& e) {
      throw ParseError(std::string("scenario parse error: ") + e.what());
    }
    if (sc.steps < 1) throw ParseError("scenario: steps must be >= 1");
    if (sc.methods.empty()) throw ParseError("scenario: no methods");
    return sc;
  }

  static Scenario load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open scenario file: " + path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ParseError(std::string("scenario JSON error: ") + e.what());
    }
    return from_json(j);
  }

  /// Builds the model and checks dimensional consistency.
  SystemModel validate() const {
    SystemModel model = make_model(model_name, params);
    if (X0.dim() != model.nx) throw ParseError("scenario: X0 dimension != nx");
    if (W.dim() != model.nw) throw ParseError("scenario: W dimension != nw");
    if (V.dim() != model.nmu) throw ParseError("scenario: V dimension != nmu");
    if (x0_true) {
      if (x0_true->size() != model.nx)
        throw ParseError("scenario: x0_true dimension != nx");
      if (!membership(X0, *x0_true))
        throw ParseError("scenario: x0_true is not in X0");
    }
    return model;
  }
};

}  // namespace zonest

#endif  // ZONEST_SCENARIO_HPP_
