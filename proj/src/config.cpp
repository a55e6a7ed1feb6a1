#include "cdid/config.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace cdid {

std::vector<IterStep> default_iter_schedule() {
  return {{1.0, 0.9}, {0.35, 0.5}, {0.25, 0.4}};
}

void FilterConfig::validate() const {
  if (n1 == 0 || n2 == 0) throw std::invalid_argument("patch extents must be positive");
  if (step == 0) throw std::invalid_argument("step must be positive");
  if (search_window == 0 || search_window % 2 == 0) {
    throw std::invalid_argument("search_window must be a positive odd number");
  }
  if (j_max == 0) throw std::invalid_argument("j_max must be positive");
  if (!(eta > 0.0) || !std::isfinite(eta)) throw std::invalid_argument("eta must be positive");
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("sigma must be >= 0");
  for (const auto& s : iter_schedule) {
    if (!(s.alpha > 0.0) || !(s.delta > 0.0)) {
      throw std::invalid_argument("iteration schedule entries need alpha > 0 and delta > 0");
    }
  }
  if (match_signal != MatchSignal::Complex) {
    throw std::invalid_argument("amplitude/phase block matching is reserved but not implemented");
  }
  if (threads < 0) throw std::invalid_argument("threads must be >= 0");
}

std::string_view to_string(SparsityType s) {
  switch (s) {
    case SparsityType::ComplexDomain: return "complex";
    case SparsityType::ReIm: return "reim";
    case SparsityType::AmPhase: return "amphase";
  }
  return "?";
}

std::string_view to_string(ThresholdMode m) { return m == ThresholdMode::Hard ? "hard" : "soft"; }

std::string_view to_string(DeltaSemantics d) {
  return d == DeltaSemantics::EtaMultiplier ? "eta" : "absolute";
}

SparsityType parse_sparsity(std::string_view s) {
  if (s == "complex" || s == "cd") return SparsityType::ComplexDomain;
  if (s == "reim" || s == "imre") return SparsityType::ReIm;
  if (s == "amphase" || s == "pham") return SparsityType::AmPhase;
  throw std::invalid_argument("unknown sparsity type '" + std::string(s) + "'");
}

ThresholdMode parse_threshold_mode(std::string_view s) {
  if (s == "hard") return ThresholdMode::Hard;
  if (s == "soft") return ThresholdMode::Soft;
  throw std::invalid_argument("unknown threshold mode '" + std::string(s) + "'");
}

DeltaSemantics parse_delta_semantics(std::string_view s) {
  if (s == "eta") return DeltaSemantics::EtaMultiplier;
  if (s == "absolute") return DeltaSemantics::Absolute;
  throw std::invalid_argument("unknown delta semantics '" + std::string(s) + "'");
}

void to_json(nlohmann::json& j, const FilterConfig& cfg) {
  nlohmann::json schedule = nlohmann::json::array();
  for (const auto& s : cfg.iter_schedule) schedule.push_back({{"alpha", s.alpha}, {"delta", s.delta}});
  j = nlohmann::json{{"n1", cfg.n1},
                     {"n2", cfg.n2},
                     {"step", cfg.step},
                     {"search_window", cfg.search_window},
                     {"j_max", cfg.j_max},
                     {"sparsity", std::string(to_string(cfg.sparsity))},
                     {"threshold_mode", std::string(to_string(cfg.threshold_mode))},
                     {"eta", cfg.eta},
                     {"wiener", cfg.wiener},
                     {"sigma", cfg.sigma},
                     {"iter_schedule", schedule},
                     {"delta_semantics", std::string(to_string(cfg.delta_semantics))},
                     {"threads", cfg.threads}};
}

void from_json(const nlohmann::json& j, FilterConfig& cfg) {
  static const std::set<std::string> known = {
      "n1",    "n2",     "step",  "search_window", "j_max",           "sparsity", "threshold_mode",
      "eta",   "wiener", "sigma", "iter_schedule", "delta_semantics", "threads"};
  if (!j.is_object()) throw std::invalid_argument("filter config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) throw std::invalid_argument("unknown config key '" + key + "'");
  }
  if (j.contains("n1")) cfg.n1 = j.at("n1").get<std::size_t>();
  if (j.contains("n2")) cfg.n2 = j.at("n2").get<std::size_t>();
  if (j.contains("step")) cfg.step = j.at("step").get<std::size_t>();
  if (j.contains("search_window")) cfg.search_window = j.at("search_window").get<std::size_t>();
  if (j.contains("j_max")) cfg.j_max = j.at("j_max").get<std::size_t>();
  if (j.contains("sparsity")) cfg.sparsity = parse_sparsity(j.at("sparsity").get<std::string>());
  if (j.contains("threshold_mode")) {
    cfg.threshold_mode = parse_threshold_mode(j.at("threshold_mode").get<std::string>());
  }
  if (j.contains("eta")) cfg.eta = j.at("eta").get<double>();
  if (j.contains("wiener")) cfg.wiener = j.at("wiener").get<bool>();
  if (j.contains("sigma")) cfg.sigma = j.at("sigma").get<double>();
  if (j.contains("iter_schedule")) {
    cfg.iter_schedule.clear();
    for (const auto& s : j.at("iter_schedule")) {
      cfg.iter_schedule.push_back({s.at("alpha").get<double>(), s.at("delta").get<double>()});
    }
  }
  if (j.contains("delta_semantics")) {
    cfg.delta_semantics = parse_delta_semantics(j.at("delta_semantics").get<std::string>());
  }
  if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
}

}  // namespace cdid
