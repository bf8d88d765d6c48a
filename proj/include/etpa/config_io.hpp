#ifndef ETPA_CONFIG_IO_HPP
#define ETPA_CONFIG_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "etpa/errors.hpp"
#include "etpa/level_model.hpp"

namespace etpa {

namespace detail {

inline int line_of_byte(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

inline double require_number(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number())
    throw config_error("config: " + path + ": expected a number");
  return j.get<double>();
}

inline complexd require_complex(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw config_error("config: " + path + ": expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace detail

// Absorber configuration, JSON:
//   { "omega_g": ..., "omega_f": ..., "sigma_tp": ... (optional, default 1.0),
//     "j_q": ... (optional, alternative to sigma_tp),
//     "levels": [ { "omega_m": ..., "d_gm": [re, im], "d_mf": [re, im] }, ... ] }
inline absorber_spec parse_absorber_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw config_error("config: parse error at line " +
                       std::to_string(detail::line_of_byte(text, e.byte)) + ": " +
                       e.what());
  }
  if (!j.is_object()) throw config_error("config: top level must be an object");

  absorber_spec spec;
  if (!j.contains("omega_g")) throw config_error("config: missing key omega_g");
  if (!j.contains("omega_f")) throw config_error("config: missing key omega_f");
  if (!j.contains("levels")) throw config_error("config: missing key levels");
  spec.omega_g = detail::require_number(j["omega_g"], "omega_g");
  spec.omega_f = detail::require_number(j["omega_f"], "omega_f");
  if (!j["levels"].is_array() || j["levels"].empty())
    throw config_error("config: levels: expected a non-empty array");
  for (std::size_t i = 0; i < j["levels"].size(); ++i) {
    const auto& jl = j["levels"][i];
    const std::string path = "levels[" + std::to_string(i) + "]";
    if (!jl.is_object()) throw config_error("config: " + path + ": expected an object");
    intermediate_level lv;
    if (!jl.contains("omega_m"))
      throw config_error("config: " + path + ": missing key omega_m");
    lv.omega_m = detail::require_number(jl["omega_m"], path + ".omega_m");
    if (!jl.contains("d_gm"))
      throw config_error("config: " + path + ": missing key d_gm");
    lv.d_gm = detail::require_complex(jl["d_gm"], path + ".d_gm");
    if (!jl.contains("d_mf"))
      throw config_error("config: " + path + ": missing key d_mf");
    lv.d_mf = detail::require_complex(jl["d_mf"], path + ".d_mf");
    spec.levels.push_back(lv);
  }

  if (j.contains("sigma_tp") && j.contains("j_q"))
    throw config_error("config: sigma_tp and j_q are mutually exclusive");
  if (j.contains("sigma_tp"))
    spec.sigma_tp = detail::require_number(j["sigma_tp"], "sigma_tp");
  else if (j.contains("j_q"))
    spec.sigma_tp = sigma_tp_from_jq(spec, detail::require_number(j["j_q"], "j_q"));

  try {
    spec.validate();
  } catch (const error& e) {
    throw config_error(std::string("config: ") + e.what());
  }
  return spec;
}

inline absorber_spec load_absorber_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_absorber_config(ss.str());
}

}  // namespace etpa

#endif
