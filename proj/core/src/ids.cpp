#include "crossguard/ids.hpp"

#include "crossguard/errors.hpp"

namespace crossguard {

std::string to_string(Camera c) { return c == Camera::drone ? "drone" : "aw"; }

std::string to_string(Model m) { return m == Model::y5 ? "Y5" : "Y8"; }

std::string to_string(ScenarioId s) { return s == ScenarioId::a ? "A" : "B"; }

std::string label(const ChannelId& id) {
  return to_string(id.camera) + "_" + to_string(id.model);
}

Camera parse_camera(std::string_view text) {
  if (text == "drone") return Camera::drone;
  if (text == "aw") return Camera::aw;
  throw ConfigError("unknown camera '" + std::string(text) + "' (valid: drone, aw)");
}

Model parse_model(std::string_view text) {
  if (text == "Y5") return Model::y5;
  if (text == "Y8") return Model::y8;
  throw ConfigError("unknown model '" + std::string(text) + "' (valid: Y5, Y8)");
}

ScenarioId parse_scenario(std::string_view text) {
  if (text == "A") return ScenarioId::a;
  if (text == "B") return ScenarioId::b;
  throw ConfigError("unknown scenario '" + std::string(text) + "' (valid: A, B)");
}

}  // namespace crossguard
