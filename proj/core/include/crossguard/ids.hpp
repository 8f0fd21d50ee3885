#pragma once

#include <string>
#include <string_view>

namespace crossguard {

enum class Camera { drone, aw };
enum class Model { y5, y8 };
enum class ScenarioId { a, b };

/// One detection stream: a camera paired with a detector model.
struct ChannelId {
  Camera camera = Camera::drone;
  Model model = Model::y5;

  friend bool operator==(const ChannelId&, const ChannelId&) = default;
};

std::string to_string(Camera c);
std::string to_string(Model m);
std::string to_string(ScenarioId s);

/// "drone_Y5", "aw_Y8", ... — the label used in CSV reports and JSONL records.
std::string label(const ChannelId& id);

Camera parse_camera(std::string_view text);
Model parse_model(std::string_view text);
ScenarioId parse_scenario(std::string_view text);

}  // namespace crossguard
