#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdl/biped.hpp"
#include "pdl/control_affine.hpp"
#include "pdl/gait.hpp"

namespace pdl {

/// One `key = value` line of a parameter file.
struct KeyValue {
  std::string key;
  std::string value;
  int line = 0;
};

/// Parses `key = value` lines. `#` starts a comment, blank lines are skipped.
/// Duplicate keys and malformed lines raise ConfigError naming source:line.
std::vector<KeyValue> parse_key_values(const std::string& text, const std::string& source);

/// Biped parameter file. Starts from BipedParameters::default_walker().
/// Keys: gravity, inertia_scale, actuation (full | under), and
/// <link>.<mass|length|com|inertia> where <link> is one of stance_tibia,
/// stance_femur, torso, swing_femur, swing_tibia, or tibia / femur for both legs.
BipedParameters parse_biped_parameters(const std::string& text, const std::string& source);
BipedParameters load_biped_parameters(const std::filesystem::path& path);
std::string format_biped_parameters(const BipedParameters& p);

/// Pendulum parameter file with keys mass, length, damping, gravity.
PendulumParameters parse_pendulum_parameters(const std::string& text, const std::string& source);
PendulumParameters load_pendulum_parameters(const std::filesystem::path& path);
std::string format_pendulum_parameters(const PendulumParameters& p);

/// Gait fixture: Bezier outputs, PD gains and phasing.
struct GaitFixture {
  GaitOutputs outputs;
  double d_hip_plus = 0.0;
  double d_hip_minus = 0.0;
};

/// Fields: bezier (4 rows), kp and kd (scalar, 4-vector diagonal or 4x4),
/// d_hip_plus, d_hip_minus, phase_rate, ankle_gain, optional initial_q (ignored).
GaitFixture parse_gait(const nlohmann::json& j, const std::string& source);
GaitFixture load_gait(const std::filesystem::path& path);

/// Target stone: absolute horizontal position of its center, measured from the
/// initial stance foot, and its width.
struct Stone {
  double x = 0.0;
  double width = 0.0;
};

/// {"stones": [{"x": ..., "width": ...}, ...]}
std::vector<Stone> parse_stones(const nlohmann::json& j, const std::string& source);
std::vector<Stone> load_stones(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
nlohmann::json read_json_file(const std::filesystem::path& path);

/// Writes to `path.tmp` and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace pdl
