#pragma once

#include <string>

#include "incres/types.hpp"

namespace incres {

/// Environment variable naming the physical-model config file.
inline constexpr const char* kConfigEnvVar = "INCRES_CONFIG";

/// Parse a JSON model file with keys `mu`, `alpha`, `j2`.  Missing keys keep
/// their canonical defaults; a malformed file or invalid values throw.
PhysicalModel load_model(const std::string& path);

/// Model from $INCRES_CONFIG, or canonical units (mu = alpha = 1, j2 = 1e-3)
/// when the variable is unset or the file does not exist.
PhysicalModel model_from_env();

}  // namespace incres
