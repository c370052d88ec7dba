#pragma once

#include <string>

#include "faircut/forest.hpp"

namespace faircut {

/// Versioned JSON model document. Doubles are written in shortest
/// round-trip decimal form, so from-JSON models reproduce scores
/// bit-exactly.
std::string model_to_json(const ForestModel& model);

/// Inverse of model_to_json. Throws DataError on malformed documents or an
/// unsupported format version.
ForestModel model_from_json(const std::string& text);

void save_model(const ForestModel& model, const std::string& path);
ForestModel load_model(const std::string& path);

}  // namespace faircut
