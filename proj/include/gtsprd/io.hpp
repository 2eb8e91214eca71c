#pragma once

#include <json.hpp>
#include <string>

#include "gtsprd/solution.hpp"

namespace gtsprd {

template <Scalar T>
nlohmann::json route_to_json(const Route<T>& route);

// {"objective", "value", "routes": [{"side", "lo", "hi", "dispatch", "duration", "deliveries"}]}
template <Scalar T>
nlohmann::json solution_to_json(const Solution<T>& sol);

// Reads the fields written by solution_to_json; extra keys are ignored, so a
// full run report is accepted. Throws std::invalid_argument on bad input.
template <Scalar T>
Solution<T> solution_from_json(const nlohmann::json& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace gtsprd
