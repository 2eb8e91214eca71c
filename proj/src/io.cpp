#include "gtsprd/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gtsprd {

using json = nlohmann::json;

template <Scalar T>
json route_to_json(const Route<T>& route) {
  return {{"side", to_string(route.side)}, {"lo", route.lo},         {"hi", route.hi},
          {"dispatch", route.dispatch},    {"duration", route.duration}, {"deliveries", route.deliveries}};
}

template <Scalar T>
json solution_to_json(const Solution<T>& sol) {
  json routes = json::array();
  for (const auto& r : sol.routes) routes.push_back(route_to_json(r));
  return {{"objective", to_string(sol.objective)}, {"value", sol.value}, {"routes", std::move(routes)}};
}

namespace {

template <Scalar T>
T scalar_of(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) throw std::invalid_argument(std::string("missing number '") + key + "'");
  if constexpr (std::same_as<T, std::int64_t>) {
    return to_scalar<T>(j[key].get<double>());
  } else {
    return j[key].get<double>();
  }
}

}  // namespace

template <Scalar T>
Solution<T> solution_from_json(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("solution document is not an object");
  Solution<T> sol;
  const std::string objective = doc.value("objective", std::string("time"));
  if (objective == "time") {
    sol.objective = Objective::Time;
  } else if (objective == "distance") {
    sol.objective = Objective::Distance;
  } else {
    throw std::invalid_argument("unknown objective '" + objective + "'");
  }
  sol.value = scalar_of<T>(doc, "value");
  if (!doc.contains("routes") || !doc["routes"].is_array()) throw std::invalid_argument("missing 'routes' array");
  for (const auto& jr : doc["routes"]) {
    Route<T> r;
    const std::string side = jr.value("side", std::string());
    if (side != "left" && side != "right") throw std::invalid_argument("route side must be 'left' or 'right'");
    r.side = side == "left" ? Side::Left : Side::Right;
    r.lo = jr.at("lo").get<std::size_t>();
    r.hi = jr.at("hi").get<std::size_t>();
    r.dispatch = scalar_of<T>(jr, "dispatch");
    r.duration = scalar_of<T>(jr, "duration");
    if (jr.contains("deliveries")) r.deliveries = jr["deliveries"].get<std::vector<Label>>();
    sol.routes.push_back(std::move(r));
  }
  return sol;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

template json route_to_json(const Route<std::int64_t>&);
template json route_to_json(const Route<double>&);
template json solution_to_json(const Solution<std::int64_t>&);
template json solution_to_json(const Solution<double>&);
template Solution<std::int64_t> solution_from_json<std::int64_t>(const json&);
template Solution<double> solution_from_json<double>(const json&);

}  // namespace gtsprd
