#include "gtsprd/instance.hpp"

#include <algorithm>
#include <json.hpp>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace gtsprd {

using json = nlohmann::json;

const char* to_string(InstanceErrorKind kind) {
  switch (kind) {
    case InstanceErrorKind::MalformedDocument: return "MalformedDocument";
    case InstanceErrorKind::NotAPath: return "NotAPath";
    case InstanceErrorKind::UnknownDepot: return "UnknownDepot";
    case InstanceErrorKind::NegativeValue: return "NegativeValue";
  }
  return "?";
}

const char* to_string(Side side) { return side == Side::Left ? "left" : "right"; }

InstanceError::InstanceError(InstanceErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

namespace {

[[noreturn]] void fail(InstanceErrorKind kind, const std::string& what) { throw InstanceError(kind, what); }

struct Neighbor {
  Label to;
  double d;
};

using Adjacency = std::unordered_map<Label, std::vector<Neighbor>>;

Adjacency adjacency_of(const RawPathInstance& inst) {
  Adjacency adj;
  for (const auto& v : inst.vertices) adj[v.id];
  for (const auto& e : inst.edges) {
    adj[e.u].push_back({e.v, e.d});
    adj[e.v].push_back({e.u, e.d});
  }
  return adj;
}

double number_field(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(InstanceErrorKind::MalformedDocument, std::string(where) + " lacks '" + key + "'");
  if (!it->is_number()) fail(InstanceErrorKind::MalformedDocument, std::string(where) + "." + key + " is not a number");
  return it->get<double>();
}

Label id_field(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(InstanceErrorKind::MalformedDocument, std::string(where) + " lacks '" + key + "'");
  if (!it->is_number_integer()) fail(InstanceErrorKind::MalformedDocument, std::string(where) + "." + key + " is not an integer");
  return it->get<Label>();
}

}  // namespace

void validate_instance(const RawPathInstance& inst) {
  if (inst.vertices.empty()) fail(InstanceErrorKind::NotAPath, "instance has no vertices");

  std::unordered_set<Label> ids;
  for (const auto& v : inst.vertices) {
    if (!ids.insert(v.id).second) fail(InstanceErrorKind::MalformedDocument, "duplicate vertex id " + std::to_string(v.id));
  }
  if (!ids.count(inst.depot)) fail(InstanceErrorKind::UnknownDepot, "depot " + std::to_string(inst.depot) + " is not a vertex");

  for (const auto& v : inst.vertices) {
    if (v.id != inst.depot && !(v.release >= 0)) fail(InstanceErrorKind::NegativeValue, "release of vertex " + std::to_string(v.id));
  }
  for (const auto& e : inst.edges) {
    if (!(e.d >= 0)) fail(InstanceErrorKind::NegativeValue, "weight of edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  if (inst.deadline && !(*inst.deadline >= 0)) fail(InstanceErrorKind::NegativeValue, "deadline");

  if (inst.edges.size() + 1 != inst.vertices.size()) {
    fail(InstanceErrorKind::NotAPath, "a path on " + std::to_string(inst.vertices.size()) + " vertices needs " +
                                          std::to_string(inst.vertices.size() - 1) + " edges, got " +
                                          std::to_string(inst.edges.size()));
  }
  std::set<std::pair<Label, Label>> seen;
  for (const auto& e : inst.edges) {
    if (!ids.count(e.u) || !ids.count(e.v)) fail(InstanceErrorKind::NotAPath, "edge references an unknown vertex");
    if (e.u == e.v) fail(InstanceErrorKind::NotAPath, "self loop on vertex " + std::to_string(e.u));
    if (!seen.insert(std::minmax(e.u, e.v)).second) fail(InstanceErrorKind::NotAPath, "parallel edges between " + std::to_string(e.u) + " and " + std::to_string(e.v));
  }
  Adjacency adj = adjacency_of(inst);
  for (const auto& [id, nb] : adj) {
    if (nb.size() > 2) fail(InstanceErrorKind::NotAPath, "vertex " + std::to_string(id) + " has degree " + std::to_string(nb.size()));
  }
  // n-1 edges, max degree 2: connected iff acyclic iff a simple path.
  std::unordered_set<Label> reached{inst.depot};
  std::vector<Label> stack{inst.depot};
  while (!stack.empty()) {
    Label u = stack.back();
    stack.pop_back();
    for (const auto& nb : adj[u]) {
      if (reached.insert(nb.to).second) stack.push_back(nb.to);
    }
  }
  if (reached.size() != ids.size()) fail(InstanceErrorKind::NotAPath, "graph is not connected");
}

RawPathInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(InstanceErrorKind::MalformedDocument, e.what());
  }
  if (!doc.is_object()) fail(InstanceErrorKind::MalformedDocument, "top level is not an object");
  for (const char* key : {"vertices", "edges"}) {
    if (!doc.contains(key) || !doc[key].is_array()) fail(InstanceErrorKind::MalformedDocument, std::string("'") + key + "' must be an array");
  }

  RawPathInstance inst;
  inst.depot = id_field(doc, "depot", "document");
  auto note = [&inst](double x) {
    if (!is_integral_value(x)) inst.integral = false;
    return x;
  };

  for (const auto& v : doc["vertices"]) {
    if (!v.is_object()) fail(InstanceErrorKind::MalformedDocument, "vertex entry is not an object");
    Vertex vx;
    vx.id = id_field(v, "id", "vertex");
    if (vx.id == inst.depot) {
      // The depot's release, if present, is not part of the problem.
      if (v.contains("release") && !v["release"].is_number()) fail(InstanceErrorKind::MalformedDocument, "depot release is not a number");
      vx.release = 0;
    } else {
      vx.release = note(number_field(v, "release", "vertex"));
    }
    inst.vertices.push_back(vx);
  }
  for (const auto& e : doc["edges"]) {
    if (!e.is_object()) fail(InstanceErrorKind::MalformedDocument, "edge entry is not an object");
    inst.edges.push_back({id_field(e, "u", "edge"), id_field(e, "v", "edge"), note(number_field(e, "d", "edge"))});
  }
  if (doc.contains("deadline") && !doc["deadline"].is_null()) {
    inst.deadline = note(number_field(doc, "deadline", "document"));
  }
  validate_instance(inst);
  return inst;
}

namespace {

json number_json(double x, bool integral) {
  if (integral) return static_cast<std::int64_t>(x);
  return x;
}

}  // namespace

std::string dump_instance(const RawPathInstance& inst) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& v : inst.vertices) {
    json jv{{"id", v.id}};
    if (v.id != inst.depot) jv["release"] = number_json(v.release, inst.integral);
    doc["vertices"].push_back(jv);
  }
  doc["edges"] = json::array();
  for (const auto& e : inst.edges) {
    doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"d", number_json(e.d, inst.integral)}});
  }
  doc["depot"] = inst.depot;
  if (inst.deadline) doc["deadline"] = number_json(*inst.deadline, inst.integral);
  return doc.dump(1);
}

std::vector<Label> path_order(const RawPathInstance& inst) {
  Adjacency adj = adjacency_of(inst);
  Label start = inst.depot;
  if (adj[inst.depot].size() == 2) {
    start = std::numeric_limits<Label>::max();
    for (const auto& [id, nb] : adj) {
      if (nb.size() == 1) start = std::min(start, id);
    }
  }
  std::vector<Label> order{start};
  order.reserve(inst.vertices.size());
  std::optional<Label> prev;
  Label cur = start;
  while (order.size() < inst.vertices.size()) {
    const auto& nb = adj[cur];
    Label next = (prev && nb[0].to == *prev) ? nb[1].to : nb[0].to;
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return order;
}

namespace {

template <Scalar T>
struct SideWalk {
  std::vector<std::pair<Label, T>> left;  // outward from the depot
  std::vector<std::pair<Label, T>> right;
};

// Prefix sums outward from the depot in both directions.
template <Scalar T>
SideWalk<T> walk_sides(const RawPathInstance& inst) {
  std::vector<Label> order = path_order(inst);
  std::map<std::pair<Label, Label>, double> weight;
  for (const auto& e : inst.edges) weight[std::minmax(e.u, e.v)] = e.d;
  auto w = [&](Label a, Label b) { return to_scalar<T>(weight.at(std::minmax(a, b))); };

  auto p = static_cast<std::size_t>(std::find(order.begin(), order.end(), inst.depot) - order.begin());
  SideWalk<T> walk;
  T acc = 0;
  for (std::size_t q = p; q-- > 0;) {
    acc += w(order[q], order[q + 1]);
    walk.left.emplace_back(order[q], acc);
  }
  acc = 0;
  for (std::size_t q = p + 1; q < order.size(); ++q) {
    acc += w(order[q - 1], order[q]);
    walk.right.emplace_back(order[q], acc);
  }
  return walk;
}

}  // namespace

template <Scalar T>
std::map<Label, T> distances_from_depot(const RawPathInstance& inst) {
  SideWalk<T> walk = walk_sides<T>(inst);
  std::map<Label, T> tau;
  for (const auto& [id, d] : walk.left) tau[id] = d;
  for (const auto& [id, d] : walk.right) tau[id] = d;
  return tau;
}

template <Scalar T>
CanonicalSide<T> CanonicalSide<T>::from_values(Side side, std::vector<T> releases, std::vector<T> taus) {
  CanonicalSide s(side);
  for (std::size_t i = 0; i < releases.size(); ++i) {
    s.push_back({static_cast<Label>(i + 1), releases[i], taus[i]});
  }
  return s;
}

template <Scalar T>
void CanonicalSide<T>::push_back(Customer<T> c, std::span<const Label> riders) {
  releases_.push_back(c.release);
  taus_.push_back(c.tau);
  labels_.push_back(c.label);
  rider_labels_.insert(rider_labels_.end(), riders.begin(), riders.end());
  rider_offsets_.push_back(rider_labels_.size());
}

template <Scalar T>
bool is_canonical(const CanonicalSide<T>& side) {
  for (std::size_t i = 1; i < side.size(); ++i) {
    if (side.release(i) > side.release(i + 1) || side.tau(i) < side.tau(i + 1)) return false;
  }
  for (std::size_t i = 1; i <= side.size(); ++i) {
    if (side.release(i) < 0 || side.tau(i) < 0) return false;
  }
  return true;
}

namespace {

template <Scalar T>
void sort_customers(std::vector<Customer<T>>& customers) {
  std::stable_sort(customers.begin(), customers.end(), [](const Customer<T>& a, const Customer<T>& b) {
    if (a.release != b.release) return a.release < b.release;
    return a.tau > b.tau;
  });
}

}  // namespace

template <Scalar T>
CanonicalSide<T> canonicalize_side(Side side, std::vector<Customer<T>> customers) {
  sort_customers(customers);
  // Scan from the back: a customer survives iff it is strictly farther than
  // everything released after it. A dominated customer rides with the next
  // survivor, which is the farthest customer after it.
  std::vector<bool> survives(customers.size(), false);
  std::vector<std::vector<Label>> riders(customers.size());
  std::size_t holder = customers.size();
  for (std::size_t q = customers.size(); q-- > 0;) {
    if (holder == customers.size() || customers[q].tau > customers[holder].tau) {
      survives[q] = true;
      holder = q;
    } else {
      riders[holder].push_back(customers[q].label);
    }
  }
  CanonicalSide<T> out(side);
  for (std::size_t q = 0; q < customers.size(); ++q) {
    if (!survives[q]) continue;
    std::sort(riders[q].begin(), riders[q].end());
    out.push_back(customers[q], riders[q]);
  }
  return out;
}

template <Scalar T>
CanonicalSide<T> sort_side(Side side, std::vector<Customer<T>> customers) {
  sort_customers(customers);
  CanonicalSide<T> out(side);
  for (const auto& c : customers) out.push_back(c);
  return out;
}

template <Scalar T>
GeneralInstance<T> split_at_depot(const RawPathInstance& inst, bool reduce) {
  SideWalk<T> walk = walk_sides<T>(inst);
  std::unordered_map<Label, double> release;
  for (const auto& v : inst.vertices) release[v.id] = v.release;

  auto collect = [&](const std::vector<std::pair<Label, T>>& part) {
    std::vector<Customer<T>> cs;
    cs.reserve(part.size());
    for (const auto& [id, d] : part) cs.push_back({id, to_scalar<T>(release[id]), d});
    return cs;
  };
  GeneralInstance<T> g;
  if (reduce) {
    g.left = canonicalize_side(Side::Left, collect(walk.left));
    g.right = canonicalize_side(Side::Right, collect(walk.right));
  } else {
    g.left = sort_side(Side::Left, collect(walk.left));
    g.right = sort_side(Side::Right, collect(walk.right));
  }
  if (inst.deadline) g.deadline = to_scalar<T>(*inst.deadline);
  return g;
}

RawPathInstance generate_instance(std::size_t n_left, std::size_t n_right, std::int64_t max_edge,
                                  std::int64_t max_release, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> edge(1, std::max<std::int64_t>(1, max_edge));
  std::uniform_int_distribution<std::int64_t> rel(0, std::max<std::int64_t>(0, max_release));

  // Ids follow the path: left customers 1..L from the far end, depot 0,
  // right customers L+1..L+R outward.
  RawPathInstance inst;
  inst.depot = 0;
  std::vector<Label> order;
  for (std::size_t i = 1; i <= n_left; ++i) order.push_back(static_cast<Label>(i));
  order.push_back(0);
  for (std::size_t i = 1; i <= n_right; ++i) order.push_back(static_cast<Label>(n_left + i));

  for (Label id : order) {
    inst.vertices.push_back({id, id == 0 ? 0.0 : static_cast<double>(rel(rng))});
  }
  for (std::size_t q = 1; q < order.size(); ++q) {
    inst.edges.push_back({order[q - 1], order[q], static_cast<double>(edge(rng))});
  }
  return inst;
}

CanonicalSide<std::int64_t> random_canonical_side(Side side, std::size_t n, std::int64_t max_edge,
                                                  std::int64_t max_release, std::mt19937_64& rng,
                                                  std::int64_t min_edge) {
  std::uniform_int_distribution<std::int64_t> edge(min_edge, max_edge);
  std::uniform_int_distribution<std::int64_t> rel(0, max_release);
  std::vector<std::int64_t> releases(n);
  std::vector<std::int64_t> taus(n);
  for (auto& r : releases) r = rel(rng);
  std::sort(releases.begin(), releases.end());
  std::int64_t acc = 0;
  for (std::size_t q = n; q-- > 0;) {
    acc += edge(rng);
    taus[q] = acc;
  }
  return CanonicalSide<std::int64_t>::from_values(side, std::move(releases), std::move(taus));
}

#define GTSPRD_INSTANTIATE(T)                                                               \
  template std::map<Label, T> distances_from_depot<T>(const RawPathInstance&);             \
  template class CanonicalSide<T>;                                                          \
  template bool is_canonical<T>(const CanonicalSide<T>&);                                   \
  template CanonicalSide<T> canonicalize_side<T>(Side, std::vector<Customer<T>>);           \
  template CanonicalSide<T> sort_side<T>(Side, std::vector<Customer<T>>);                   \
  template GeneralInstance<T> split_at_depot<T>(const RawPathInstance&, bool);

GTSPRD_INSTANTIATE(std::int64_t)
GTSPRD_INSTANTIATE(double)

}  // namespace gtsprd
