#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gtsprd/scalar.hpp"

namespace gtsprd {

enum class InstanceErrorKind { MalformedDocument, NotAPath, UnknownDepot, NegativeValue };

const char* to_string(InstanceErrorKind kind);

class InstanceError : public std::runtime_error {
 public:
  InstanceError(InstanceErrorKind kind, const std::string& what);
  InstanceErrorKind kind() const { return kind_; }

 private:
  InstanceErrorKind kind_;
};

struct Vertex {
  Label id = 0;
  double release = 0;  // ignored on the depot
};

struct Edge {
  Label u = 0;
  Label v = 0;
  double d = 0;
};

/// A path graph as supplied by the user. Values are kept as doubles;
/// `integral` records whether every value is an exact integer, in which
/// case solvers run on std::int64_t.
struct RawPathInstance {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  Label depot = 0;
  std::optional<double> deadline;
  bool integral = true;

  std::size_t customer_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

// Throws InstanceError when the instance is not a valid weighted path.
void validate_instance(const RawPathInstance& inst);

RawPathInstance parse_instance(std::string_view text);
std::string dump_instance(const RawPathInstance& inst);

// Vertices in path order. A depot on an extremity comes first; otherwise
// the walk starts at the endpoint with the smaller id.
std::vector<Label> path_order(const RawPathInstance& inst);

// Depot distance of every customer (the depot itself is omitted).
template <Scalar T>
std::map<Label, T> distances_from_depot(const RawPathInstance& inst);

enum class Side { Left, Right };

const char* to_string(Side side);

template <Scalar T>
struct Customer {
  Label label = 0;
  T release{};
  T tau{};
};

/// One side of the depot in release order, with 1-based accessors.
///
/// Produced by canonicalize_side, releases are nondecreasing and depot
/// distances nonincreasing. Customers removed by dominance are kept as
/// riders of the survivor whose route delivers them.
template <Scalar T>
class CanonicalSide {
 public:
  CanonicalSide() = default;
  explicit CanonicalSide(Side side) : side_(side) {}

  // Builds a side from already ordered values, labelling customers 1..n.
  static CanonicalSide from_values(Side side, std::vector<T> releases, std::vector<T> taus);

  Side side() const { return side_; }
  std::size_t size() const { return releases_.size(); }
  bool empty() const { return releases_.empty(); }

  T release(std::size_t i) const { return releases_[i - 1]; }
  T tau(std::size_t i) const { return taus_[i - 1]; }
  Label label(std::size_t i) const { return labels_[i - 1]; }
  std::span<const Label> riders(std::size_t i) const {
    return std::span<const Label>(rider_labels_).subspan(rider_offsets_[i - 1],
                                                         rider_offsets_[i] - rider_offsets_[i - 1]);
  }

  std::span<const T> releases() const { return releases_; }
  std::span<const T> taus() const { return taus_; }
  std::span<const Label> labels() const { return labels_; }

  void push_back(Customer<T> c, std::span<const Label> riders = {});

 private:
  Side side_ = Side::Right;
  std::vector<T> releases_;
  std::vector<T> taus_;
  std::vector<Label> labels_;
  std::vector<Label> rider_labels_;
  std::vector<std::size_t> rider_offsets_{0};
};

template <Scalar T>
bool is_canonical(const CanonicalSide<T>& side);

// Sort by release (ties: larger tau first) and drop every customer that a
// later one is at least as far as.
template <Scalar T>
CanonicalSide<T> canonicalize_side(Side side, std::vector<Customer<T>> customers);

// Same ordering without the dominance reduction. Only the oracle accepts
// such sides, since depot distances need not be monotone.
template <Scalar T>
CanonicalSide<T> sort_side(Side side, std::vector<Customer<T>> customers);

template <Scalar T>
struct GeneralInstance {
  CanonicalSide<T> left{Side::Left};
  CanonicalSide<T> right{Side::Right};
  std::optional<T> deadline;

  std::size_t customer_count() const { return left.size() + right.size(); }
  const CanonicalSide<T>& side(Side s) const { return s == Side::Left ? left : right; }
};

template <Scalar T>
GeneralInstance<T> split_at_depot(const RawPathInstance& inst, bool reduce = true);

RawPathInstance generate_instance(std::size_t n_left, std::size_t n_right, std::int64_t max_edge,
                                  std::int64_t max_release, std::uint64_t seed);

// A canonical side drawn directly: sorted releases in [0, max_release] and
// depot distances built from edge weights in [min_edge, max_edge], so the
// side keeps all n customers.
CanonicalSide<std::int64_t> random_canonical_side(Side side, std::size_t n, std::int64_t max_edge,
                                                  std::int64_t max_release, std::mt19937_64& rng,
                                                  std::int64_t min_edge = 1);

}  // namespace gtsprd
