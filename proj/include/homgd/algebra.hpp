#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homgd/linalg.hpp"

namespace homgd {

enum class OpName { circ, bracket, dot };
enum class MapName { alpha, D };

std::string_view to_string(OpName op);
std::string_view to_string(MapName map);
std::optional<OpName> parse_op_name(std::string_view s);
std::optional<MapName> parse_map_name(std::string_view s);

/// A required operation or map is absent from a carrier.
class MissingSlot : public Error {
 public:
  explicit MissingSlot(std::string_view slot);
  const std::string& slot() const { return slot_; }

 private:
  std::string slot_;
};

/// Finite-dimensional vector space with named bilinear operations and named
/// linear maps, all given in a fixed basis.
class AlgebraCarrier {
 public:
  AlgebraCarrier() = default;
  /// Basis names default to e0, e1, ... when `names` is empty.
  explicit AlgebraCarrier(std::size_t dim, std::vector<std::string> names = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  bool has(OpName op) const { return ops_.count(op) != 0; }
  bool has(MapName map) const { return maps_.count(map) != 0; }
  /// Throws MissingSlot naming the absent slot.
  const StructureTensor& op(OpName op) const;
  const Matrix& map(MapName map) const;
  StructureTensor& mutable_op(OpName op);
  Matrix& mutable_map(MapName map);

  /// Inserts or replaces; dimensions must agree with the carrier.
  void set_op(OpName op, StructureTensor t);
  void set_map(MapName map, Matrix m);
  void erase(OpName op) { ops_.erase(op); }
  void erase(MapName map) { maps_.erase(map); }

  const std::map<OpName, StructureTensor>& ops() const { return ops_; }
  const std::map<MapName, Matrix>& maps() const { return maps_; }

  friend bool operator==(const AlgebraCarrier&, const AlgebraCarrier&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::map<OpName, StructureTensor> ops_;
  std::map<MapName, Matrix> maps_;
};

}  // namespace homgd
