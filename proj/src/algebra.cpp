#include "homgd/algebra.hpp"

namespace homgd {

std::string_view to_string(OpName op) {
  switch (op) {
    case OpName::circ: return "circ";
    case OpName::bracket: return "bracket";
    case OpName::dot: return "dot";
  }
  return "?";
}

std::string_view to_string(MapName map) {
  switch (map) {
    case MapName::alpha: return "alpha";
    case MapName::D: return "D";
  }
  return "?";
}

std::optional<OpName> parse_op_name(std::string_view s) {
  if (s == "circ") return OpName::circ;
  if (s == "bracket") return OpName::bracket;
  if (s == "dot") return OpName::dot;
  return std::nullopt;
}

std::optional<MapName> parse_map_name(std::string_view s) {
  if (s == "alpha") return MapName::alpha;
  if (s == "D") return MapName::D;
  return std::nullopt;
}

MissingSlot::MissingSlot(std::string_view slot)
    : Error("missing required slot '" + std::string(slot) + "'"), slot_(slot) {}

AlgebraCarrier::AlgebraCarrier(std::size_t dim, std::vector<std::string> names)
    : dim_(dim), names_(std::move(names)) {
  if (names_.empty()) {
    for (std::size_t i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i));
  } else if (names_.size() != dim) {
    throw Error("basis has " + std::to_string(names_.size()) + " names but dimension " +
                std::to_string(dim));
  }
}

const StructureTensor& AlgebraCarrier::op(OpName op) const {
  auto it = ops_.find(op);
  if (it == ops_.end()) throw MissingSlot(to_string(op));
  return it->second;
}

const Matrix& AlgebraCarrier::map(MapName map) const {
  auto it = maps_.find(map);
  if (it == maps_.end()) throw MissingSlot(to_string(map));
  return it->second;
}

StructureTensor& AlgebraCarrier::mutable_op(OpName op) {
  auto it = ops_.find(op);
  if (it == ops_.end()) throw MissingSlot(to_string(op));
  return it->second;
}

Matrix& AlgebraCarrier::mutable_map(MapName map) {
  auto it = maps_.find(map);
  if (it == maps_.end()) throw MissingSlot(to_string(map));
  return it->second;
}

void AlgebraCarrier::set_op(OpName op, StructureTensor t) {
  if (t.dim() != dim_) throw Error("operation '" + std::string(to_string(op)) + "' has wrong dimension");
  ops_[op] = std::move(t);
}

void AlgebraCarrier::set_map(MapName map, Matrix m) {
  if (m.dim() != dim_) throw Error("map '" + std::string(to_string(map)) + "' has wrong dimension");
  maps_[map] = std::move(m);
}

}  // namespace homgd
