#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "homgd/algebra.hpp"
#include "homgd/conformal.hpp"

namespace homgd {

inline constexpr std::string_view kSchemaVersion = "homgd/1";

enum class DocumentKind { finite_algebra, conformal_algebra };

/// Syntax errors carry line/column; content errors name the offending entry.
class DocumentError : public ParseError {
 public:
  using ParseError::ParseError;
};

struct OpEntry {
  std::size_t i = 0, j = 0, k = 0;
  Scalar c;
  friend bool operator==(const OpEntry&, const OpEntry&) = default;
};

struct BracketEntry {
  std::size_t i = 0, j = 0, g = 0;
  MPoly p;
  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

/// In-memory form of one JSON document, already validated and canonical:
/// entries sorted, zeros dropped, numbers and polynomials normalized.
///
/// finite_algebra:
///   {"schema": "homgd/1", "kind": "finite_algebra", "dim": 2, "basis": ["x", "y"],
///    "ops": {"circ": [[0, 1, 1, "1/2"]]}, "maps": {"alpha": [["1", "0"], ["0", "2"]]},
///    "metadata": {}}
/// conformal_algebra:
///   {"schema": "homgd/1", "kind": "conformal_algebra", "rank": 1, "generators": ["L"],
///    "brackets": [[0, 0, 0, "d + 2*l"]], "maps": {"alpha": [["1"]]}, "metadata": {}}
/// Map matrices are listed by rows; conformal alpha entries are polynomials in d.
struct AlgebraDocument {
  std::string schema{kSchemaVersion};
  DocumentKind kind = DocumentKind::finite_algebra;
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::map<OpName, std::vector<OpEntry>> ops;
  std::map<MapName, Matrix> maps;
  std::vector<BracketEntry> brackets;
  std::vector<MPoly> conformal_alpha;  // rank * rank, row-major; empty when absent
  nlohmann::json metadata = nlohmann::json::object();

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

AlgebraDocument parse_document(std::string_view text);
std::string serialize(const AlgebraDocument& doc);

AlgebraDocument to_document(const AlgebraCarrier& a, nlohmann::json metadata = nlohmann::json::object());
AlgebraDocument to_document(const ConformalAlgebra& r, nlohmann::json metadata = nlohmann::json::object());

/// Throws DocumentError when the kind does not match.
AlgebraCarrier load_finite(const AlgebraDocument& doc);
ConformalAlgebra load_conformal(const AlgebraDocument& doc);
std::variant<AlgebraCarrier, ConformalAlgebra> load(const AlgebraDocument& doc);

/// File helpers; I/O failures throw Error.
AlgebraDocument read_document(const std::string& path);
void write_document(const std::string& path, const AlgebraDocument& doc);

}  // namespace homgd
