#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homgd/algebra.hpp"

namespace homgd {

enum class Profile { novikov, hom_novikov, hom_lie, comm_hom_assoc, gd, hom_gd, hom_poisson };

std::string_view to_string(Profile p);
std::optional<Profile> parse_profile(std::string_view s);

struct CheckProfile {
  Profile name = Profile::hom_gd;
  Scalar weight;  // only consulted by derivation checks
};

/// One failing instance of a multilinear identity on basis elements.
struct Violation {
  std::string identity;
  std::vector<std::size_t> basis;  // pair or triple of basis indices
  Vec residual;                    // never zero
};

struct CheckReport {
  bool passed = true;
  std::vector<Violation> violations;  // sorted by (identity, basis)

  /// Sorts violations and recomputes `passed`.
  void finalize();
  void merge(CheckReport other);
};

/// A multilinear identity evaluated on basis tuples; the residual must vanish.
struct Identity {
  std::string name;
  unsigned arity = 3;  // 2 or 3
  std::function<Vec(std::size_t, std::size_t, std::size_t)> residual;
};

/// Exhaustive sweep over every basis pair or triple. Work is split across
/// `sweep_threads()` threads; the merged report is sorted.
CheckReport sweep(std::size_t dim, const std::vector<Identity>& identities);

/// Thread budget: HOMGD_THREADS when set to a positive integer, otherwise the
/// hardware concurrency.
unsigned sweep_threads();

/// Evaluates every identity of the profile on all basis tuples. Throws
/// MissingSlot when the carrier lacks an operation or map the profile needs.
CheckReport check_axioms(const AlgebraCarrier& a, const CheckProfile& profile);

/// The individual identity families, exposed for composition and tests. The
/// `alpha` argument may be any matrix of the carrier's dimension.
std::vector<Identity> hom_novikov_identities(const StructureTensor& circ, const Matrix& alpha,
                                             bool hom_names = true);
std::vector<Identity> hom_lie_identities(const StructureTensor& bracket, const Matrix& alpha,
                                         bool hom_names = true);
std::vector<Identity> hom_gd_compat_identity(const StructureTensor& circ, const StructureTensor& bracket,
                                             const Matrix& alpha, bool hom_names = true);
std::vector<Identity> comm_hom_assoc_identities(const StructureTensor& dot, const Matrix& alpha);
std::vector<Identity> hom_poisson_identity(const StructureTensor& dot, const StructureTensor& bracket,
                                           const Matrix& alpha);

/// M(x * y) == M(x) * M(y) on all basis pairs, for each listed operation.
bool is_endomorphism(const AlgebraCarrier& a, MapName map, const std::vector<OpName>& ops);
/// M(x * y) == M(x) * y + x * M(y) + weight (x * y) on all basis pairs.
bool is_derivation(const AlgebraCarrier& a, MapName map, OpName op, const Scalar& weight);
bool commutes(const AlgebraCarrier& a, MapName first, MapName second);

}  // namespace homgd
