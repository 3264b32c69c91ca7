#include "homgd/axioms.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <thread>

namespace homgd {

namespace {

// Copies of the operation and its basis products shared by identity closures.
struct BilinearCache {
  explicit BilinearCache(const StructureTensor& t) : op(t), n(t.dim()), products(n * n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) products[i * n + j] = op.basis_product(i, j);
  }
  const Vec& at(std::size_t i, std::size_t j) const { return products[i * n + j]; }
  Vec operator()(const Vec& x, const Vec& y) const { return op.apply(x, y); }

  StructureTensor op;
  std::size_t n;
  std::vector<Vec> products;
};

struct MapCache {
  explicit MapCache(const Matrix& m) : map(m) {
    for (std::size_t c = 0; c < m.dim(); ++c) images.push_back(m.column(c));
  }
  const Vec& at(std::size_t i) const { return images[i]; }
  Vec operator()(const Vec& x) const { return map.apply(x); }

  Matrix map;
  std::vector<Vec> images;
};

std::string named(bool hom, const char* base) { return hom ? std::string("hom_") + base : std::string(base); }

void run_range(std::size_t dim, const std::vector<Identity>& ids, std::size_t first, std::size_t stride,
               CheckReport& out) {
  for (const auto& id : ids) {
    for (std::size_t i = first; i < dim; i += stride)
      for (std::size_t j = 0; j < dim; ++j) {
        if (id.arity == 2) {
          Vec r = id.residual(i, j, 0);
          if (!is_zero(r)) out.violations.push_back({id.name, {i, j}, std::move(r)});
          continue;
        }
        for (std::size_t k = 0; k < dim; ++k) {
          Vec r = id.residual(i, j, k);
          if (!is_zero(r)) out.violations.push_back({id.name, {i, j, k}, std::move(r)});
        }
      }
  }
}

}  // namespace

std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::novikov: return "novikov";
    case Profile::hom_novikov: return "hom_novikov";
    case Profile::hom_lie: return "hom_lie";
    case Profile::comm_hom_assoc: return "comm_hom_assoc";
    case Profile::gd: return "gd";
    case Profile::hom_gd: return "hom_gd";
    case Profile::hom_poisson: return "hom_poisson";
  }
  return "?";
}

std::optional<Profile> parse_profile(std::string_view s) {
  for (auto p : {Profile::novikov, Profile::hom_novikov, Profile::hom_lie, Profile::comm_hom_assoc, Profile::gd,
                 Profile::hom_gd, Profile::hom_poisson})
    if (to_string(p) == s) return p;
  return std::nullopt;
}

void CheckReport::finalize() {
  std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    if (a.identity != b.identity) return a.identity < b.identity;
    return a.basis < b.basis;
  });
  passed = violations.empty();
}

void CheckReport::merge(CheckReport other) {
  for (auto& v : other.violations) violations.push_back(std::move(v));
  finalize();
}

unsigned sweep_threads() {
  if (const char* env = std::getenv("HOMGD_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CheckReport sweep(std::size_t dim, const std::vector<Identity>& identities) {
  // Small sweeps are not worth a thread.
  std::size_t threads = std::min<std::size_t>(sweep_threads(), dim);
  if (dim * dim * dim < 512) threads = 1;
  CheckReport report;
  if (threads <= 1) {
    run_range(dim, identities, 0, 1, report);
  } else {
    std::vector<CheckReport> parts(threads);
    {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&, t] { run_range(dim, identities, t, threads, parts[t]); });
    }
    for (auto& p : parts)
      for (auto& v : p.violations) report.violations.push_back(std::move(v));
  }
  report.finalize();
  return report;
}

std::vector<Identity> hom_novikov_identities(const StructureTensor& circ, const Matrix& alpha, bool hom_names) {
  auto c = std::make_shared<const BilinearCache>(circ);
  auto a = std::make_shared<const MapCache>(alpha);
  std::vector<Identity> ids;
  // (x o y) o a(z) - a(x) o (y o z) is symmetric in x, y.
  ids.push_back({named(hom_names, "novikov_1"), 3, [c, a](std::size_t i, std::size_t j, std::size_t k) {
                   const auto& C = *c;
                   const auto& A = *a;
                   Vec r = C(C.at(i, j), A.at(k));
                   r -= C(A.at(i), C.at(j, k));
                   r -= C(C.at(j, i), A.at(k));
                   r += C(A.at(j), C.at(i, k));
                   return r;
                 }});
  // (x o y) o a(z) = (x o z) o a(y)
  ids.push_back({named(hom_names, "novikov_2"), 3, [c, a](std::size_t i, std::size_t j, std::size_t k) {
                   const auto& C = *c;
                   const auto& A = *a;
                   Vec r = C(C.at(i, j), A.at(k));
                   r -= C(C.at(i, k), A.at(j));
                   return r;
                 }});
  return ids;
}

std::vector<Identity> hom_lie_identities(const StructureTensor& bracket, const Matrix& alpha, bool hom_names) {
  auto b = std::make_shared<const BilinearCache>(bracket);
  auto a = std::make_shared<const MapCache>(alpha);
  std::vector<Identity> ids;
  // Checked on every pair including i == j, which forces [e_i, e_i] = 0.
  ids.push_back({"skew_symmetry", 2, [b](std::size_t i, std::size_t j, std::size_t) {
                   return b->at(i, j) + b->at(j, i);
                 }});
  ids.push_back({named(hom_names, "jacobi"), 3, [b, a](std::size_t i, std::size_t j, std::size_t k) {
                   const auto& B = *b;
                   const auto& A = *a;
                   Vec r = B(B.at(i, j), A.at(k));
                   r += B(B.at(j, k), A.at(i));
                   r += B(B.at(k, i), A.at(j));
                   return r;
                 }});
  return ids;
}

std::vector<Identity> hom_gd_compat_identity(const StructureTensor& circ, const StructureTensor& bracket,
                                             const Matrix& alpha, bool hom_names) {
  auto c = std::make_shared<const BilinearCache>(circ);
  auto b = std::make_shared<const BilinearCache>(bracket);
  auto a = std::make_shared<const MapCache>(alpha);
  return {{named(hom_names, "gd_compat"), 3, [c, b, a](std::size_t i, std::size_t j, std::size_t k) {
             const auto& C = *c;
             const auto& B = *b;
             const auto& A = *a;
             Vec r = B(C.at(i, j), A.at(k));
             r -= B(C.at(i, k), A.at(j));
             r += C(B.at(i, j), A.at(k));
             r -= C(B.at(i, k), A.at(j));
             r -= C(A.at(i), B.at(j, k));
             return r;
           }}};
}

std::vector<Identity> comm_hom_assoc_identities(const StructureTensor& dot, const Matrix& alpha) {
  auto d = std::make_shared<const BilinearCache>(dot);
  auto a = std::make_shared<const MapCache>(alpha);
  std::vector<Identity> ids;
  ids.push_back({"commutativity", 2, [d](std::size_t i, std::size_t j, std::size_t) {
                   return d->at(i, j) - d->at(j, i);
                 }});
  ids.push_back({"hom_associativity", 3, [d, a](std::size_t i, std::size_t j, std::size_t k) {
                   const auto& P = *d;
                   const auto& A = *a;
                   Vec r = P(A.at(i), P.at(j, k));
                   r -= P(P.at(i, j), A.at(k));
                   return r;
                 }});
  return ids;
}

std::vector<Identity> hom_poisson_identity(const StructureTensor& dot, const StructureTensor& bracket,
                                           const Matrix& alpha) {
  auto d = std::make_shared<const BilinearCache>(dot);
  auto b = std::make_shared<const BilinearCache>(bracket);
  auto a = std::make_shared<const MapCache>(alpha);
  // [a(x), y.z] = a(y).[x,z] + a(z).[x,y]
  return {{"hom_poisson_leibniz", 3, [d, b, a](std::size_t i, std::size_t j, std::size_t k) {
             const auto& P = *d;
             const auto& B = *b;
             const auto& A = *a;
             Vec r = B(A.at(i), P.at(j, k));
             r -= P(A.at(j), B.at(i, k));
             r -= P(A.at(k), B.at(i, j));
             return r;
           }}};
}

CheckReport check_axioms(const AlgebraCarrier& a, const CheckProfile& profile) {
  const std::size_t n = a.dim();
  const Matrix id = Matrix::identity(n);
  std::vector<Identity> ids;
  auto append = [&ids](std::vector<Identity> more) {
    for (auto& x : more) ids.push_back(std::move(x));
  };
  switch (profile.name) {
    case Profile::novikov:
      append(hom_novikov_identities(a.op(OpName::circ), id, false));
      break;
    case Profile::hom_novikov:
      append(hom_novikov_identities(a.op(OpName::circ), a.map(MapName::alpha)));
      break;
    case Profile::hom_lie:
      append(hom_lie_identities(a.op(OpName::bracket), a.map(MapName::alpha)));
      break;
    case Profile::comm_hom_assoc:
      append(comm_hom_assoc_identities(a.op(OpName::dot), a.map(MapName::alpha)));
      break;
    case Profile::gd: {
      const auto& circ = a.op(OpName::circ);
      const auto& bracket = a.op(OpName::bracket);
      append(hom_novikov_identities(circ, id, false));
      append(hom_lie_identities(bracket, id, false));
      append(hom_gd_compat_identity(circ, bracket, id, false));
      break;
    }
    case Profile::hom_gd: {
      const auto& circ = a.op(OpName::circ);
      const auto& bracket = a.op(OpName::bracket);
      const auto& alpha = a.map(MapName::alpha);
      append(hom_novikov_identities(circ, alpha));
      append(hom_lie_identities(bracket, alpha));
      append(hom_gd_compat_identity(circ, bracket, alpha));
      break;
    }
    case Profile::hom_poisson: {
      const auto& dot = a.op(OpName::dot);
      const auto& bracket = a.op(OpName::bracket);
      const auto& alpha = a.map(MapName::alpha);
      append(comm_hom_assoc_identities(dot, alpha));
      append(hom_lie_identities(bracket, alpha));
      append(hom_poisson_identity(dot, bracket, alpha));
      break;
    }
  }
  return sweep(n, ids);
}

bool is_endomorphism(const AlgebraCarrier& a, MapName map, const std::vector<OpName>& ops) {
  const Matrix& m = a.map(map);
  const std::size_t n = a.dim();
  for (OpName name : ops) {
    const auto& op = a.op(name);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m.apply(op.basis_product(i, j)) != op.apply(m.column(i), m.column(j))) return false;
  }
  return true;
}

bool is_derivation(const AlgebraCarrier& a, MapName map, OpName op_name, const Scalar& weight) {
  const Matrix& m = a.map(map);
  const auto& op = a.op(op_name);
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec xy = op.basis_product(i, j);
      Vec rhs = op.apply(m.column(i), basis_vector(n, j)) + op.apply(basis_vector(n, i), m.column(j));
      rhs += weight * xy;
      if (m.apply(xy) != rhs) return false;
    }
  return true;
}

bool commutes(const AlgebraCarrier& a, MapName first, MapName second) {
  const Matrix& x = a.map(first);
  const Matrix& y = a.map(second);
  return x * y == y * x;
}

}  // namespace homgd
