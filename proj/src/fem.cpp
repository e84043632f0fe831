#include "trieig/fem.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "trieig/errors.hpp"

namespace trieig {

namespace {

constexpr double kResidualTol = 1e-10;
constexpr int kMaxIterations = 20000;

}  // namespace

int TriMesh::interior_count() const {
  int n = 0;
  for (bool b : boundary) n += b ? 0 : 1;
  return n;
}

TriMesh refine(const Triangle& t, int k) {
  if (k < 1 || k > kMaxLevel) {
    throw LevelTooLarge("refinement level must lie in [1, " + std::to_string(kMaxLevel) + "]");
  }
  const int n = 1 << k;
  const auto [p0, p1, p2] = t.vertices();
  TriMesh mesh;
  mesh.level = k;

  // vertex (i, j), i + j <= n, sits at p0 + (i/n)(p1 - p0) + (j/n)(p2 - p0)
  std::vector<int> index((n + 1) * (n + 1), -1);
  auto id = [&](int i, int j) { return index[i * (n + 1) + j]; };
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      const double s = double(i) / n;
      const double r = double(j) / n;
      index[i * (n + 1) + j] = static_cast<int>(mesh.vertices.size());
      mesh.vertices.push_back({p0.x + s * (p1.x - p0.x) + r * (p2.x - p0.x),
                               p0.y + s * (p1.y - p0.y) + r * (p2.y - p0.y)});
      mesh.boundary.push_back(i == 0 || j == 0 || i + j == n);
    }
  }
  mesh.cells.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      mesh.cells.push_back({id(i, j), id(i + 1, j), id(i, j + 1)});
      if (i + j + 1 < n) mesh.cells.push_back({id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return mesh;
}

double smallest_eigenvalue(const TriMesh& mesh) {
  const int nv = static_cast<int>(mesh.vertices.size());
  std::vector<int> dof(nv, -1);
  int ndof = 0;
  for (int v = 0; v < nv; ++v) {
    if (!mesh.boundary[v]) dof[v] = ndof++;
  }
  if (ndof == 0) throw NoInteriorVertices("mesh has no interior vertices; refine further");

  std::vector<Eigen::Triplet<double>> kt, mt;
  kt.reserve(mesh.cells.size() * 9);
  mt.reserve(mesh.cells.size() * 9);
  for (const auto& cell : mesh.cells) {
    std::array<Point, 3> p;
    for (int a = 0; a < 3; ++a) p[a] = mesh.vertices[cell[a]];
    const double area = 0.5 * std::abs((p[1].x - p[0].x) * (p[2].y - p[0].y) -
                                       (p[1].y - p[0].y) * (p[2].x - p[0].x));
    // gradient of the hat function at vertex a is the rotated opposite edge / (2 area)
    std::array<Point, 3> g;
    for (int a = 0; a < 3; ++a) {
      const Point& q = p[(a + 1) % 3];
      const Point& r = p[(a + 2) % 3];
      g[a] = {(q.y - r.y) / (2.0 * area), (r.x - q.x) / (2.0 * area)};
    }
    for (int a = 0; a < 3; ++a) {
      const int ia = dof[cell[a]];
      if (ia < 0) continue;
      for (int b = 0; b < 3; ++b) {
        const int ib = dof[cell[b]];
        if (ib < 0) continue;
        kt.emplace_back(ia, ib, area * (g[a].x * g[b].x + g[a].y * g[b].y));
        mt.emplace_back(ia, ib, area / 12.0 * (a == b ? 2.0 : 1.0));
      }
    }
  }
  Eigen::SparseMatrix<double> K(ndof, ndof), Mass(ndof, ndof);
  K.setFromTriplets(kt.begin(), kt.end());
  Mass.setFromTriplets(mt.begin(), mt.end());

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(K);
  if (solver.info() != Eigen::Success) throw IterationStalled("stiffness factorization failed");

  // the ground state is positive, so the constant vector overlaps it
  Eigen::VectorXd x = Eigen::VectorXd::Ones(ndof);
  double lambda = 0.0;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    const Eigen::VectorXd mx = Mass * x;
    x = solver.solve(mx);
    x /= std::sqrt(x.dot(Mass * x));
    const Eigen::VectorXd kx = K * x;
    const Eigen::VectorXd mx_new = Mass * x;
    lambda = x.dot(kx);
    const double residual = (kx - lambda * mx_new).norm() / (lambda * mx_new.norm());
    if (residual < kResidualTol) return lambda;
  }
  std::ostringstream os;
  os << "inverse iteration did not reach residual " << kResidualTol << " in " << kMaxIterations
     << " steps (last estimate " << lambda << ")";
  throw IterationStalled(os.str());
}

namespace {
constexpr std::size_t kFitLevels = 2;
// floor for the observed order in the tail estimate (d / (2^p - 1) blows up as p -> 0)
constexpr double kMinTailOrder = 0.25;
}  // namespace

FemEstimate estimate_lambda(const Triangle& t, int k_min, int k_max) {
  if (t.M > kOracleMaxM) {
    std::ostringstream os;
    os << "finite-element oracle refuses M = " << t.M << " > " << kOracleMaxM
       << " (cells too anisotropic); use the sector bound";
    throw OracleRefused(os.str());
  }
  if (k_max < k_min + 2) throw InputError("need at least three levels (k_max >= k_min + 2)");
  if (k_min < 1 || k_max > kMaxLevel) throw LevelTooLarge("levels must lie in [1, 9]");

  FemEstimate est;
  const double root_h = t.N;  // longest side of the canonical triangle
  for (int k = k_min; k <= k_max; ++k) {
    est.levels.push_back({k, root_h / double(1 << k), smallest_eigenvalue(refine(t, k))});
  }

  // least squares for lambda_h = lambda + C h^2 over the finest levels only;
  // coarse levels still carry an h^4 term large enough to bias the limit
  double s1 = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
  for (std::size_t k = est.levels.size() - kFitLevels; k < est.levels.size(); ++k) {
    const FemLevel& l = est.levels[k];
    const double x = l.h * l.h;
    s1 += 1;
    sx += x;
    sxx += x * x;
    sy += l.lambda;
    sxy += x * l.lambda;
  }
  const double slope = (s1 * sxy - sx * sy) / (s1 * sxx - sx * sx);
  est.lambda_extrap = (sy - slope * sx) / s1;
  est.error_est = std::abs(est.lambda_extrap - est.levels.back().lambda);

  const std::size_t n = est.levels.size();
  const double d1 = est.levels[n - 3].lambda - est.levels[n - 2].lambda;
  const double d2 = est.levels[n - 2].lambda - est.levels[n - 1].lambda;
  est.order_obs = std::log2(d1 / d2);

  // On thin triangles the coarse levels are pre-asymptotic and the observed
  // order drops well below 2; the h^2 model then understates the distance to
  // the limit. Use the tail estimate at the observed order when it is larger.
  const double p = std::max(est.order_obs, kMinTailOrder);
  est.error_est = std::max(est.error_est, d2 / (std::exp2(p) - 1.0));
  return est;
}

ValidationReport validate_bounds(const Triangle& t, int k_min, int k_max) {
  const BoundResult b = upper_bound(t);
  const FemEstimate e = estimate_lambda(t, k_min, k_max);
  ValidationReport r;
  r.lower = b.lower;
  r.upper = b.upper;
  r.method = b.method;
  r.lambda_finest = e.levels.back().lambda;
  r.lambda_extrap = e.lambda_extrap;
  r.error_est = e.error_est;
  r.lower_margin = r.lambda_finest - r.lower;
  r.upper_margin = r.upper - (r.lambda_extrap - r.error_est);
  r.ok = r.lower_margin >= 0.0 && r.upper_margin >= 0.0;
  return r;
}

ValidationReport validate_bounds_or_throw(const Triangle& t, int k_min, int k_max) {
  const ValidationReport r = validate_bounds(t, k_min, k_max);
  if (!r.ok) {
    std::ostringstream os;
    os.precision(17);
    os << "bound violation at (M, N) = (" << t.M << ", " << t.N << "): lower " << r.lower
       << ", lambda_h " << r.lambda_finest << ", lambda_extrap " << r.lambda_extrap << " +- "
       << r.error_est << ", upper " << r.upper;
    throw BoundViolation(os.str());
  }
  return r;
}

}  // namespace trieig
