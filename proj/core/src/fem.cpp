#include "convdisp/fem.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace convdisp {

namespace {

// Reference coordinates of a point on the edge `side`, parameterized by
// t in [-1, 1] along the edge.
std::array<double, 2> edge_ref_point(int side, double t) {
  switch (side) {
    case 0: return {1.0, t};
    case 1: return {-1.0, t};
    case 2: return {t, 1.0};
    default: return {t, -1.0};
  }
}

std::array<double, 2> edge_phys_point(const BoundaryFacet& f, double t, double h) {
  if (f.side <= 1) return {f.mx, f.my + 0.5 * h * t};
  return {f.mx + 0.5 * h * t, f.my};
}

}  // namespace

std::vector<std::pair<double, double>> gauss_rule(int npts) {
  switch (npts) {
    case 2: {
      const double a = 1.0 / std::sqrt(3.0);
      return {{-a, 1.0}, {a, 1.0}};
    }
    case 3: {
      const double a = std::sqrt(0.6);
      return {{-a, 5.0 / 9.0}, {0.0, 8.0 / 9.0}, {a, 5.0 / 9.0}};
    }
    case 5: {
      const double r = 2.0 * std::sqrt(10.0 / 7.0);
      const double a = std::sqrt(5.0 - r) / 3.0, b = std::sqrt(5.0 + r) / 3.0;
      const double s = 13.0 * std::sqrt(70.0);
      const double wa = (322.0 + s) / 900.0, wb = (322.0 - s) / 900.0;
      return {{-b, wb}, {-a, wa}, {0.0, 128.0 / 225.0}, {a, wa}, {b, wb}};
    }
    default:
      throw std::invalid_argument("unsupported Gauss rule");
  }
}

std::array<double, 4> ref_basis_vals(Scheme scheme, double xi, double eta) {
  if (scheme == Scheme::P1C) {
    return {0.25 * (1.0 - xi) * (1.0 - eta), 0.25 * (1.0 + xi) * (1.0 - eta),
            0.25 * (1.0 + xi) * (1.0 + eta), 0.25 * (1.0 - xi) * (1.0 + eta)};
  }
  const double s = scheme == Scheme::RT1NC ? 0.25 : 0.375;
  const double q = s * (xi * xi - eta * eta);
  return {0.25 + 0.5 * xi + q, 0.25 - 0.5 * xi + q, 0.25 + 0.5 * eta - q,
          0.25 - 0.5 * eta - q};
}

std::array<std::array<double, 2>, 4> ref_basis_grads(Scheme scheme, double xi, double eta) {
  if (scheme == Scheme::P1C) {
    return {{{-0.25 * (1.0 - eta), -0.25 * (1.0 - xi)},
             {0.25 * (1.0 - eta), -0.25 * (1.0 + xi)},
             {0.25 * (1.0 + eta), 0.25 * (1.0 + xi)},
             {-0.25 * (1.0 + eta), 0.25 * (1.0 - xi)}}};
  }
  const double g = scheme == Scheme::RT1NC ? 0.5 : 0.75;
  return {{{0.5 + g * xi, -g * eta},
           {-0.5 + g * xi, -g * eta},
           {-g * xi, 0.5 + g * eta},
           {-g * xi, -0.5 + g * eta}}};
}

ElementMatrices reference_matrices(Scheme scheme, int quad_pts) {
  ElementMatrices em;
  const auto rule = gauss_rule(quad_pts);
  for (const auto& [xi, wx] : rule) {
    for (const auto& [eta, wy] : rule) {
      const double w = wx * wy;
      const auto v = ref_basis_vals(scheme, xi, eta);
      const auto g = ref_basis_grads(scheme, xi, eta);
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          em.kxx[i][j] += w * g[j][0] * g[i][0];
          em.kyy[i][j] += w * g[j][1] * g[i][1];
          em.conv[i][j] += w * g[j][0] * v[i];
          em.mass[i][j] += w * v[j] * v[i];
        }
      }
    }
  }
  return em;
}

DofMap::DofMap(Scheme scheme, int n) : scheme_(scheme), n_(n) {
  if (n < 1) throw std::invalid_argument("mesh needs at least one cell");
}

int DofMap::ndof() const {
  return scheme_ == Scheme::P1C ? (n_ + 1) * (n_ + 1) : 2 * n_ * (n_ + 1);
}

int DofMap::bandwidth() const { return scheme_ == Scheme::P1C ? n_ + 2 : 2 * n_ + 1; }

std::array<int, 4> DofMap::cell_dofs(int i, int j) const {
  if (scheme_ == Scheme::P1C) {
    const int bl = j * (n_ + 1) + i;
    return {bl, bl + 1, bl + n_ + 2, bl + n_ + 1};
  }
  const int layer = 2 * n_ + 1;
  return {j * layer + n_ + i + 1, j * layer + n_ + i, (j + 1) * layer + i, j * layer + i};
}

namespace {

// Edge decode for the layered numbering: horizontal edge (i, j) or vertical
// edge (i, j), the latter flagged by vertical = true.
struct EdgeIndex {
  int i, j;
  bool vertical;
};

EdgeIndex decode_edge(int dof, int n) {
  const int layer = 2 * n + 1;
  const int j = dof / layer;
  const int r = dof - j * layer;
  if (j == n || r < n) return {r, j, false};
  return {r - n, j, true};
}

}  // namespace

bool DofMap::on_boundary(int dof) const {
  if (scheme_ == Scheme::P1C) {
    const int i = dof % (n_ + 1), j = dof / (n_ + 1);
    return i == 0 || i == n_ || j == 0 || j == n_;
  }
  const EdgeIndex e = decode_edge(dof, n_);
  return e.vertical ? (e.i == 0 || e.i == n_) : (e.j == 0 || e.j == n_);
}

std::array<double, 2> DofMap::dof_grid_point(int dof) const {
  if (scheme_ == Scheme::P1C) {
    const int i = dof % (n_ + 1), j = dof / (n_ + 1);
    return {static_cast<double>(i), static_cast<double>(j)};
  }
  const EdgeIndex e = decode_edge(dof, n_);
  if (e.vertical) return {static_cast<double>(e.i), e.j + 0.5};
  return {e.i + 0.5, static_cast<double>(e.j)};
}

bool DofMap::dof_is_vertical_edge(int dof) const {
  if (scheme_ == Scheme::P1C) return false;
  return decode_edge(dof, n_).vertical;
}

std::vector<BoundaryFacet> boundary_facets(const QuadMesh& mesh) {
  const int n = mesh.n;
  const double h = mesh.h();
  std::vector<BoundaryFacet> out;
  out.reserve(4 * n);
  for (int i = 0; i < n; ++i) {
    const double mid = (i + 0.5) * h;
    out.push_back({i, 0, 3, 0.0, -1.0, mid, 0.0});
    out.push_back({i, n - 1, 2, 0.0, 1.0, mid, 1.0});
    out.push_back({0, i, 1, -1.0, 0.0, 0.0, mid});
    out.push_back({n - 1, i, 0, 1.0, 0.0, 1.0, mid});
  }
  return out;
}

DenseBlocks assemble_dense_blocks(Scheme scheme, const QuadMesh& mesh) {
  const DofMap dm(scheme, mesh.n);
  const int nd = dm.ndof();
  if (nd > 4096) throw std::invalid_argument("dense blocks are for small meshes");
  DenseBlocks blocks;
  blocks.ndof = nd;
  const size_t sz = static_cast<size_t>(nd) * nd;
  blocks.kxx.assign(sz, 0.0);
  blocks.kyy.assign(sz, 0.0);
  blocks.conv.assign(sz, 0.0);
  blocks.mass.assign(sz, 0.0);
  blocks.boundary.assign(sz, 0.0);

  const ElementMatrices em = reference_matrices(scheme);
  const double h = mesh.h();
  for (int j = 0; j < mesh.n; ++j) {
    for (int i = 0; i < mesh.n; ++i) {
      const auto dofs = dm.cell_dofs(i, j);
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          const size_t idx = static_cast<size_t>(dofs[a]) * nd + dofs[b];
          blocks.kxx[idx] += em.kxx[a][b];
          blocks.kyy[idx] += em.kyy[a][b];
          blocks.conv[idx] += 0.5 * h * em.conv[a][b];
          blocks.mass[idx] += 0.25 * h * h * em.mass[a][b];
        }
      }
    }
  }

  if (scheme == Scheme::P1C) {
    const auto rule = gauss_rule(2);
    for (const auto& f : boundary_facets(mesh)) {
      const auto dofs = dm.cell_dofs(f.ci, f.cj);
      for (const auto& [t, w] : rule) {
        const auto rp = edge_ref_point(f.side, t);
        const auto v = ref_basis_vals(scheme, rp[0], rp[1]);
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            blocks.boundary[static_cast<size_t>(dofs[a]) * nd + dofs[b]] +=
                0.5 * h * w * v[a] * v[b];
      }
    }
  } else {
    for (const auto& f : boundary_facets(mesh)) {
      const int d = dm.cell_dofs(f.ci, f.cj)[f.side];
      blocks.boundary[static_cast<size_t>(d) * nd + d] += h;
    }
  }
  return blocks;
}

BandedComplexMatrix assemble_system(Scheme scheme, const QuadMesh& mesh, double omega,
                                    const FlowParams& flow) {
  const DofMap dm(scheme, mesh.n);
  const int bw = dm.bandwidth();
  BandedComplexMatrix A(dm.ndof(), bw, bw);

  const ElementMatrices em = reference_matrices(scheme);
  const double h = mesh.h();
  const double axx = flow.axx();
  const Complex iw(0.0, omega);

  std::array<std::array<Complex, 4>, 4> loc;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      loc[a][b] = axx * em.kxx[a][b] + em.kyy[a][b] -
                  2.0 * iw * flow.mach * (0.5 * h * em.conv[a][b]) -
                  omega * omega * (0.25 * h * h * em.mass[a][b]);

  for (int j = 0; j < mesh.n; ++j) {
    for (int i = 0; i < mesh.n; ++i) {
      const auto dofs = dm.cell_dofs(i, j);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) A.add(dofs[a], dofs[b], loc[a][b]);
    }
  }

  if (scheme == Scheme::P1C) {
    const auto rule = gauss_rule(2);
    for (const auto& f : boundary_facets(mesh)) {
      const auto dofs = dm.cell_dofs(f.ci, f.cj);
      for (const auto& [t, w] : rule) {
        const auto rp = edge_ref_point(f.side, t);
        const auto v = ref_basis_vals(scheme, rp[0], rp[1]);
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) A.add(dofs[a], dofs[b], -iw * (0.5 * h * w * v[a] * v[b]));
      }
    }
  } else {
    for (const auto& f : boundary_facets(mesh)) {
      const int d = dm.cell_dofs(f.ci, f.cj)[f.side];
      A.add(d, d, -iw * h);
    }
  }
  return A;
}

std::vector<Complex> assemble_rhs(Scheme scheme, const QuadMesh& mesh, double omega,
                                  const FlowParams& flow, double theta) {
  const DofMap dm(scheme, mesh.n);
  std::vector<Complex> rhs(dm.ndof(), Complex(0.0, 0.0));
  const double h = mesh.h();
  const double axx = flow.axx();
  const double ct = std::cos(theta), st = std::sin(theta);
  const double k = omega / (1.0 + flow.mach * ct);
  const double k1 = k * ct, k2 = k * st;
  const Complex iu(0.0, 1.0);

  // Impedance data of the exact wave: i (k nu . A e_r - w) exp(i k x . e_r).
  const auto g = [&](double x, double y, double nx, double ny) {
    const double flux = nx * axx * ct + ny * st;
    return iu * (k * flux - omega) * std::exp(iu * (k1 * x + k2 * y));
  };

  if (scheme == Scheme::P1C) {
    const auto rule = gauss_rule(2);
    for (const auto& f : boundary_facets(mesh)) {
      const auto dofs = dm.cell_dofs(f.ci, f.cj);
      for (const auto& [t, w] : rule) {
        const auto rp = edge_ref_point(f.side, t);
        const auto v = ref_basis_vals(scheme, rp[0], rp[1]);
        const auto xp = edge_phys_point(f, t, h);
        const Complex gv = 0.5 * h * w * g(xp[0], xp[1], f.nx, f.ny);
        for (int a = 0; a < 4; ++a) rhs[dofs[a]] += gv * v[a];
      }
    }
  } else {
    for (const auto& f : boundary_facets(mesh)) {
      const int d = dm.cell_dofs(f.ci, f.cj)[f.side];
      rhs[d] += h * g(f.mx, f.my, f.nx, f.ny);
    }
  }
  return rhs;
}

std::vector<Complex> interpolate_exact(Scheme scheme, const QuadMesh& mesh, double k,
                                       double theta) {
  const DofMap dm(scheme, mesh.n);
  const double h = mesh.h();
  const double k1 = k * std::cos(theta), k2 = k * std::sin(theta);
  const Complex iu(0.0, 1.0);
  std::vector<Complex> out(dm.ndof());
  for (int d = 0; d < dm.ndof(); ++d) {
    const auto gp = dm.dof_grid_point(d);
    Complex val = std::exp(iu * (k1 * gp[0] * h + k2 * gp[1] * h));
    if (scheme == Scheme::RT2NC) {
      const double kt = dm.dof_is_vertical_edge(d) ? k2 : k1;
      val *= sinc(0.5 * kt * h);
    }
    out[d] = val;
  }
  return out;
}

EnergyNorms energy_norm_error(Scheme scheme, const QuadMesh& mesh, double omega,
                              const FlowParams& flow, double theta,
                              const std::vector<Complex>& dofs) {
  const DofMap dm(scheme, mesh.n);
  if (static_cast<int>(dofs.size()) != dm.ndof()) throw std::invalid_argument("size mismatch");
  const double h = mesh.h();
  const double axx = flow.axx();
  const double ct = std::cos(theta), st = std::sin(theta);
  const double k = omega / (1.0 + flow.mach * ct);
  const double k1 = k * ct, k2 = k * st;
  const Complex iu(0.0, 1.0);
  const auto rule = gauss_rule(3);
  const double jac = 0.25 * h * h;
  const double gscale = 2.0 / h;

  double err2 = 0.0, exact2 = 0.0;
  for (int j = 0; j < mesh.n; ++j) {
    for (int i = 0; i < mesh.n; ++i) {
      const auto cd = dm.cell_dofs(i, j);
      const double x0 = i * h, y0 = j * h;
      for (const auto& [xi, wx] : rule) {
        for (const auto& [eta, wy] : rule) {
          const double w = wx * wy * jac;
          const auto v = ref_basis_vals(scheme, xi, eta);
          const auto gr = ref_basis_grads(scheme, xi, eta);
          Complex uh(0.0, 0.0), ux(0.0, 0.0), uy(0.0, 0.0);
          for (int a = 0; a < 4; ++a) {
            const Complex c = dofs[cd[a]];
            uh += c * v[a];
            ux += c * gr[a][0];
            uy += c * gr[a][1];
          }
          ux *= gscale;
          uy *= gscale;
          const double x = x0 + 0.5 * (1.0 + xi) * h;
          const double y = y0 + 0.5 * (1.0 + eta) * h;
          const Complex p = std::exp(iu * (k1 * x + k2 * y));
          const Complex px = iu * k1 * p, py = iu * k2 * p;
          err2 += w * (axx * std::norm(ux - px) + std::norm(uy - py) +
                       omega * omega * std::norm(uh - p));
          exact2 += w * (axx * std::norm(px) + std::norm(py) + omega * omega * std::norm(p));
        }
      }
    }
  }
  return {std::sqrt(err2), std::sqrt(exact2)};
}

QuadraticInOmega stencil_oracle(Scheme scheme, Formulation form, const FlowParams& flow,
                                const Vec2& components) {
  // 2x2 patch of unit cells covering [-1, 1]^2; test rows are the interior
  // unknowns, summed per operator.
  const DofMap dm(scheme, 2);
  const int nd = dm.ndof();
  const ElementMatrices em = reference_matrices(scheme);

  enum { XX = 0, YY = 1, CV = 2, MS = 3 };
  std::array<std::vector<double>, 4> rows;
  for (auto& r : rows) r.assign(nd, 0.0);
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i) {
      const auto dofs = dm.cell_dofs(i, j);
      for (int a = 0; a < 4; ++a) {
        if (dm.on_boundary(dofs[a])) continue;
        for (int b = 0; b < 4; ++b) {
          rows[XX][dofs[b]] += em.kxx[a][b];
          rows[YY][dofs[b]] += em.kyy[a][b];
          rows[CV][dofs[b]] += 0.5 * em.conv[a][b];
          rows[MS][dofs[b]] += 0.25 * em.mass[a][b];
        }
      }
    }
  }

  // The second-order and convection rows annihilate constants; fold their
  // accumulated row-sum roundoff into one anchor entry.
  for (int r : {XX, YY, CV}) {
    double rs = 0.0;
    for (int d = 0; d < nd; ++d) rs += rows[r][d];
    rows[r][0] -= rs;
  }
  double mass_row_sum = 0.0;
  for (int d = 0; d < nd; ++d) mass_row_sum += rows[MS][d];

  // Plane wave applied in shifted form exp(i t) - 1, which keeps the
  // constant-annihilating rows exact near t = 0.
  std::array<Complex, 4> applied{};
  for (int d = 0; d < nd; ++d) {
    const auto gp = dm.dof_grid_point(d);
    const double t = components.x * (gp[0] - 1.0) + components.y * (gp[1] - 1.0);
    const double sh = std::sin(0.5 * t);
    Complex val(-2.0 * sh * sh, std::sin(t));
    if (scheme == Scheme::RT2NC) {
      const double sc =
          sinc(0.5 * (dm.dof_is_vertical_edge(d) ? components.y : components.x));
      val = val * sc + (sc - 1.0);
    }
    for (int r = 0; r < 4; ++r) applied[r] += rows[r][d] * val;
  }
  applied[MS] += mass_row_sum;

  QuadraticInOmega q;
  q.c = flow.axx() * applied[XX].real() + applied[YY].real();
  if (form == Formulation::Convected) {
    q.a = -applied[MS].real();
    q.b = 2.0 * flow.mach * applied[CV].imag();
  } else {
    q.a = -applied[MS].real() / flow.axx();
    q.b = 0.0;
  }
  return q;
}

ConvectedSolver::ConvectedSolver(Scheme scheme, const QuadMesh& mesh, double omega,
                                 const FlowParams& flow)
    : scheme_(scheme), mesh_(mesh), omega_(omega), flow_(flow),
      lu_(assemble_system(scheme, mesh, omega, flow)) {}

int ConvectedSolver::ndof() const { return DofMap(scheme_, mesh_.n).ndof(); }

std::vector<Complex> ConvectedSolver::solve(double theta) const {
  return lu_.solve(assemble_rhs(scheme_, mesh_, omega_, flow_, theta));
}

EnergyNorms ConvectedSolver::solve_energy(double theta) const {
  return energy_norm_error(scheme_, mesh_, omega_, flow_, theta, solve(theta));
}

int resolution_for_frequency(double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("frequency must be positive");
  return static_cast<int>(std::ceil(std::pow(omega, 1.5) - 1e-12));
}

SystemSizing system_sizing(Scheme scheme, int n) {
  const DofMap dm(scheme, n);
  SystemSizing s;
  s.n = n;
  s.ndof = dm.ndof();
  s.bandwidth = dm.bandwidth();
  const long long ldab = 3LL * s.bandwidth + 1;
  s.factor_bytes = 16LL * s.ndof * ldab + 4LL * s.ndof;
  return s;
}

}  // namespace convdisp
