#pragma once

#include <array>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "convdisp/banded.hpp"
#include "convdisp/dispersion.hpp"
#include "convdisp/types.hpp"

namespace convdisp {

using Complex = std::complex<double>;

// Uniform n x n quadrilateral mesh of the unit square.
struct QuadMesh {
  int n = 1;
  double h() const { return 1.0 / n; }
  int cells() const { return n * n; }
};

// Gauss-Legendre nodes and weights on [-1, 1]; 2, 3 and 5 points supported.
std::vector<std::pair<double, double>> gauss_rule(int npts);

// Reference-cell shape values and gradients, local order [right, left, top,
// bottom] edge functions for the nonconforming pair and counterclockwise
// corners from (-1,-1) for the bilinear element.
std::array<double, 4> ref_basis_vals(Scheme scheme, double xi, double eta);
std::array<std::array<double, 2>, 4> ref_basis_grads(Scheme scheme, double xi, double eta);

// Reference integrals: kxx = (d_xi phi_j, d_xi phi_i), kyy likewise in eta,
// conv = (d_xi phi_j, phi_i) with the test index on rows, mass = (phi_j, phi_i).
struct ElementMatrices {
  std::array<std::array<double, 4>, 4> kxx{}, kyy{}, conv{}, mass{};
};
ElementMatrices reference_matrices(Scheme scheme, int quad_pts = 3);

// Global numbering: bilinear nodes row-major; edge unknowns in row layers of
// 2n+1 (the n horizontal edges of a row first, then its n+1 vertical edges).
class DofMap {
 public:
  DofMap(Scheme scheme, int n);

  Scheme scheme() const { return scheme_; }
  int n() const { return n_; }
  int ndof() const;
  int bandwidth() const;
  std::array<int, 4> cell_dofs(int i, int j) const;
  bool on_boundary(int dof) const;
  // Location in grid units (cell size 1); edge unknowns sit at midpoints.
  std::array<double, 2> dof_grid_point(int dof) const;
  bool dof_is_vertical_edge(int dof) const;

 private:
  Scheme scheme_;
  int n_;
};

struct BoundaryFacet {
  int ci = 0, cj = 0;  // owning cell
  int side = 0;        // 0 right, 1 left, 2 top, 3 bottom; matches edge-local order
  double nx = 0.0, ny = 0.0;
  double mx = 0.0, my = 0.0;  // physical midpoint
};
std::vector<BoundaryFacet> boundary_facets(const QuadMesh& mesh);

// Dense real operator blocks for small meshes; row-major ndof x ndof.
struct DenseBlocks {
  int ndof = 0;
  std::vector<double> kxx, kyy, conv, mass, boundary;
};
DenseBlocks assemble_dense_blocks(Scheme scheme, const QuadMesh& mesh);

// Band form of (1-M^2) Kxx + Kyy - 2i w M Conv - w^2 Mass - i w Boundary.
// Boundary coupling uses a two-point Gauss trace rule for the bilinear
// element and the midpoint sample carried by the facet's own edge unknown for
// the nonconforming pair.
BandedComplexMatrix assemble_system(Scheme scheme, const QuadMesh& mesh, double omega,
                                    const FlowParams& flow);

// Load vector of the impedance data of the exact plane wave with wavenumber
// omega / (1 + M cos theta), discretized with the same boundary rules.
std::vector<Complex> assemble_rhs(Scheme scheme, const QuadMesh& mesh, double omega,
                                  const FlowParams& flow, double theta);

// Degrees of freedom of the exact plane wave: point values for the bilinear
// and midpoint-value elements, tangential cell averages for the mean-value
// element.
std::vector<Complex> interpolate_exact(Scheme scheme, const QuadMesh& mesh, double k,
                                       double theta);

// Broken energy norm against the exact plane wave, elementwise
// (1-M^2)|d_x e|^2 + |d_y e|^2 + w^2 |e|^2 with a 3x3 Gauss rule.
struct EnergyNorms {
  double error = 0.0;
  double exact = 0.0;
};
EnergyNorms energy_norm_error(Scheme scheme, const QuadMesh& mesh, double omega,
                              const FlowParams& flow, double theta,
                              const std::vector<Complex>& dofs);

// Symbol quadratic recovered from a 2x2 patch of unit cells: interior test
// rows are assembled with the same quadrature as the solver, constant-
// annihilating rows get their accumulated row-sum roundoff folded into one
// anchor entry, and the plane wave is applied in shifted form exp(i t) - 1.
// Independent of scheme_quadratic by construction.
QuadraticInOmega stencil_oracle(Scheme scheme, Formulation form, const FlowParams& flow,
                                const Vec2& components);

// Assembles and factorizes once per (scheme, mesh, omega, M); right-hand
// sides for different incidence angles reuse the factorization.
class ConvectedSolver {
 public:
  ConvectedSolver(Scheme scheme, const QuadMesh& mesh, double omega, const FlowParams& flow);

  const QuadMesh& mesh() const { return mesh_; }
  int ndof() const;
  std::vector<Complex> solve(double theta) const;
  EnergyNorms solve_energy(double theta) const;

 private:
  Scheme scheme_;
  QuadMesh mesh_;
  double omega_;
  FlowParams flow_;
  BandedLU lu_;
};

// Mesh resolution tying the cell size to the frequency via w^3 h^2 = 1.
int resolution_for_frequency(double omega);

struct SystemSizing {
  int n = 0;
  long long ndof = 0;
  int bandwidth = 0;
  long long factor_bytes = 0;
};
SystemSizing system_sizing(Scheme scheme, int n);

}  // namespace convdisp
