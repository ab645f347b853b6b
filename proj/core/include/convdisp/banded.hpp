#pragma once

#include <complex>
#include <vector>

namespace convdisp {

// Complex band matrix in LAPACK band layout, column-major with leading
// dimension 2*kl + ku + 1; the top kl rows of each column are fill-in slack
// so the buffer can be factorized in place.
class BandedComplexMatrix {
 public:
  BandedComplexMatrix(int dimension, int kl, int ku);

  int dimension() const { return n_; }
  int lower() const { return kl_; }
  int upper() const { return ku_; }
  int ldab() const { return 2 * kl_ + ku_ + 1; }

  bool in_band(int i, int j) const {
    return i >= 0 && i < n_ && j >= 0 && j < n_ && i - j <= kl_ && j - i <= ku_;
  }

  // (i, j) must be inside the band for at/add; get is zero outside.
  std::complex<double>& at(int i, int j);
  std::complex<double> get(int i, int j) const;
  void add(int i, int j, std::complex<double> value) { at(i, j) += value; }

  std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& x) const;

  const std::vector<std::complex<double>>& storage() const { return ab_; }

 private:
  friend class BandedLU;
  int n_, kl_, ku_;
  std::vector<std::complex<double>> ab_;
};

// LU with partial pivoting of a band matrix, factorized in place; the
// constructor consumes the matrix buffer, so pass by std::move when the
// original is no longer needed.  Throws std::runtime_error("singular system")
// when a pivot falls below 1e-14 times the largest assembled magnitude.
class BandedLU {
 public:
  explicit BandedLU(BandedComplexMatrix matrix);

  int dimension() const { return n_; }
  std::vector<std::complex<double>> solve(std::vector<std::complex<double>> rhs) const;

  // Raw factor buffer, exposed so determinism can be checked bit for bit.
  const std::vector<std::complex<double>>& factor_data() const { return ab_; }
  const std::vector<int>& pivots() const { return ipiv_; }

 private:
  int n_, kl_, ku_;
  std::vector<std::complex<double>> ab_;
  std::vector<int> ipiv_;
};

}  // namespace convdisp
