#include "convdisp/banded.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

extern "C" {
void zgbtrf_(const int* m, const int* n, const int* kl, const int* ku, std::complex<double>* ab,
             const int* ldab, int* ipiv, int* info);
void zgbtrs_(const char* trans, const int* n, const int* kl, const int* ku, const int* nrhs,
             const std::complex<double>* ab, const int* ldab, const int* ipiv,
             std::complex<double>* b, const int* ldb, int* info, size_t trans_len);
}

namespace convdisp {

BandedComplexMatrix::BandedComplexMatrix(int dimension, int kl, int ku)
    : n_(dimension), kl_(kl), ku_(ku) {
  if (dimension <= 0 || kl < 0 || ku < 0) throw std::invalid_argument("bad band shape");
  ab_.assign(static_cast<size_t>(n_) * ldab(), {0.0, 0.0});
}

std::complex<double>& BandedComplexMatrix::at(int i, int j) {
  if (!in_band(i, j)) throw std::out_of_range("entry outside band");
  return ab_[static_cast<size_t>(j) * ldab() + (kl_ + ku_ + i - j)];
}

std::complex<double> BandedComplexMatrix::get(int i, int j) const {
  if (!in_band(i, j)) return {0.0, 0.0};
  return ab_[static_cast<size_t>(j) * ldab() + (kl_ + ku_ + i - j)];
}

std::vector<std::complex<double>> BandedComplexMatrix::apply(
    const std::vector<std::complex<double>>& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("size mismatch");
  std::vector<std::complex<double>> y(n_, {0.0, 0.0});
  const int ld = ldab();
  for (int j = 0; j < n_; ++j) {
    const int ilo = j - ku_ > 0 ? j - ku_ : 0;
    const int ihi = j + kl_ < n_ - 1 ? j + kl_ : n_ - 1;
    const std::complex<double>* col = ab_.data() + static_cast<size_t>(j) * ld;
    for (int i = ilo; i <= ihi; ++i) y[i] += col[kl_ + ku_ + i - j] * x[j];
  }
  return y;
}

BandedLU::BandedLU(BandedComplexMatrix matrix)
    : n_(matrix.n_), kl_(matrix.kl_), ku_(matrix.ku_), ab_(std::move(matrix.ab_)), ipiv_(matrix.n_) {
  double largest = 0.0;
  for (const auto& v : ab_) largest = std::max(largest, std::abs(v));
  if (largest == 0.0) throw std::runtime_error("singular system");

  const int ldab = 2 * kl_ + ku_ + 1;
  int info = 0;
  zgbtrf_(&n_, &n_, &kl_, &ku_, ab_.data(), &ldab, ipiv_.data(), &info);
  if (info < 0) throw std::logic_error("band factorization: bad argument " + std::to_string(-info));
  if (info > 0) throw std::runtime_error("singular system");
  const double floor = 1e-14 * largest;
  for (int j = 0; j < n_; ++j) {
    const std::complex<double> pivot = ab_[static_cast<size_t>(j) * ldab + (kl_ + ku_)];
    if (std::abs(pivot) < floor) throw std::runtime_error("singular system");
  }
}

std::vector<std::complex<double>> BandedLU::solve(std::vector<std::complex<double>> rhs) const {
  if (static_cast<int>(rhs.size()) != n_) throw std::invalid_argument("size mismatch");
  const int ldab = 2 * kl_ + ku_ + 1;
  const int nrhs = 1;
  int info = 0;
  zgbtrs_("N", &n_, &kl_, &ku_, &nrhs, ab_.data(), &ldab, ipiv_.data(), rhs.data(), &n_, &info, 1);
  if (info != 0) throw std::logic_error("band solve: bad argument " + std::to_string(-info));
  return rhs;
}

}  // namespace convdisp
