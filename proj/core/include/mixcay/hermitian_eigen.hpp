#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mixcay {

/// Dense row-major square matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * n_ + c]; }
  const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using ComplexMatrix = Matrix<std::complex<double>>;

struct HermitianEigenResult {
  std::vector<double> values;                 // ascending
  std::vector<std::vector<std::complex<double>>> vectors;  // vectors[i] pairs with values[i]; empty if not requested
  int sweeps = 0;
};

struct JacobiOptions {
  int max_sweeps = 100;
  double relative_offdiag = 1e-15;
};

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Each rotation first removes the phase of the pivot a_pq, then applies the
/// real symmetric 2x2 rotation that annihilates it. Only the Hermitian part of
/// the input is used. Throws ConvergenceFailure if the off-diagonal Frobenius
/// norm does not fall below `relative_offdiag * ||A||_F` within `max_sweeps`.
HermitianEigenResult hermitian_eigen(const ComplexMatrix& a, bool want_vectors = false,
                                     const JacobiOptions& options = {});

double frobenius_norm(const ComplexMatrix& a);

/// max_i ||A v_i - lambda_i v_i||_2 over the returned eigenpairs.
double max_residual(const ComplexMatrix& a, const HermitianEigenResult& eig);

}  // namespace mixcay
