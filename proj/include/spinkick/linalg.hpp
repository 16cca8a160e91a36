#pragma once

#include <complex>
#include <cstddef>
#include <string>

#include <Eigen/Dense>

#include "spinkick/errors.hpp"

namespace spinkick {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Largest qubit count for which dense 2^n x 2^n operators are built.
inline constexpr int kDenseQubitCap = 12;

// Complex amplitudes over the 2^n-dimensional Hilbert space. Basis indices
// are |b1 b2 ... bn> with site 1 in the most significant bit.
struct StateVector {
  int num_qubits = 0;
  Vector amps;
};

struct DenseOperator {
  int num_qubits = 0;
  Matrix mat;
};

// Full spectral decomposition of a Hermitian operator: eigenvalues ascending,
// eigenvectors as the columns of a unitary matrix.
struct Spectrum {
  int num_qubits = 0;
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;
};

inline std::size_t hilbert_dim(int num_qubits) {
  return std::size_t{1} << num_qubits;
}

inline void require_dense_cap(int num_qubits, const char* what) {
  if (num_qubits < 1 || num_qubits > kDenseQubitCap) {
    throw ValidationError(std::string(what) + ": qubit count " +
                          std::to_string(num_qubits) + " outside dense range [1, " +
                          std::to_string(kDenseQubitCap) + "]");
  }
}

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double identity_residual(const Matrix& m) {
  return max_abs(m - Matrix::Identity(m.rows(), m.cols()));
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace spinkick
