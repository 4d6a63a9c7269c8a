#include "graphstab/mat2.hpp"

#include <algorithm>
#include <cmath>

namespace graphstab::mat2 {

Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2 pauli_y() { return {0.0, Complex(0, -1), Complex(0, 1), 0.0}; }
Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

Mat2 hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return {h, h, h, -h};
}

Mat2 phase_s() { return {1.0, 0.0, 0.0, Complex(0, 1)}; }

Mat2 multiply(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 adjoint(const Mat2& a) {
  return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

Mat2 scaled(const Mat2& a, Complex c) {
  return {a[0] * c, a[1] * c, a[2] * c, a[3] * c};
}

Mat2 exp_i(double angle, const Mat2& involution) {
  const Complex c = std::cos(angle);
  const Complex s = Complex(0, std::sin(angle));
  const Mat2 id = identity();
  Mat2 out;
  for (int k = 0; k < 4; ++k) out[k] = c * id[k] + s * involution[k];
  return out;
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

bool is_unitary(const Mat2& a, double tol) {
  return max_abs_diff(multiply(adjoint(a), a), identity()) <= tol;
}

bool is_identity(const Mat2& a, double tol) {
  return max_abs_diff(a, identity()) <= tol;
}

Complex hs_inner(const Mat2& a, const Mat2& b) {
  Complex acc = 0.0;
  for (int k = 0; k < 4; ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

Mat2 canonical_phase(const Mat2& a, double tol) {
  for (const auto& entry : a) {
    const double mag = std::abs(entry);
    if (mag > tol) return scaled(a, std::conj(entry) / mag);
  }
  return a;
}

}  // namespace graphstab::mat2
