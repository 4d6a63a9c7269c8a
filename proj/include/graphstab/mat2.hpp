#pragma once

#include <array>
#include <complex>

namespace graphstab {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<Complex, 4>;

namespace mat2 {

Mat2 identity();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
Mat2 hadamard();
Mat2 phase_s();

Mat2 multiply(const Mat2& a, const Mat2& b);
Mat2 adjoint(const Mat2& a);
Mat2 scaled(const Mat2& a, Complex c);

/// exp(i * angle * P) = cos(angle) I + i sin(angle) P for an involutory P.
Mat2 exp_i(double angle, const Mat2& involution);

double max_abs_diff(const Mat2& a, const Mat2& b);
bool is_unitary(const Mat2& a, double tol = 1e-9);
bool is_identity(const Mat2& a, double tol = 0.0);

/// tr(a^dagger b)
Complex hs_inner(const Mat2& a, const Mat2& b);

/// Rescales by a unit phase so the first entry with modulus above tol is
/// real and positive.
Mat2 canonical_phase(const Mat2& a, double tol = 1e-9);

}  // namespace mat2
}  // namespace graphstab
