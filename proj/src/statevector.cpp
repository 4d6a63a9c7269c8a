#include "graphstab/statevector.hpp"

#include <algorithm>
#include <cmath>

#include "graphstab/error.hpp"
#include "graphstab/simd/kernels.hpp"

namespace graphstab {
namespace {

void require_same_register(const StateVector& s, const StateVector& t) {
  if (s.size() != t.size())
    throw Error("state size mismatch: " + std::to_string(s.size()) + " vs " +
                std::to_string(t.size()) + " qubits");
}

void require_pauli_size(const PauliString& p, const StateVector& s) {
  if (p.size() != s.size())
    throw Error("Pauli acts on " + std::to_string(p.size()) +
                " qubits but state has " + std::to_string(s.size()));
}

// Converts position-indexed Pauli masks (bit q = position q) to basis-index
// masks (position 0 = most significant).
std::uint64_t to_index_mask(std::uint64_t position_mask, std::size_t n) {
  std::uint64_t out = 0;
  for (std::size_t q = 0; q < n; ++q)
    if ((position_mask >> q) & 1u) out |= std::uint64_t{1} << (n - 1 - q);
  return out;
}

Complex i_pow(int k) {
  static const Complex table[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((k % 4) + 4) % 4];
}

}  // namespace

StateVector::StateVector(Register qubits, std::vector<Complex> amplitudes)
    : qubits_(std::move(qubits)), amps_(std::move(amplitudes)) {
  if (qubits_.size() == 0) throw Error("state needs at least one qubit");
  if (qubits_.size() > kMaxStateQubits)
    throw Error("state has " + std::to_string(qubits_.size()) +
                " qubits; at most 12 are supported");
  if (amps_.size() != (std::size_t{1} << qubits_.size()))
    throw Error("expected " + std::to_string(std::size_t{1} << qubits_.size()) +
                " amplitudes, got " + std::to_string(amps_.size()));
  if (std::abs(norm() - 1.0) > kAmplitudeTolerance)
    throw Error("state is not normalized (norm " + std::to_string(norm()) + ")");
}

StateVector StateVector::basis(Register qubits, std::uint64_t index) {
  const std::size_t n = qubits.size();
  if (n > kMaxStateQubits) throw Error("at most 12 qubits are supported");
  std::vector<Complex> amps(std::size_t{1} << n, 0.0);
  amps.at(index) = 1.0;
  return StateVector(std::move(qubits), std::move(amps));
}

StateVector StateVector::uniform(Register qubits) {
  const std::size_t n = qubits.size();
  if (n > kMaxStateQubits) throw Error("at most 12 qubits are supported");
  const std::size_t dim = std::size_t{1} << n;
  return StateVector(std::move(qubits),
                     std::vector<Complex>(dim, 1.0 / std::sqrt(double(dim))));
}

double StateVector::norm() const {
  const Complex nn = simd::active_kernels().inner_product(amps_, amps_);
  return std::sqrt(nn.real());
}

StateVector build_chi00() {
  const double a = 1.0 / (2.0 * std::sqrt(2.0));
  std::vector<Complex> amps(16, 0.0);
  for (int idx : {0b0000, 0b0110, 0b1001, 0b1010, 0b1100, 0b1111}) amps[idx] = a;
  for (int idx : {0b0011, 0b0101}) amps[idx] = -a;
  return StateVector(Register({"A3", "A4", "B1", "B2"}), std::move(amps));
}

StateVector build_graph_state(const Graph& g) {
  if (g.size() > kMaxStateQubits)
    throw Error("graph has " + std::to_string(g.size()) +
                " vertices; dense graph states support at most 12");
  StateVector s = StateVector::uniform(g.vertices());
  const auto& k = simd::active_kernels();
  for (const auto& [a, b] : g.edges())
    k.negate_masked(s.amps_, s.bit_of(a) | s.bit_of(b));
  return s;
}

StateVector apply_controlled_phase(const StateVector& s, std::string_view a,
                                   std::string_view b) {
  const auto pa = static_cast<std::size_t>(s.qubits().position_of(a));
  const auto pb = static_cast<std::size_t>(s.qubits().position_of(b));
  if (pa == pb)
    throw Error("controlled-phase needs two distinct qubits, got '" +
                std::string(a) + "' twice");
  StateVector out = s;
  simd::active_kernels().negate_masked(out.amps_, s.bit_of(pa) | s.bit_of(pb));
  return out;
}

StateVector apply_single_qubit(const StateVector& s, std::size_t position,
                               const Mat2& m) {
  if (position >= s.size()) throw Error("qubit position out of range");
  StateVector out = s;
  simd::active_kernels().apply_single_qubit(out.amps_, s.bit_of(position),
                                            m.data());
  return out;
}

StateVector apply_local(const LocalUnitary& u, const StateVector& s) {
  if (u.size() != s.size())
    throw Error("local unitary acts on " + std::to_string(u.size()) +
                " qubits but state has " + std::to_string(s.size()));
  const auto& k = simd::active_kernels();
  StateVector out = s;
  for (std::size_t q = 0; q < u.size(); ++q) {
    if (mat2::is_identity(u.factor(q))) continue;
    k.apply_single_qubit(out.amps_, s.bit_of(q), u.factor(q).data());
  }
  if (u.global_phase() != Complex(1.0, 0.0)) k.scale(out.amps_, u.global_phase());
  return out;
}

StateVector apply_pauli(const PauliString& p, const StateVector& s) {
  require_pauli_size(p, s);
  StateVector out = s;
  // i^k X^x Z^z: Z acts first (sign by parity), then X permutes.
  simd::active_kernels().apply_pauli(s.amps_, out.amps_,
                                     to_index_mask(p.xbits(), s.size()),
                                     to_index_mask(p.zbits(), s.size()),
                                     i_pow(p.phase_exp()));
  return out;
}

Complex inner_product(const StateVector& s, const StateVector& t) {
  require_same_register(s, t);
  return simd::active_kernels().inner_product(s.amplitudes(), t.amplitudes());
}

double expectation(const PauliString& p, const StateVector& s) {
  require_pauli_size(p, s);
  if (!p.is_hermitian())
    throw Error("expectation needs a hermitian Pauli, got " + to_string(p));
  return inner_product(s, apply_pauli(p, s)).real();
}

double max_abs_difference(const StateVector& s, const StateVector& t) {
  require_same_register(s, t);
  double worst = 0.0;
  for (std::size_t i = 0; i < s.dimension(); ++i)
    worst = std::max(worst, std::abs(s.amplitude(i) - t.amplitude(i)));
  return worst;
}

bool approx_equal(const StateVector& s, const StateVector& t, double tol) {
  return max_abs_difference(s, t) <= tol;
}

bool equal_up_to_global_phase(const StateVector& s, const StateVector& t,
                              double tol) {
  return std::abs(std::abs(inner_product(s, t)) - 1.0) <= tol;
}

}  // namespace graphstab
