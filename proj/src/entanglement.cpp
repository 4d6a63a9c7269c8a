#include "graphstab/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>

#include "graphstab/error.hpp"

namespace graphstab {
namespace {

constexpr double kTol = 1e-9;
constexpr double kEigenFloor = 1e-12;

}  // namespace

Bipartition::Bipartition(const Register& qubits,
                         std::span<const std::string> side_a)
    : qubits_(qubits) {
  std::set<int> chosen;
  for (const auto& name : side_a) {
    if (!chosen.insert(qubits.position_of(name)).second)
      throw Error("qubit '" + name + "' listed twice in cut");
  }
  if (chosen.empty()) throw Error("cut side must be nonempty");
  if (chosen.size() == qubits.size())
    throw Error("cut side must leave at least one qubit on the other side");
  for (std::size_t q = 0; q < qubits.size(); ++q) {
    if (chosen.contains(static_cast<int>(q)))
      side_a_.push_back(qubits.label(q));
    else
      side_b_.push_back(qubits.label(q));
  }
}

Bipartition Bipartition::complement() const {
  Bipartition out;
  out.qubits_ = qubits_;
  out.side_a_ = side_b_;
  out.side_b_ = side_a_;
  return out;
}

std::vector<Bipartition> Bipartition::all_cuts(const Register& qubits) {
  const std::size_t n = qubits.size();
  std::vector<Bipartition> cuts;
  if (n < 2) return cuts;
  // Subsets containing position 0, excluding the full register.
  for (std::uint64_t rest = 0; rest + 1 < (std::uint64_t{1} << (n - 1)); ++rest) {
    std::vector<std::string> names{qubits.names()[0]};
    for (std::size_t q = 1; q < n; ++q)
      if ((rest >> (q - 1)) & 1u) names.push_back(qubits.names()[q]);
    cuts.emplace_back(qubits, names);
  }
  return cuts;
}

DensityMatrix::DensityMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0 || entries_.size() != dim_ * dim_)
    throw Error("density matrix entries do not match dimension");
  Eigen::MatrixXcd m(dim_, dim_);
  Complex trace = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    trace += at(i, i);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (std::abs(at(i, j) - std::conj(at(j, i))) > kTol)
        throw Error("density matrix is not hermitian");
      m(Eigen::Index(i), Eigen::Index(j)) = at(i, j);
    }
  }
  if (std::abs(trace - 1.0) > kTol)
    throw Error("density matrix trace is " + std::to_string(trace.real()));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error("density matrix eigendecomposition failed");
  const auto& ev = solver.eigenvalues();
  eigenvalues_.assign(ev.data(), ev.data() + ev.size());
  if (eigenvalues_.front() < -kTol)
    throw Error("density matrix has negative eigenvalue " +
                std::to_string(eigenvalues_.front()));
}

DensityMatrix reduce(const StateVector& s, const Bipartition& cut) {
  std::vector<std::uint64_t> kept_bits, traced_bits;
  for (const auto& q : cut.side_a()) {
    if (!s.qubits().contains(q.name) || s.qubits().position_of(q.name) != q.position)
      throw Error("cut label '" + q.name + "' does not match the state");
    kept_bits.push_back(s.bit_of(static_cast<std::size_t>(q.position)));
  }
  for (const auto& q : cut.side_b()) {
    if (!s.qubits().contains(q.name) || s.qubits().position_of(q.name) != q.position)
      throw Error("cut label '" + q.name + "' does not match the state");
    traced_bits.push_back(s.bit_of(static_cast<std::size_t>(q.position)));
  }
  if (kept_bits.size() + traced_bits.size() != s.size())
    throw Error("cut does not cover the state's qubits");

  // Assemble a basis index from a kept-side index and a traced-side index;
  // the first listed qubit is the most significant digit on each side.
  auto scatter = [](std::uint64_t local, const std::vector<std::uint64_t>& bits) {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < bits.size(); ++k)
      if ((local >> (bits.size() - 1 - k)) & 1u) out |= bits[k];
    return out;
  };

  const std::size_t dim = std::size_t{1} << kept_bits.size();
  const std::size_t rest = std::size_t{1} << traced_bits.size();
  std::vector<std::uint64_t> row_base(dim), col_offset(rest);
  for (std::size_t i = 0; i < dim; ++i) row_base[i] = scatter(i, kept_bits);
  for (std::size_t r = 0; r < rest; ++r) col_offset[r] = scatter(r, traced_bits);

  const auto amps = s.amplitudes();
  std::vector<Complex> rho(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      Complex acc = 0.0;
      for (std::size_t r = 0; r < rest; ++r)
        acc += amps[row_base[i] | col_offset[r]] *
               std::conj(amps[row_base[j] | col_offset[r]]);
      rho[i * dim + j] = acc;
      rho[j * dim + i] = std::conj(acc);
    }
  return DensityMatrix(dim, std::move(rho));
}

double entropy(const DensityMatrix& rho) {
  double h = 0.0;
  for (double lambda : rho.eigenvalues())
    if (lambda > kEigenFloor) h -= lambda * std::log2(lambda);
  return h;
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = sum_ij |rho_ij|^2 for hermitian rho.
  double acc = 0.0;
  for (const auto& e : rho.entries()) acc += std::norm(e);
  return acc;
}

bool is_product_across(const StateVector& s, const Bipartition& cut) {
  return std::abs(purity(reduce(s, cut)) - 1.0) <= kTol;
}

}  // namespace graphstab
