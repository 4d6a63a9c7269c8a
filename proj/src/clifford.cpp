#include "graphstab/clifford.hpp"

#include <cmath>
#include <deque>

#include "graphstab/error.hpp"

namespace graphstab {
namespace {

constexpr double kTol = 1e-9;

bool same_up_to_phase(const Mat2& a, const Mat2& b) {
  return std::abs(std::abs(mat2::hs_inner(a, b)) - 2.0) <= kTol;
}

PauliString conjugation_image(const Mat2& c, const Mat2& pauli) {
  const Mat2 image = mat2::multiply(mat2::multiply(c, pauli), mat2::adjoint(c));
  auto matched = match_signed_pauli(image);
  if (!matched) throw Error("clifford closure produced a non-Pauli image");
  return *matched;
}

}  // namespace

std::optional<PauliString> match_signed_pauli(const Mat2& m, double tol) {
  static const std::array<std::pair<Mat2, PauliLetter>, 3> kCandidates{{
      {mat2::pauli_x(), PauliLetter::X},
      {mat2::pauli_y(), PauliLetter::Y},
      {mat2::pauli_z(), PauliLetter::Z},
  }};
  for (const auto& [pm, letter] : kCandidates) {
    const PauliString base = PauliString::single(1, 0, letter);
    if (mat2::max_abs_diff(m, pm) <= tol) return base;
    if (mat2::max_abs_diff(m, mat2::scaled(pm, -1.0)) <= tol) return base.negated();
  }
  return std::nullopt;
}

CliffordGroup::CliffordGroup() {
  struct Generator {
    char name;
    Mat2 matrix;
  };
  const std::array<Generator, 2> generators{{{'H', mat2::hadamard()},
                                             {'S', mat2::phase_s()}}};

  auto find = [this](const Mat2& m) -> std::optional<std::size_t> {
    for (const auto& e : elements_)
      if (same_up_to_phase(e.matrix, m)) return e.index;
    return std::nullopt;
  };

  std::deque<std::size_t> frontier;
  auto admit = [&](std::string word, const Mat2& m) {
    SingleQubitClifford c;
    c.index = elements_.size();
    c.word = std::move(word);
    c.matrix = mat2::canonical_phase(m);
    c.x_image = conjugation_image(c.matrix, mat2::pauli_x());
    c.z_image = conjugation_image(c.matrix, mat2::pauli_z());
    elements_.push_back(std::move(c));
    frontier.push_back(elements_.back().index);
  };

  admit("", mat2::identity());
  while (!frontier.empty()) {
    const std::size_t current = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      const Mat2 next = mat2::multiply(g.matrix, elements_[current].matrix);
      if (!find(next)) admit(std::string(1, g.name) + elements_[current].word, next);
    }
  }
  if (elements_.size() != 24)
    throw Error("clifford closure produced " + std::to_string(elements_.size()) +
                " elements");

  inverses_.resize(elements_.size());
  for (const auto& e : elements_) {
    auto inv = find(mat2::adjoint(e.matrix));
    if (!inv) throw Error("clifford closure is not closed under inversion");
    inverses_[e.index] = *inv;
  }
}

const CliffordGroup& CliffordGroup::instance() {
  static const CliffordGroup group;
  return group;
}

std::optional<std::size_t> CliffordGroup::identify(const Mat2& m) const {
  for (const auto& e : elements_)
    if (same_up_to_phase(e.matrix, m)) return e.index;
  return std::nullopt;
}

PauliString CliffordGroup::conjugate(std::size_t i,
                                     const PauliString& single) const {
  if (single.size() != 1) throw Error("expected a one-qubit Pauli");
  const auto& c = elements_.at(i);
  // i^k X^x Z^z  ->  i^k (C X C^dag)^x (C Z C^dag)^z
  PauliString out(1, 0, 0, single.phase_exp());
  if (single.x(0)) out = out * c.x_image;
  if (single.z(0)) out = out * c.z_image;
  return out;
}

std::vector<std::size_t> clifford_indices(const LocalUnitary& u) {
  const auto& group = CliffordGroup::instance();
  std::vector<std::size_t> out;
  out.reserve(u.size());
  for (std::size_t q = 0; q < u.size(); ++q) {
    auto idx = group.identify(u.factor(q));
    if (!idx)
      throw Error("factor on qubit " + std::to_string(q) + " is not a Clifford");
    out.push_back(*idx);
  }
  return out;
}

PauliString conjugate_by_local(const LocalUnitary& u, const PauliString& p) {
  if (u.size() != p.size())
    throw Error("local unitary acts on " + std::to_string(u.size()) +
                " qubits but Pauli has " + std::to_string(p.size()));
  const auto& group = CliffordGroup::instance();
  const auto indices = clifford_indices(u);

  std::uint64_t x = 0, z = 0;
  int phase = p.phase_exp();
  for (std::size_t q = 0; q < p.size(); ++q) {
    if (!p.x(q) && !p.z(q)) continue;
    const PauliString local(1, p.x(q) ? 1u : 0u, p.z(q) ? 1u : 0u, 0);
    const PauliString image = group.conjugate(indices[q], local);
    if (image.x(0)) x |= std::uint64_t{1} << q;
    if (image.z(0)) z |= std::uint64_t{1} << q;
    phase += image.phase_exp();
  }
  return PauliString(p.size(), x, z, phase);
}

}  // namespace graphstab
