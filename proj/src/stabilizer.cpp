#include "graphstab/stabilizer.hpp"

#include <algorithm>

#include "graphstab/clifford.hpp"
#include "graphstab/error.hpp"

namespace graphstab {

StabilizerSet::StabilizerSet(std::vector<PauliString> generators)
    : generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.size() != generators_.front().size())
      throw Error("stabilizer generators act on different qubit counts");
    if (!g.sign())
      throw Error("stabilizer generator " + to_string(g) +
                  " is not hermitian with a real sign");
    for (std::size_t j = 0; j < i; ++j)
      if (!commutes(generators_[j], g))
        throw Error("stabilizer generators " + to_string(generators_[j]) +
                    " and " + to_string(g) + " anticommute");
  }
  if (!independent(generators_))
    throw Error("stabilizer generators are not independent");
}

std::size_t StabilizerSet::qubit_count() const {
  return generators_.empty() ? 0 : generators_.front().size();
}

StabilizerSet graph_generators(const Graph& g) {
  std::vector<PauliString> gens;
  gens.reserve(g.size());
  for (std::size_t a = 0; a < g.size(); ++a) {
    // Adjacency rows use the same bit-per-position layout as Pauli masks.
    gens.emplace_back(g.size(), std::uint64_t{1} << a, g.row(a), 0);
  }
  return StabilizerSet(std::move(gens));
}

double stabilizer_residual(const StabilizerSet& set, const StateVector& s) {
  if (set.qubit_count() != 0 && set.qubit_count() != s.size())
    throw Error("stabilizer set acts on " + std::to_string(set.qubit_count()) +
                " qubits but state has " + std::to_string(s.size()));
  double worst = 0.0;
  for (const auto& k : set.generators())
    worst = std::max(worst, max_abs_difference(apply_pauli(k, s), s));
  return worst;
}

bool stabilizes(const StabilizerSet& set, const StateVector& s, double tol) {
  return stabilizer_residual(set, s) <= tol;
}

StabilizerSet conjugate_set(const LocalUnitary& u, const StabilizerSet& set) {
  std::vector<PauliString> out;
  out.reserve(set.size());
  for (const auto& k : set.generators()) out.push_back(conjugate_by_local(u, k));
  return StabilizerSet(std::move(out));
}

std::string to_string(const StabilizerSet& set) {
  std::string out;
  for (const auto& k : set.generators()) {
    out += to_string(k);
    out += '\n';
  }
  return out;
}

}  // namespace graphstab
