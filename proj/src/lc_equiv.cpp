#include "graphstab/lc_equiv.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <unordered_map>

#include "graphstab/clifford.hpp"
#include "graphstab/error.hpp"

namespace graphstab {

LocalUnitary tau_unitary(const Graph& g, std::string_view a) {
  const auto pos = static_cast<std::size_t>(g.vertices().position_of(a));
  constexpr double quarter = std::numbers::pi / 4.0;
  std::vector<Mat2> factors(g.size(), mat2::identity());
  factors[pos] = mat2::exp_i(quarter, mat2::pauli_x());
  for (std::size_t b = 0; b < g.size(); ++b)
    if (g.has_edge(pos, b)) factors[b] = mat2::exp_i(-quarter, mat2::pauli_z());
  const double degree = static_cast<double>(g.degree(pos));
  return LocalUnitary(std::polar(1.0, quarter * (degree - 1.0)),
                      std::move(factors));
}

OrbitReport enumerate_orbit(const Graph& seed, std::size_t max_members) {
  if (seed.size() > kMaxStateQubits)
    throw Error("orbit enumeration supports at most 12 vertices, got " +
                std::to_string(seed.size()));
  if (max_members == 0) throw Error("max_members must be positive");

  OrbitReport report{seed, {}, false};
  std::unordered_map<GraphKey, std::size_t, GraphKeyHash> seen;
  report.members.push_back({seed, LocalUnitary::identity(seed.size()), {}});
  seen.emplace(canonical_key(seed), 0);

  for (std::size_t head = 0; head < report.members.size(); ++head) {
    for (std::size_t a = 0; a < seed.size(); ++a) {
      const OrbitMember& current = report.members[head];
      const std::string& name = seed.vertices().names()[a];
      Graph next = local_complement(current.graph, name);
      GraphKey key = canonical_key(next);
      if (seen.contains(key)) continue;
      if (report.members.size() >= max_members) {
        report.truncated = true;
        return report;
      }
      OrbitMember member{
          std::move(next),
          compose(tau_unitary(current.graph, name), current.witness),
          current.path};
      member.path.push_back(seed.vertices().label(a));
      seen.emplace(std::move(key), report.members.size());
      report.members.push_back(std::move(member));
    }
  }
  return report;
}

double orbit_witness_residual(const OrbitReport& report) {
  const StateVector seed_state = build_graph_state(report.seed);
  double worst = 0.0;
  for (const auto& m : report.members) {
    worst = std::max(worst, max_abs_difference(apply_local(m.witness, seed_state),
                                               build_graph_state(m.graph)));
  }
  return worst;
}

namespace {

constexpr double kPruneTolerance = 1e-8;

// Reduced density matrix of qubits 0..k-1 (the k most significant index
// bits). Row-major, dimension 2^k.
std::vector<Complex> prefix_reduced_state(std::span<const Complex> amps,
                                          std::size_t n, std::size_t k) {
  const std::size_t dim = std::size_t{1} << k;
  const std::size_t rest = std::size_t{1} << (n - k);
  std::vector<Complex> rho(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      Complex acc = 0.0;
      for (std::size_t r = 0; r < rest; ++r)
        acc += amps[i * rest + r] * std::conj(amps[j * rest + r]);
      rho[i * dim + j] = acc;
      rho[j * dim + i] = std::conj(acc);
    }
  return rho;
}

bool close(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > kPruneTolerance) return false;
  return true;
}

class CliffordSearch {
 public:
  CliffordSearch(const StateVector& source, const StateVector& target)
      : target_(target), n_(source.size()), choice_(source.size(), 0) {
    for (std::size_t k = 1; k < n_; ++k)
      target_prefix_.push_back(
          prefix_reduced_state(target.amplitudes(), n_, k));
  }

  bool run(const StateVector& state, std::size_t qubit) {
    const auto& group = CliffordGroup::instance();
    for (std::size_t c = 0; c < group.size(); ++c) {
      ++nodes_;
      StateVector next = apply_single_qubit(state, qubit, group.at(c).matrix);
      choice_[qubit] = c;
      if (qubit + 1 == n_) {
        if (equal_up_to_global_phase(next, target_)) return true;
        continue;
      }
      // Later factors act on qubits > qubit and leave this marginal alone.
      if (!close(prefix_reduced_state(next.amplitudes(), n_, qubit + 1),
                 target_prefix_[qubit]))
        continue;
      if (run(next, qubit + 1)) return true;
    }
    return false;
  }

  const std::vector<std::size_t>& choice() const { return choice_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  const StateVector& target_;
  std::size_t n_;
  std::vector<std::vector<Complex>> target_prefix_;
  std::vector<std::size_t> choice_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

EquivalenceWitness lc_search(const StateVector& source,
                             const StateVector& target) {
  if (source.size() != target.size())
    throw Error("lc_search: source has " + std::to_string(source.size()) +
                " qubits, target has " + std::to_string(target.size()));
  if (source.qubits() != target.qubits())
    throw Error("lc_search: source and target use different qubit orders");
  if (source.size() > kMaxSearchQubits)
    throw Error("lc_search supports at most 6 qubits, got " +
                std::to_string(source.size()));

  CliffordSearch search(source, target);
  EquivalenceWitness out;
  out.found = search.run(source, 0);
  out.nodes_visited = search.nodes();
  if (!out.found) return out;

  const auto& group = CliffordGroup::instance();
  out.clifford_indices = search.choice();
  std::vector<Mat2> factors;
  for (auto idx : out.clifford_indices) {
    factors.push_back(group.at(idx).matrix);
    out.candidate_rank = out.candidate_rank * group.size() + idx;
  }
  LocalUnitary u(1.0, std::move(factors));
  // Fix the global phase so the witness reproduces the target exactly.
  const Complex overlap = inner_product(apply_local(u, source), target);
  out.unitary = u.with_phase(overlap / std::abs(overlap));
  return out;
}

}  // namespace graphstab
