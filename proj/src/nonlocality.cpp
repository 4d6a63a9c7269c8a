#include "graphstab/nonlocality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <tuple>

#include "graphstab/error.hpp"
#include "graphstab/gf2.hpp"

namespace graphstab {
namespace {

auto setting_order(const Setting& s) {
  return std::tuple(s.qubit.position, s.qubit.name, static_cast<int>(s.axis));
}

std::size_t universe_index(const std::vector<Setting>& universe,
                           const Setting& s) {
  auto it = std::find(universe.begin(), universe.end(), s);
  if (it == universe.end())
    throw Error("setting on '" + s.qubit.name + "' outside the LHV universe");
  return static_cast<std::size_t>(it - universe.begin());
}

std::vector<gf2::Row> incidence_rows(std::span<const CorrelationConstraint> cs,
                                     const std::vector<Setting>& universe) {
  std::vector<gf2::Row> rows;
  for (const auto& c : cs) {
    gf2::Row row(universe.size());
    for (const auto& t : c.terms) row.flip(universe_index(universe, t));
    rows.push_back(std::move(row));
  }
  return rows;
}

bool is_inconsistent(const std::vector<gf2::Row>& rows,
                     const std::vector<bool>& rhs) {
  return gf2::inconsistent_combination(rows, rhs).has_value();
}

}  // namespace

char axis_name(Axis a) { return a == Axis::x ? 'x' : 'z'; }

void CorrelationConstraint::validate() const {
  if (sign != 1 && sign != -1) throw Error("constraint sign must be +1 or -1");
  std::set<std::string> qubits;
  for (const auto& t : terms)
    if (!qubits.insert(t.qubit.name).second)
      throw Error("constraint mentions qubit '" + t.qubit.name + "' twice");
}

std::string CorrelationConstraint::to_string() const {
  std::string out = sign < 0 ? "-" : "";
  if (terms.empty()) out += "1";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ' ';
    out += "m_";
    out += axis_name(terms[i].axis);
    out += "^{" + terms[i].qubit.name + "}";
  }
  return out + " = 1";
}

CorrelationConstraint constraint_from_pauli(const PauliString& p,
                                            const Register& qubits) {
  if (p.size() != qubits.size())
    throw Error("Pauli acts on " + std::to_string(p.size()) +
                " qubits but register has " + std::to_string(qubits.size()));
  const auto sign = p.sign();
  if (!sign) throw Error("Pauli " + to_string(p) + " has an imaginary sign");
  CorrelationConstraint c;
  c.sign = *sign;
  for (std::size_t q = 0; q < p.size(); ++q) {
    switch (p.letter(q)) {
      case PauliLetter::I: break;
      case PauliLetter::X: c.terms.push_back({qubits.label(q), Axis::x}); break;
      case PauliLetter::Z: c.terms.push_back({qubits.label(q), Axis::z}); break;
      case PauliLetter::Y:
        throw Error("Pauli " + to_string(p) + " has a Y factor on '" +
                    qubits.names()[q] + "'");
    }
  }
  return c;
}

QuantumReport quantum_check(const StateVector& s,
                            std::span<const CorrelationConstraint> constraints,
                            std::span<const PauliString> origins, double tol) {
  if (constraints.size() != origins.size())
    throw Error("quantum_check needs one origin Pauli per constraint");
  QuantumReport report;
  report.all_satisfied = true;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (constraint_from_pauli(origins[i], s.qubits()) != constraints[i])
      throw Error("origin " + to_string(origins[i]) +
                  " does not produce constraint " + constraints[i].to_string());
    QuantumPrediction pred;
    pred.expectation = expectation(origins[i], s);
    pred.satisfied = std::abs(pred.expectation - 1.0) <= tol;
    report.all_satisfied = report.all_satisfied && pred.satisfied;
    report.predictions.push_back(pred);
  }
  return report;
}

int LhvAssignment::value(const Setting& s) const {
  return values.at(universe_index(universe, s));
}

std::vector<Setting> lhv_universe(std::span<const CorrelationConstraint> cs) {
  std::vector<QubitLabel> qubits;
  for (const auto& c : cs) {
    c.validate();
    for (const auto& t : c.terms) {
      auto same = [&](const QubitLabel& q) { return q.name == t.qubit.name; };
      auto it = std::find_if(qubits.begin(), qubits.end(), same);
      if (it == qubits.end())
        qubits.push_back(t.qubit);
      else if (it->position != t.qubit.position)
        throw Error("qubit '" + t.qubit.name + "' appears at two positions");
    }
  }
  std::vector<Setting> universe;
  for (const auto& q : qubits) {
    universe.push_back({q, Axis::x});
    universe.push_back({q, Axis::z});
  }
  std::sort(universe.begin(), universe.end(), [](const Setting& a, const Setting& b) {
    return setting_order(a) < setting_order(b);
  });
  return universe;
}

LhvResult lhv_solve_exhaustive(std::span<const CorrelationConstraint> cs) {
  const auto universe = lhv_universe(cs);
  if (universe.size() > kMaxLhvSettings)
    throw Error("LHV universe has " + std::to_string(universe.size()) +
                " settings; exhaustive search supports at most 16");

  // Each constraint as (mask of universe bits, required parity of -1s).
  std::vector<std::pair<std::uint32_t, bool>> parity;
  for (const auto& c : cs) {
    std::uint32_t mask = 0;
    for (const auto& t : c.terms) mask |= 1u << universe_index(universe, t);
    parity.emplace_back(mask, c.sign < 0);
  }

  LhvResult result;
  const std::uint64_t total = std::uint64_t{1} << universe.size();
  for (std::uint64_t j = 0; j < total; ++j) {
    ++result.assignments_scanned;
    const bool ok = std::all_of(parity.begin(), parity.end(), [&](const auto& c) {
      return (std::popcount(static_cast<std::uint32_t>(j) & c.first) & 1) ==
             static_cast<int>(c.second);
    });
    if (!ok) continue;
    LhvAssignment w{universe, {}};
    for (std::size_t b = 0; b < universe.size(); ++b)
      w.values.push_back(((j >> b) & 1u) ? -1 : +1);
    result.satisfiable = true;
    result.witness = std::move(w);
    break;
  }
  return result;
}

ContradictionCertificate lhv_contradiction_certificate(
    std::span<const CorrelationConstraint> cs) {
  const auto universe = lhv_universe(cs);
  const auto rows = incidence_rows(cs, universe);
  std::vector<bool> rhs;
  for (const auto& c : cs) rhs.push_back(c.sign < 0);

  auto combination = gf2::inconsistent_combination(rows, rhs);
  if (!combination) return {};

  // Shrink to an inclusion-minimal inconsistent subset.
  std::vector<std::size_t> subset = *combination;
  for (std::size_t k = 0; k < subset.size();) {
    std::vector<gf2::Row> trial_rows;
    std::vector<bool> trial_rhs;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i == k) continue;
      trial_rows.push_back(rows[subset[i]]);
      trial_rhs.push_back(rhs[subset[i]]);
    }
    if (!trial_rows.empty() && is_inconsistent(trial_rows, trial_rhs))
      subset.erase(subset.begin() + static_cast<std::ptrdiff_t>(k));
    else
      ++k;
  }
  // A minimal inconsistent subset is a single dependent combination, so its
  // monomials cancel completely.
  return {true, subset};
}

}  // namespace graphstab
