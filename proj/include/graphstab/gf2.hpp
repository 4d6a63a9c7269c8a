#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

// Row reduction over GF(2).
namespace graphstab::gf2 {

using Row = boost::dynamic_bitset<>;

std::size_t rank(std::vector<Row> rows);

/// Solves rows * v = rhs for consistency. When some combination of rows
/// reduces to the zero vector with right-hand side 1, returns the indices of
/// that combination (ascending); nullopt when the system is consistent.
std::optional<std::vector<std::size_t>> inconsistent_combination(
    const std::vector<Row>& rows, const std::vector<bool>& rhs);

}  // namespace graphstab::gf2
