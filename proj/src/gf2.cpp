#include "graphstab/gf2.hpp"

#include "graphstab/error.hpp"

namespace graphstab::gf2 {

std::size_t rank(std::vector<Row> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][col]) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

std::optional<std::vector<std::size_t>> inconsistent_combination(
    const std::vector<Row>& rows, const std::vector<bool>& rhs) {
  if (rows.size() != rhs.size()) throw Error("gf2: rhs length mismatch");
  const std::size_t m = rows.size();
  if (m == 0) return std::nullopt;
  const std::size_t width = rows.front().size();

  // Each working row tracks which original rows were summed into it.
  std::vector<Row> work = rows;
  std::vector<bool> b = rhs;
  std::vector<Row> origin(m, Row(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (work[i].size() != width) throw Error("gf2: ragged rows");
    origin[i].set(i);
  }

  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < m; ++col) {
    std::size_t pivot = r;
    while (pivot < m && !work[pivot][col]) ++pivot;
    if (pivot == m) continue;
    std::swap(work[r], work[pivot]);
    std::swap(origin[r], origin[pivot]);
    {
      const bool tmp = b[r];
      b[r] = b[pivot];
      b[pivot] = tmp;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i != r && work[i][col]) {
        work[i] ^= work[r];
        origin[i] ^= origin[r];
        b[i] = b[i] != b[r];
      }
    }
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (b[i]) {
      std::vector<std::size_t> subset;
      for (auto k = origin[i].find_first(); k != Row::npos; k = origin[i].find_next(k))
        subset.push_back(k);
      return subset;
    }
  }
  return std::nullopt;
}

}  // namespace graphstab::gf2
