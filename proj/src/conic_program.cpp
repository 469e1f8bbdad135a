#include "sosadmm/conic_program.hpp"

#include <stdexcept>
#include <string>

namespace sosadmm {

std::size_t ConicProgram::nnz() const {
  std::size_t total = 0;
  for (const RowData& r : rows) total += r.size();
  return total;
}

void ConicProgram::validate() const {
  if (num_vars < 1) throw std::invalid_argument("ConicProgram: num_vars must be >= 1");
  if (cones.empty()) throw std::invalid_argument("ConicProgram: no cones");
  for (const auto& cone : cones) {
    if (cone.dim < 1) throw std::invalid_argument("ConicProgram: cone with dim < 1");
  }
  if (cones::total_vec_len(cones) != num_vars)
    throw std::invalid_argument("ConicProgram: cone lengths do not sum to num_vars");
  if (b.size() != static_cast<Eigen::Index>(rows.size()))
    throw std::invalid_argument("ConicProgram: b length does not match row count");
  if (c.size() != num_vars)
    throw std::invalid_argument("ConicProgram: c length does not match num_vars");

  for (std::size_t r = 0; r < rows.size(); ++r) {
    const RowData& row = rows[r];
    const std::string where = "ConicProgram: row " + std::to_string(r);
    if (row.indices.size() != row.values.size())
      throw std::invalid_argument(where + " has mismatched index/value lengths");
    if (row.indices.empty()) throw std::invalid_argument(where + " is empty");
    int prev = -1;
    for (std::size_t k = 0; k < row.indices.size(); ++k) {
      int idx = row.indices[k];
      if (idx < 0 || idx >= num_vars) throw std::invalid_argument(where + " has index out of range");
      if (idx <= prev) throw std::invalid_argument(where + " has unsorted or duplicate indices");
      if (row.values[k] == 0.0) throw std::invalid_argument(where + " stores an explicit zero");
      prev = idx;
    }
  }

  for (const GramBlockInfo& g : layout.grams) {
    if (g.side < 1 || g.offset < 0 || g.offset + g.side * g.side > num_vars)
      throw std::invalid_argument("ConicProgram: Gram block out of range");
  }
  for (auto [begin, end] : layout.constraint_rows) {
    if (begin < 0 || end < begin || end > static_cast<int>(rows.size()))
      throw std::invalid_argument("ConicProgram: constraint row range out of bounds");
  }
}

}  // namespace sosadmm
