#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <utility>
#include <vector>

#include "sosadmm/cones.hpp"

namespace sosadmm {

// One sparse equality row: sum_k values[k] * x[indices[k]] = b_row.
// Indices are strictly increasing and values are nonzero.
struct RowData {
  std::vector<int> indices;
  std::vector<double> values;

  std::size_t size() const { return indices.size(); }
  friend bool operator==(const RowData&, const RowData&) = default;
};

// Where a Gram block lives inside the stacked variable vector. num_vars and
// half_degree describe the monomial basis v with X indexed by v x v; they are
// -1 for blocks that did not come from a Gram representation (e.g. file input).
struct GramBlockInfo {
  int offset = 0;
  int side = 0;
  int num_vars = -1;
  int half_degree = -1;

  friend bool operator==(const GramBlockInfo&, const GramBlockInfo&) = default;
};

// Bookkeeping connecting conic variables and rows back to the source problem.
struct VarLayout {
  int free_size = 0;
  std::vector<GramBlockInfo> grams;
  // Half-open row ranges, one per source constraint (empty if untracked).
  std::vector<std::pair<int, int>> constraint_rows;

  friend bool operator==(const VarLayout&, const VarLayout&) = default;
};

// minimize c'x  subject to  A x = b,  x in K, where K is the product of
// `cones` applied to contiguous blocks of x and A is stored by rows.
struct ConicProgram {
  int num_vars = 0;
  std::vector<RowData> rows;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  std::vector<cones::ConeSpec> cones;
  VarLayout layout;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t nnz() const;

  // Throws std::invalid_argument on structural defects (index out of range,
  // unsorted or duplicate indices, explicit zeros, size mismatches).
  void validate() const;

  friend bool operator==(const ConicProgram& a, const ConicProgram& b) {
    return a.num_vars == b.num_vars && a.rows == b.rows && a.cones == b.cones &&
           a.b.size() == b.b.size() && (a.b.size() == 0 || (a.b.array() == b.b.array()).all()) &&
           a.c.size() == b.c.size() && (a.c.size() == 0 || (a.c.array() == b.c.array()).all());
  }
};

}  // namespace sosadmm
