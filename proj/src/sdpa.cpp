#include "sosadmm/sdpa.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>
#include <vector>

namespace sosadmm {

SdpaParseError::SdpaParseError(const std::string& msg, int line_no)
    : std::runtime_error("SDPA parse error, line " + std::to_string(line_no) + ": " + msg),
      line(line_no) {}

namespace {

// Reads lines, tracking line numbers and skipping comments/blanks. The
// header permits {}(), and commas as token separators.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-comment, non-blank line split into tokens; false at EOF.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && (line[0] == '"' || line[0] == '*')) continue;
      tokens.clear();
      std::string cur;
      for (char ch : line) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '{' || ch == '}' || ch == '(' ||
            ch == ')' || ch == ',') {
          if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else {
          cur += ch;
        }
      }
      if (!cur.empty()) tokens.push_back(std::move(cur));
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int line_no() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

long long to_int(const std::string& tok, const LineReader& r, const char* what) {
  long long v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw SdpaParseError(std::string("expected an integer for ") + what + ", got '" + tok + "'",
                         r.line_no());
  return v;
}

double to_real(const std::string& tok, const LineReader& r, const char* what) {
  double v = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw SdpaParseError(std::string("expected a number for ") + what + ", got '" + tok + "'",
                         r.line_no());
  return v;
}

}  // namespace

ConicProgram parse_sdpa(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tokens;

  if (!reader.next(tokens)) throw SdpaParseError("missing constraint count", reader.line_no());
  const long long m = to_int(tokens[0], reader, "the constraint count");
  if (m < 1) throw SdpaParseError("constraint count must be >= 1", reader.line_no());

  if (!reader.next(tokens)) throw SdpaParseError("missing block count", reader.line_no());
  const long long nblocks = to_int(tokens[0], reader, "the block count");
  if (nblocks < 1) throw SdpaParseError("block count must be >= 1", reader.line_no());

  // Block sizes may wrap across lines until nblocks values are read.
  std::vector<long long> block_sizes;
  while (static_cast<long long>(block_sizes.size()) < nblocks) {
    if (!reader.next(tokens)) throw SdpaParseError("missing block sizes", reader.line_no());
    for (const std::string& tok : tokens) {
      if (static_cast<long long>(block_sizes.size()) == nblocks)
        throw SdpaParseError("too many block sizes", reader.line_no());
      block_sizes.push_back(to_int(tok, reader, "a block size"));
    }
  }

  std::vector<double> bvals;
  while (static_cast<long long>(bvals.size()) < m) {
    if (!reader.next(tokens)) throw SdpaParseError("missing objective values", reader.line_no());
    for (const std::string& tok : tokens) {
      if (static_cast<long long>(bvals.size()) == m)
        throw SdpaParseError("too many objective values", reader.line_no());
      bvals.push_back(to_real(tok, reader, "an objective value"));
    }
  }

  ConicProgram prog;
  std::vector<int> block_offset(static_cast<std::size_t>(nblocks));
  std::vector<int> block_side(static_cast<std::size_t>(nblocks));
  int num_vars = 0;
  for (long long bidx = 0; bidx < nblocks; ++bidx) {
    const long long size = block_sizes[static_cast<std::size_t>(bidx)];
    if (size == 0) throw SdpaParseError("zero block size", reader.line_no());
    block_offset[static_cast<std::size_t>(bidx)] = num_vars;
    if (size < 0) {
      prog.cones.push_back(cones::ConeSpec::nonneg(static_cast<int>(-size)));
      block_side[static_cast<std::size_t>(bidx)] = static_cast<int>(size);  // negative marks diagonal
      num_vars += static_cast<int>(-size);
    } else {
      prog.cones.push_back(cones::ConeSpec::psd(static_cast<int>(size)));
      block_side[static_cast<std::size_t>(bidx)] = static_cast<int>(size);
      prog.layout.grams.push_back({num_vars, static_cast<int>(size), -1, -1});
      num_vars += static_cast<int>(size * size);
    }
  }
  prog.num_vars = num_vars;
  prog.b = Eigen::Map<const Eigen::VectorXd>(bvals.data(), static_cast<Eigen::Index>(bvals.size()));
  prog.c = Eigen::VectorXd::Zero(num_vars);

  // Entry lines: scatter into per-constraint sparse accumulators.
  std::vector<std::map<int, double>> row_entries(static_cast<std::size_t>(m));
  std::map<int, double> cost_entries;
  std::map<std::tuple<long long, long long, long long, long long>, int> seen;  // -> line no
  while (reader.next(tokens)) {
    if (tokens.size() != 5)
      throw SdpaParseError("entry lines need 5 fields: matno blkno i j value", reader.line_no());
    const long long matno = to_int(tokens[0], reader, "matno");
    const long long blkno = to_int(tokens[1], reader, "blkno");
    const long long i = to_int(tokens[2], reader, "i");
    const long long j = to_int(tokens[3], reader, "j");
    const double value = to_real(tokens[4], reader, "the entry value");
    if (matno < 0 || matno > m) throw SdpaParseError("matno out of range", reader.line_no());
    if (blkno < 1 || blkno > nblocks) throw SdpaParseError("blkno out of range", reader.line_no());
    const long long size = block_sizes[static_cast<std::size_t>(blkno - 1)];
    const long long side = size < 0 ? -size : size;
    if (i < 1 || j < 1 || i > side || j > side)
      throw SdpaParseError("matrix index out of block range", reader.line_no());
    if (i > j)
      throw SdpaParseError("lower-triangle entry; the format stores each pair once with i <= j",
                           reader.line_no());
    if (size < 0 && i != j)
      throw SdpaParseError("off-diagonal entry in a diagonal block", reader.line_no());
    auto [it, fresh] = seen.emplace(std::make_tuple(matno, blkno, i, j), reader.line_no());
    if (!fresh)
      throw SdpaParseError("duplicate entry (first on line " + std::to_string(it->second) + ")",
                           reader.line_no());
    if (value == 0.0) continue;

    const int off = block_offset[static_cast<std::size_t>(blkno - 1)];
    std::vector<int> positions;
    if (size < 0) {
      positions = {off + static_cast<int>(i - 1)};
    } else if (i == j) {
      positions = {off + static_cast<int>((j - 1) * side + (i - 1))};
    } else {
      positions = {off + static_cast<int>((j - 1) * side + (i - 1)),
                   off + static_cast<int>((i - 1) * side + (j - 1))};
    }
    for (int pos : positions) {
      if (matno == 0) {
        cost_entries[pos] += value;
      } else {
        row_entries[static_cast<std::size_t>(matno - 1)][pos] += value;
      }
    }
  }

  for (auto [pos, value] : cost_entries) prog.c[pos] = -value;
  prog.rows.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    const auto& entries = row_entries[static_cast<std::size_t>(k)];
    if (entries.empty())
      throw SdpaParseError("constraint " + std::to_string(k + 1) + " has no entries",
                           reader.line_no());
    RowData row;
    row.indices.reserve(entries.size());
    row.values.reserve(entries.size());
    for (auto [pos, value] : entries) {
      row.indices.push_back(pos);
      row.values.push_back(value);
    }
    prog.rows.push_back(std::move(row));
  }
  prog.layout.free_size = 0;
  prog.validate();
  return prog;
}

ConicProgram parse_sdpa_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return parse_sdpa(in);
}

namespace {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Gathers the upper-triangle entries of one matrix (cost or row) restricted
// to a block, checking the symmetric pair agrees.
void emit_block_entries(std::ostream& out, int matno, int blkno, int offset, int side,
                        bool diagonal, const std::map<int, double>& entries) {
  if (diagonal) {
    for (int i = 0; i < side; ++i) {
      auto it = entries.find(offset + i);
      if (it == entries.end() || it->second == 0.0) continue;
      out << matno << " " << blkno << " " << i + 1 << " " << i + 1 << " " << format_value(it->second)
          << "\n";
    }
    return;
  }
  for (int j = 0; j < side; ++j) {
    for (int i = 0; i <= j; ++i) {
      auto it = entries.find(offset + j * side + i);
      if (it == entries.end() || it->second == 0.0) continue;
      if (i != j) {
        auto mirror = entries.find(offset + i * side + j);
        if (mirror == entries.end() || mirror->second != it->second)
          throw std::invalid_argument(
              "write_sdpa: off-diagonal data is not symmetric within a Psd block");
      }
      out << matno << " " << blkno << " " << i + 1 << " " << j + 1 << " " << format_value(it->second)
          << "\n";
    }
  }
}

}  // namespace

void write_sdpa(const ConicProgram& prog, std::ostream& out) {
  prog.validate();
  for (const auto& cone : prog.cones) {
    if (cone.kind != cones::ConeSpec::Kind::Psd && cone.kind != cones::ConeSpec::Kind::NonNeg)
      throw std::invalid_argument("write_sdpa: only Psd and NonNeg blocks are representable");
  }

  out << prog.rows.size() << "\n";
  out << prog.cones.size() << "\n";
  for (std::size_t i = 0; i < prog.cones.size(); ++i) {
    const auto& cone = prog.cones[i];
    out << (cone.kind == cones::ConeSpec::Kind::Psd ? cone.dim : -cone.dim)
        << (i + 1 == prog.cones.size() ? "\n" : " ");
  }
  for (Eigen::Index k = 0; k < prog.b.size(); ++k)
    out << format_value(prog.b[k]) << (k + 1 == prog.b.size() ? "\n" : " ");

  // Split a dense/sparse vector over the blocks and emit per block.
  auto emit_vector = [&](int matno, const std::map<int, double>& entries) {
    int offset = 0;
    for (std::size_t bidx = 0; bidx < prog.cones.size(); ++bidx) {
      const auto& cone = prog.cones[bidx];
      const bool diagonal = cone.kind == cones::ConeSpec::Kind::NonNeg;
      emit_block_entries(out, matno, static_cast<int>(bidx) + 1, offset, cone.dim, diagonal,
                         entries);
      offset += cone.vec_len();
    }
  };

  std::map<int, double> cost;
  for (Eigen::Index p = 0; p < prog.c.size(); ++p) {
    if (prog.c[p] != 0.0) cost[static_cast<int>(p)] = -prog.c[p];
  }
  emit_vector(0, cost);
  for (std::size_t k = 0; k < prog.rows.size(); ++k) {
    std::map<int, double> entries;
    for (std::size_t idx = 0; idx < prog.rows[k].size(); ++idx)
      entries[prog.rows[k].indices[idx]] = prog.rows[k].values[idx];
    emit_vector(static_cast<int>(k) + 1, entries);
  }
}

void write_sdpa_file(const ConicProgram& prog, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_sdpa(prog, out);
}

}  // namespace sosadmm
