#include "seriate/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "seriate/errors.hpp"

namespace seriate {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool parse_double(const std::string& cell, double& out) {
  const std::string t = trim(cell);
  if (t.empty()) return false;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

DataMatrix read_csv_data_matrix(std::istream& in, bool force_no_header) {
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first_line = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    std::vector<double> row(cells.size());
    bool numeric = true;
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (!parse_double(cells[j], row[j])) {
        numeric = false;
        break;
      }
    if (!numeric) {
      if (first_line && !force_no_header) {
        first_line = false;
        continue;
      }
      throw ParseError("line " + std::to_string(lineno) + ": non-numeric cell");
    }
    first_line = false;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(rows.front().size()) + " columns, got " +
                       std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no data rows");

  Matrix a(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) a(i, j) = rows[i][j];
  return DataMatrix(std::move(a));
}

DataMatrix read_matrix_market(std::istream& in) {
  std::string banner;
  if (!std::getline(in, banner) || banner.rfind("%%MatrixMarket", 0) != 0)
    throw ParseError("missing MatrixMarket banner");
  std::istringstream hdr(banner);
  std::string tag, object, format, field, symmetry;
  hdr >> tag >> object >> format >> field >> symmetry;
  for (auto* s : {&object, &format, &field, &symmetry})
    std::transform(s->begin(), s->end(), s->begin(),
                   [](unsigned char c) { return std::tolower(c); });
  if (object != "matrix") throw ParseError("unsupported MatrixMarket object: " + object);
  if (format != "coordinate" && format != "array")
    throw ParseError("unsupported MatrixMarket format: " + format);
  if (field != "real" && field != "integer" && field != "pattern")
    throw ParseError("unsupported MatrixMarket field: " + field);
  if (symmetry != "general" && symmetry != "symmetric")
    throw ParseError("unsupported MatrixMarket symmetry: " + symmetry);
  if (format == "array" && field == "pattern")
    throw ParseError("pattern entries need coordinate format");

  std::string line;
  auto next_content = [&](const char* what) {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const std::string t = trim(line);
      if (t.empty() || t[0] == '%') continue;
      return t;
    }
    throw ParseError(std::string("unexpected end of file, expected ") + what);
  };

  std::istringstream size_line(next_content("size line"));
  std::size_t nr = 0, nc = 0, nnz = 0;
  if (!(size_line >> nr >> nc)) throw ParseError("bad size line");
  if (format == "coordinate" && !(size_line >> nnz)) throw ParseError("bad size line");
  if (nr == 0 || nc == 0) throw ParseError("empty matrix");

  Matrix a(nr, nc);
  if (format == "coordinate") {
    for (std::size_t e = 0; e < nnz; ++e) {
      std::istringstream entry(next_content("entry"));
      std::size_t i = 0, j = 0;
      double val = 1.0;
      if (!(entry >> i >> j)) throw ParseError("bad coordinate entry");
      if (field != "pattern" && !(entry >> val)) throw ParseError("bad coordinate entry");
      if (i < 1 || i > nr || j < 1 || j > nc) throw ParseError("coordinate out of range");
      a(i - 1, j - 1) = val;
      if (symmetry == "symmetric" && i != j) a(j - 1, i - 1) = val;
    }
  } else {
    // Array data is column-major; symmetric storage carries the lower
    // triangle only.
    for (std::size_t j = 0; j < nc; ++j) {
      const std::size_t i0 = symmetry == "symmetric" ? j : 0;
      for (std::size_t i = i0; i < nr; ++i) {
        std::istringstream entry(next_content("entry"));
        double val = 0.0;
        if (!(entry >> val)) throw ParseError("bad array entry");
        a(i, j) = val;
        if (symmetry == "symmetric" && i != j) a(j, i) = val;
      }
    }
  }
  return DataMatrix(std::move(a));
}

DataMatrix read_data_matrix(const std::string& path, bool force_no_header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::string head(14, '\0');
  in.read(head.data(), static_cast<std::streamsize>(head.size()));
  head.resize(static_cast<std::size_t>(in.gcount()));
  in.clear();
  in.seekg(0);
  if (head == "%%MatrixMarket") return read_matrix_market(in);
  return read_csv_data_matrix(in, force_no_header);
}

void write_csv_data_matrix(std::ostream& out, const DataMatrix& a) {
  const Matrix& m = a.matrix();
  char buf[64];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      const double v = m(i, j);
      if (v == std::floor(v) && std::abs(v) < 1e15) {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, static_cast<long long>(v));
        out.write(buf, ptr - buf);
      } else {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
        out.write(buf, ptr - buf);
      }
    }
    out << '\n';
  }
}

}  // namespace seriate
