#include "pframe/vecfile.hpp"

#include "pframe/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pframe {

Configuration parse_vectors(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;  // blank
    if (line[first] == '#') continue;          // comment
    std::istringstream fields(line);
    std::vector<double> row;
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::exception&) {
        throw Error(errc::parse_error,
                    "line " + std::to_string(lineno) + ": bad field '" + tok + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw Error(errc::parse_error, "line " + std::to_string(lineno) +
                                         ": expected " + std::to_string(rows.front().size()) +
                                         " fields, got " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(errc::parse_error, "no vectors in input");

  const std::size_t d = rows.front().size();
  if (d == 0) throw Error(errc::parse_error, "empty rows");
  Configuration x(d, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double sq = 0.0;
    for (double v : rows[i]) sq += v * v;
    const double nm = std::sqrt(sq);
    if (std::fabs(nm - 1.0) > 1e-6)
      throw Error(errc::invariant_violation,
                  "vector " + std::to_string(i) + " has norm " + std::to_string(nm) +
                      ", outside the renormalization band");
    const double inv = 1.0 / nm;  // silent renormalization inside the band
    for (std::size_t k = 0; k < d; ++k) x.vec(i)[k] = rows[i][k] * inv;
  }
  return x;
}

Configuration load_vectors(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::parse_error, "cannot open '" + path + "'");
  return parse_vectors(in);
}

void write_rows(std::ostream& out, std::size_t rows, std::size_t cols,
                const std::vector<double>& data, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  char buf[64];
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", data[i * cols + j]);
      out << (j ? " " : "") << buf;
    }
    out << "\n";
  }
}

void save_vectors(const std::string& path, const Configuration& x) {
  std::ofstream out(path);
  if (!out) throw Error(errc::parse_error, "cannot write '" + path + "'");
  write_rows(out, x.count, x.dim,
             x.coords, "unit vectors, d=" + std::to_string(x.dim) + " n=" + std::to_string(x.count));
}

}  // namespace pframe
