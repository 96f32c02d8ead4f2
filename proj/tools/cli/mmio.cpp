#include "mmio.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "format.hpp"

namespace expmde::cli {

namespace {

enum class Layout { Array, Coordinate };
enum class Field { Real, Complex };
enum class Symmetry { General, Symmetric, SkewSymmetric, Hermitian };

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

[[noreturn]] void fail(const std::string& source, long line, const std::string& msg) {
  throw InputError(source + ":" + std::to_string(line) + ": " + msg);
}

struct LineReader {
  std::istream& in;
  const std::string& source;
  long line_no = 0;

  // Next non-comment, non-blank line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '%') continue;
      return true;
    }
    return false;
  }
};

double parse_number(const std::string& tok, const std::string& source, long line) {
  // strtod rather than stod: subnormals set ERANGE but are valid values.
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(tok.c_str(), &end);
  if (tok.empty() || end != tok.c_str() + tok.size() || (errno == ERANGE && std::isinf(v)) || std::isnan(v))
    fail(source, line, "bad number '" + tok + "'");
  return v;
}

void place(ComplexMatrix& m, std::size_t i, std::size_t j, cplx v, Symmetry sym) {
  m(i, j) = v;
  if (i == j) return;
  switch (sym) {
    case Symmetry::General: break;
    case Symmetry::Symmetric: m(j, i) = v; break;
    case Symmetry::SkewSymmetric: m(j, i) = -v; break;
    case Symmetry::Hermitian: m(j, i) = std::conj(v); break;
  }
}

}  // namespace

ComplexMatrix read_matrix_market(std::istream& in, const std::string& source) {
  std::string header;
  if (!std::getline(in, header)) fail(source, 1, "empty input");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  std::istringstream hs(header);
  std::string banner, object, format, field, symmetry;
  hs >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket") fail(source, 1, "missing %%MatrixMarket banner");
  if (lower(object) != "matrix") fail(source, 1, "unsupported object '" + object + "'");

  Layout layout;
  if (lower(format) == "array") layout = Layout::Array;
  else if (lower(format) == "coordinate") layout = Layout::Coordinate;
  else fail(source, 1, "unsupported format '" + format + "'");

  Field fld;
  const std::string f = lower(field);
  if (f == "real" || f == "integer" || f == "double") fld = Field::Real;
  else if (f == "complex") fld = Field::Complex;
  else fail(source, 1, "unsupported field '" + field + "'");

  Symmetry sym;
  const std::string s = lower(symmetry);
  if (s == "general") sym = Symmetry::General;
  else if (s == "symmetric") sym = Symmetry::Symmetric;
  else if (s == "skew-symmetric") sym = Symmetry::SkewSymmetric;
  else if (s == "hermitian") sym = Symmetry::Hermitian;
  else fail(source, 1, "unsupported symmetry '" + symmetry + "'");
  if (sym == Symmetry::Hermitian && fld != Field::Complex) sym = Symmetry::Symmetric;

  LineReader reader{in, source, 1};
  std::string line;
  if (!reader.next(line)) fail(source, reader.line_no + 1, "missing size line");
  std::istringstream ss(line);
  long rows = 0, cols = 0, nnz = 0;
  ss >> rows >> cols;
  if (layout == Layout::Coordinate) ss >> nnz;
  if (!ss || rows <= 0 || cols <= 0 || nnz < 0) fail(source, reader.line_no, "bad size line");
  std::string extra;
  if (ss >> extra) fail(source, reader.line_no, "trailing data on size line");
  if (sym != Symmetry::General && rows != cols) fail(source, reader.line_no, "symmetric storage needs a square matrix");

  ComplexMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  const std::size_t per_entry = fld == Field::Complex ? 2 : 1;

  auto read_value = [&](std::istringstream& ls) {
    std::string re_tok, im_tok;
    if (!(ls >> re_tok)) fail(source, reader.line_no, "missing value");
    const double re = parse_number(re_tok, source, reader.line_no);
    double im = 0.0;
    if (per_entry == 2) {
      if (!(ls >> im_tok)) fail(source, reader.line_no, "missing imaginary part");
      im = parse_number(im_tok, source, reader.line_no);
    }
    std::string rest;
    if (ls >> rest) fail(source, reader.line_no, "trailing data '" + rest + "'");
    return cplx(re, im);
  };

  if (layout == Layout::Array) {
    // Column-major; symmetric kinds store only the lower triangle.
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::size_t i0 = sym == Symmetry::General ? 0 : (sym == Symmetry::SkewSymmetric ? j + 1 : j);
      for (std::size_t i = i0; i < m.rows(); ++i) {
        if (!reader.next(line)) fail(source, reader.line_no + 1, "unexpected end of data");
        std::istringstream ls(line);
        place(m, i, j, read_value(ls), sym);
      }
    }
  } else {
    for (long e = 0; e < nnz; ++e) {
      if (!reader.next(line)) fail(source, reader.line_no + 1, "unexpected end of data");
      std::istringstream ls(line);
      long i = 0, j = 0;
      if (!(ls >> i >> j)) fail(source, reader.line_no, "bad coordinate entry");
      if (i < 1 || i > rows || j < 1 || j > cols) fail(source, reader.line_no, "index out of range");
      place(m, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), read_value(ls), sym);
    }
  }
  if (reader.next(line)) fail(source, reader.line_no, "unexpected extra data");
  if (!m.all_finite()) fail(source, reader.line_no, "non-finite entry");
  return m;
}

ComplexMatrix read_matrix_market_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_matrix_market(in, path);
}

void write_matrix_market_array(std::ostream& out, const ComplexMatrix& m) {
  out << "%%MatrixMarket matrix array complex general\n";
  out << m.rows() << ' ' << m.cols() << '\n';
  for (const cplx& z : m.data()) out << fmt17(z.real()) << ' ' << fmt17(z.imag()) << '\n';
}

void write_matrix_market_coordinate(std::ostream& out, const ComplexMatrix& m) {
  const bool real = std::all_of(m.data().begin(), m.data().end(), [](cplx z) { return z.imag() == 0.0; });
  std::size_t nnz = 0;
  for (const cplx& z : m.data()) nnz += z != cplx(0.0) ? 1 : 0;
  out << "%%MatrixMarket matrix coordinate " << (real ? "real" : "complex") << " general\n";
  out << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const cplx z = m(i, j);
      if (z == cplx(0.0)) continue;
      out << i + 1 << ' ' << j + 1 << ' ' << fmt17(z.real());
      if (!real) out << ' ' << fmt17(z.imag());
      out << '\n';
    }
}

}  // namespace expmde::cli
