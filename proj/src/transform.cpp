#include <cmath>
#include <fstream>
#include <sstream>

#include "pcia/transform.hpp"

namespace pcia {

namespace {

Vector parse_reals(const std::string& path, std::size_t expected, int columns) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  Vector values;
  values.reserve(expected);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double v = 0.0;
    bool ok = true;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok || used != token.size() || !std::isfinite(v)) {
      const std::size_t idx = values.size();
      throw std::runtime_error("bad token '" + token + "' in '" + path + "' at row " +
                               std::to_string(idx / columns + 1) + ", column " +
                               std::to_string(idx % columns + 1));
    }
    values.push_back(v);
    if (values.size() > expected) break;
  }
  if (values.size() != expected)
    throw std::runtime_error("'" + path + "': expected " + std::to_string(expected) +
                             " values, found " + std::to_string(values.size()) +
                             (values.size() > expected ? " or more" : ""));
  return values;
}

}  // namespace

Matrix identity_matrix(int dim) {
  Matrix m;
  m.n = dim;
  m.data.assign(static_cast<std::size_t>(dim) * dim, 0.0);
  for (int i = 0; i < dim; ++i) m.data[static_cast<std::size_t>(i) * dim + i] = 1.0;
  return m;
}

Matrix load_matrix(const std::string& path, int dim) {
  if (dim < 1) throw std::invalid_argument("load_matrix: dim must be >= 1");
  Matrix m;
  m.n = dim;
  m.data = parse_reals(path, static_cast<std::size_t>(dim) * dim, dim);
  return m;
}

Vector load_vector(const std::string& path, int dim) {
  if (dim < 1) throw std::invalid_argument("load_vector: dim must be >= 1");
  return parse_reals(path, static_cast<std::size_t>(dim), dim);
}

double TransformedObjective::operator()(std::span<const double> x, RngStream* noise) const {
  const int n = rotation.n;
  Vector y(static_cast<std::size_t>(n), 0.0);
  for (int r = 0; r < n; ++r) {
    double acc = 0.0;
    for (int c = 0; c < n; ++c) acc += rotation.at(r, c) * (x[static_cast<std::size_t>(c)] - shift[c]);
    y[static_cast<std::size_t>(r)] = acc;
  }
  return base->eval(y, noise) + bias;
}

TransformedObjective make_transformed(const Benchmark& base, Vector shift, Matrix rotation, double bias) {
  if (rotation.n != base.dim || rotation.data.size() != static_cast<std::size_t>(base.dim) * base.dim)
    throw std::invalid_argument("make_transformed: rotation must be " + std::to_string(base.dim) + "x" +
                                std::to_string(base.dim));
  if (static_cast<int>(shift.size()) != base.dim)
    throw std::invalid_argument("make_transformed: shift must have dimension " + std::to_string(base.dim));
  return TransformedObjective{&base, std::move(shift), std::move(rotation), bias};
}

}  // namespace pcia
