#ifndef PCIA_TRANSFORM_HPP
#define PCIA_TRANSFORM_HPP

#include <string>

#include "pcia/benchmarks.hpp"
#include "pcia/types.hpp"

namespace pcia {

/// Dense square matrix, row-major.
struct Matrix {
  int n = 0;
  Vector data;

  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * n + c]; }
};

Matrix identity_matrix(int dim);

/// Parse a whitespace-separated text file of exactly dim*dim finite reals.
/// Distinct errors for an unreadable file, a bad token (reported with its
/// row/column), and a wrong element count.
Matrix load_matrix(const std::string& path, int dim);

/// Same format, one row of dim entries (used for shift vectors).
Vector load_vector(const std::string& path, int dim);

/// Shifted / rotated / biased view of a base function:
///   F(x) = base(R * (x - shift)) + bias
/// With orthogonal R the global optimum moves to `shift`, value minimum+bias.
struct TransformedObjective {
  const Benchmark* base = nullptr;
  Vector shift;
  Matrix rotation;
  double bias = 0.0;

  double operator()(std::span<const double> x, RngStream* noise = nullptr) const;
};

TransformedObjective make_transformed(const Benchmark& base, Vector shift, Matrix rotation, double bias);

}  // namespace pcia

#endif  // PCIA_TRANSFORM_HPP
