#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "detm/polynomial.hpp"
#include "detm/text.hpp"

namespace detm {

/// A finitely generated ideal of Q[x0..x{n}].
///
/// An empty generator list denotes the zero ideal. Zero generators are rejected, and the
/// homogeneous flag is computed from the generators, never supplied.
class Ideal {
 public:
  Ideal(std::size_t nvars, std::vector<Polynomial> generators);

  std::size_t num_vars() const noexcept { return nvars_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool homogeneous() const noexcept { return homogeneous_; }
  bool is_zero_ideal() const noexcept { return generators_.empty(); }

 private:
  std::size_t nvars_;
  std::vector<Polynomial> generators_;
  bool homogeneous_;
};

/// Contents of an ideal file: a `vars: N` header, then one generator per line in x0..x{N-1}.
/// `#` starts a comment; blank lines are ignored.
struct IdealFile {
  std::size_t vars = 0;
  std::vector<Polynomial> generators;
  std::vector<std::string> lines;  // generator text as written
};

IdealFile read_ideal_file(std::istream& in);
IdealFile read_ideal_file(const std::filesystem::path& path);

/// Projective reading: the ideal in all `vars` variables.
Ideal projective_ideal(const IdealFile& file);
/// Affine reading: x0 is reserved for homogenization and must not occur; the result lives in
/// the n = vars - 1 variables x1..xn (indices 0..n-1).
Ideal affine_ideal(const IdealFile& file);

/// Names for printing affine polynomials: x1..xn.
VariableNames affine_names(std::size_t n);
/// Names for projective polynomials: x0..xn.
VariableNames projective_names(std::size_t nvars);

}  // namespace detm
