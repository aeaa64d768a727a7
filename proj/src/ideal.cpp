#include "detm/ideal.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "detm/errors.hpp"

namespace detm {

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> generators)
    : nvars_(nvars), generators_(std::move(generators)), homogeneous_(true) {
  for (const auto& g : generators_) {
    if (g.num_vars() != nvars_) throw InputError("generator has the wrong number of variables");
    if (g.is_zero()) throw InputError("zero polynomial in generator list");
    homogeneous_ = homogeneous_ && g.is_homogeneous();
  }
}

namespace {

std::string strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

IdealFile read_ideal_file(std::istream& in) {
  IdealFile file;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::optional<VariableNames> names;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view view(raw);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    const std::string line = strip(view);
    if (line.empty()) continue;
    if (!have_header) {
      if (line.rfind("vars:", 0) != 0) throw ParseError(line_no, 1, "expected header 'vars: N'");
      const std::string count = strip(std::string_view(line).substr(5));
      std::size_t used = 0;
      long value = 0;
      try {
        value = std::stol(count, &used);
      } catch (const std::exception&) {
        throw ParseError(line_no, 6, "variable count is not an integer");
      }
      if (used != count.size() || value < 1 || value > 64) throw ParseError(line_no, 6, "bad variable count");
      file.vars = static_cast<std::size_t>(value);
      names.emplace(VariableNames::indexed(file.vars));
      have_header = true;
      continue;
    }
    file.generators.push_back(parse_polynomial(line, *names, MonomialOrder{}, line_no));
    file.lines.push_back(line);
  }
  if (!have_header) throw ParseError(line_no + 1, 1, "missing header 'vars: N'");
  return file;
}

IdealFile read_ideal_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open ideal file '" + path.string() + "'");
  return read_ideal_file(in);
}

Ideal projective_ideal(const IdealFile& file) {
  std::vector<Polynomial> gens;
  for (const auto& g : file.generators)
    if (!g.is_zero()) gens.push_back(g);
  return Ideal(file.vars, std::move(gens));
}

Ideal affine_ideal(const IdealFile& file) {
  if (file.vars < 2) throw InputError("affine ideal files need vars >= 2 (x0 is reserved)");
  std::vector<Polynomial> gens;
  for (const auto& g : file.generators) {
    for (const auto& [e, c] : g.terms())
      if (e[0] != 0) throw InputError("x0 is reserved for homogenization and may not occur in affine ideals");
    Polynomial h = dehomogenize(g, 0);
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  return Ideal(file.vars - 1, std::move(gens));
}

VariableNames affine_names(std::size_t n) { return VariableNames::indexed(n, 1); }

VariableNames projective_names(std::size_t nvars) { return VariableNames::indexed(nvars, 0); }

}  // namespace detm
