#pragma once

#include <optional>
#include <string>

#include "sturmkit/cell_complex.hpp"
#include "sturmkit/permutation.hpp"

namespace sturmkit {

/// Permutation files: ASCII, whitespace-insensitive, one-line images or cycle
/// notation with an n= header; '#' starts a comment line.
Permutation read_permutation_text(const std::string& text);
Permutation read_permutation_file(const std::string& path);

struct ComplexFile {
  RegularCellComplex complex;
  std::optional<TemplateDecoration> decoration;
};

/// JSON schema: cells (id, dim), edges (id, tail, head), faces (id, circuit),
/// optional ball, optional decoration (north, south, meridian_ew, meridian_we,
/// west, east).
ComplexFile read_complex_json(const std::string& text);
ComplexFile read_complex_file(const std::string& path);
std::string write_complex_json(const RegularCellComplex& c,
                               const std::optional<TemplateDecoration>& d);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sturmkit
