#pragma once

#include <optional>
#include <string>

#include "nakalab/representation.hpp"

namespace nakalab {

// Algebra description, one directive per line, `#` starts a comment:
//
//   field 2
//   vertex 1 2 3
//   arrow b 3 2
//   rel b1 b2
//
// The field line is optional (default F_2) and `override_field`, when
// set, wins over the file. Errors carry 1-based line and column.
AlgebraPtr parse_algebra_text(const std::string& text,
                              std::optional<unsigned> override_field = std::nullopt);
AlgebraPtr parse_algebra_file(const std::string& path,
                              std::optional<unsigned> override_field = std::nullopt);

// Module description over an algebra:
//
//   use ladder_2.quiver
//   dim 4 1
//   map b1 [[1]]
//
// Matrices are row-major, entries reduced mod p, omitted maps are zero
// and omitted vertices get dimension 0. The `use` path is resolved
// relative to the module file and is ignored when `alg` is provided.
Representation parse_module_text(const std::string& text, AlgebraPtr alg);
Representation parse_module_file(const std::string& path, AlgebraPtr alg = nullptr,
                                 std::optional<unsigned> override_field = std::nullopt);

}  // namespace nakalab
