#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "hmn/field.hpp"
#include "hmn/module.hpp"

namespace hmn {

// Unreadable, unwritable or malformed module files. Distinct from the
// std::invalid_argument used for bad in-process arguments so callers can map
// file trouble to its own exit path.
class ModuleIOError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// JSON layout, format tag "HMNMOD1":
//   { "format": "HMNMOD1", "m": _, "n": _, "dim": _, "label": _,
//     "action": { "a": rows, "b": rows, "c": rows, "d": rows } }
// where rows is a dim x dim row-major array and every entry is the list of
// phi power-basis coordinates as canonical "num/den" strings.
std::string module_to_json(const Module& M);

// Parses and shape-checks against F (parameter match, matrix sizes,
// coordinate degree). The actions are taken as stored; algebraic validity is
// the caller's concern (see Module::relation_failures).
Module module_from_json(const Field& F, const std::string& text);

// Parameter peek so a caller can construct the right Field before loading.
std::pair<int, int> module_file_params(const std::string& path);

Module read_module(const Field& F, const std::string& path);

// Stages to a sibling temp file and renames into place, so a crash never
// leaves a half-written target.
void write_module(const std::string& path, const Module& M);

} // namespace hmn
