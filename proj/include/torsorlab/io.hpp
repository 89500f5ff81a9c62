#pragma once

#include <string>

#include "torsorlab/group.hpp"

namespace torsorlab {

/// Builds a group from a CLI-style spec string.
///
/// Builtin names: z<n> (cyclic), s<n> (symmetric), d<n> (dihedral), q8, k4.
/// 'x' joins builtins into direct products, e.g. "z2xz4". A spec prefixed
/// with "file:", or one that matches no builtin pattern, is read as a path
/// to a JSON group file.
GroupRef group_from_spec(const std::string& spec);

/// Reads a group from a JSON file {"name": string, "table": [[int]]}.
///
/// Throws std::runtime_error for unreadable files or malformed JSON and
/// CayleyValidationError (with row/column coordinates) for bad tables.
GroupRef load_group_json(const std::string& path);

}  // namespace torsorlab
