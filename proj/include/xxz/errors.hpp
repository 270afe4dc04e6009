#pragma once

#include <stdexcept>
#include <string>

namespace xxz {

/// Malformed input file or unparseable spec text. CLI exit code 2.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally invalid data: a table that is not a group, a spec whose
/// matrices do not commute, mismatched dimensions. CLI exit code 2 when
/// raised while loading a spec.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A refused computation: non-commuting stabilizer set handed to the
/// degeneracy path, composite qudit modulus, phase-obstructed group,
/// oracle size cap exceeded. CLI exit code 1.
class analysis_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xxz
