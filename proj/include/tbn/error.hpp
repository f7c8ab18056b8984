#pragma once

#include <stdexcept>
#include <string>

namespace tbn {

/// Raised for malformed input: bad indices, mismatched strand counts,
/// unparseable text.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails. Seeing one means a bug
/// or a broken mathematical assumption, never bad user input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

void require(bool cond, const std::string &msg);

}  // namespace tbn
