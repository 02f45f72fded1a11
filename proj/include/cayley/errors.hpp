#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

// Invalid user input (bad group spec, mismatched degrees, ...). CLI exit code 2.
struct InvalidInput : std::invalid_argument {
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A configured resource guard was hit (census size, Aut(A) enumeration, ...).
// CLI exit code 3.
struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// An internal mathematical assertion failed. Reaching this means either a bug
// or a genuine counterexample to one of the verified statements; the failure
// message carries the witness. CLI exit code 1.
struct CheckFailure : std::logic_error {
  explicit CheckFailure(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cayley
