#pragma once

#include <stdexcept>
#include <string>

namespace sccg {

// Malformed input: bad group spec, bad file contents, invalid element or vertex.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size or search budget was exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sccg
