#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locmat {

// Base class for every domain error raised by the library. CLI maps these
// to exit code 1; syntax errors carry a position and map to exit code 2.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : error {
  std::size_t position;
  parse_error(const std::string& what, std::size_t pos)
      : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct mixed_fields : error {
  using error::error;
};

struct division_by_zero : error {
  using error::error;
};

struct not_divisible : error {
  using error::error;
};

struct singular_matrix : error {
  using error::error;
};

struct det_not_one : error {
  using error::error;
};

struct no_tower : error {
  using error::error;
};

struct invalid_argument : error {
  using error::error;
};

}  // namespace locmat
