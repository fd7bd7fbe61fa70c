#pragma once

#include <stdexcept>
#include <string>

namespace homres {

// Mixing ring contexts (different n, commutative flag, or field).
struct context_mismatch : std::runtime_error {
  explicit context_mismatch(const std::string& what) : std::runtime_error(what) {}
};

// Operation outside its mathematical domain (e.g. divisors of 1, inverse of 0).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A query needs the rewriting system complete to a higher degree than it is.
struct incomplete_basis : std::runtime_error {
  int needed_degree;
  incomplete_basis(const std::string& what, int needed)
      : std::runtime_error(what), needed_degree(needed) {}
};

struct parse_error : std::runtime_error {
  std::size_t position;
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
};

struct unsupported_coefficient : std::runtime_error {
  explicit unsupported_coefficient(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace homres
