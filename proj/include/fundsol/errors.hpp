#pragma once

#include <stdexcept>
#include <string>

namespace fundsol {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the region where the requested evaluation is defined.
class domain_error : public error {
 public:
  using error::error;
};

// Lower parameter of a hypergeometric function is a nonpositive integer.
class pole_error : public error {
 public:
  using error::error;
};

class coincident_pole : public domain_error {
 public:
  coincident_pole() : domain_error("coincident pole") {}
};

}  // namespace fundsol
