#ifndef PELLROOT_ERRORS_HPP
#define PELLROOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pellroot {

// p is a perfect square (or < 2): no Pell instance exists.
struct invalid_instance_error : std::domain_error {
  using std::domain_error::domain_error;
};

// A claimed solution does not satisfy x^2 - p*y^2 = 1 (or x, y out of range).
struct invalid_solution_error : std::domain_error {
  using std::domain_error::domain_error;
};

// A theorem's side condition fails for the given (p, m).
struct not_applicable_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Series argument outside |z| < 1.
struct divergent_argument_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Identity-verifier input outside its admissible range.
struct precondition_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Requested digits exceed the configured ceiling.
struct precision_overflow_error : std::length_error {
  using std::length_error::length_error;
};

}  // namespace pellroot

#endif
