#pragma once

#include <stdexcept>
#include <string>

namespace cist {

// Failure classes surfaced by the library.  The CLI maps these onto exit
// codes, so every throwing path must pick the code that matches its cause.
enum class Errc {
  field_mismatch,
  zero_inversion,
  not_prime,
  tower_too_deep,
  not_square,
  singular_matrix,
  size_mismatch,
  ambient_mismatch,
  bad_k,
  bad_dimension,
  not_squarefree,
  not_irreducible,
  not_quartic,
  char2_unsupported,
  degree_too_large,
  shift_exhausted,
  does_not_split,
  repeated_eigenvalues,
  not_invariant,
  not_a_factor,
  not_monic,
  chi_equal,
  zero_vector,
  inconsistency,
  parse_error,
  unsupported,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace cist
