#ifndef DTNFM_ERRORS_HPP
#define DTNFM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dtnfm {

/// Caller handed us something malformed: non-finite entries, mismatched
/// dimensions, out-of-range hyperparameters.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The ADMM iteration produced non-finite values. Carries the iteration
/// index at which the blow-up was detected.
class SolverDivergenceError : public std::runtime_error {
 public:
  SolverDivergenceError(const std::string& what, int iteration)
      : std::runtime_error(what), iteration_(iteration) {}
  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

/// Solver divergence surfaced through the denoising pipeline; carries the
/// key-patch position of the failing group.
class PipelineDivergenceError : public std::runtime_error {
 public:
  PipelineDivergenceError(const std::string& what, int key_row, int key_col,
                          int iteration)
      : std::runtime_error(what),
        key_row_(key_row),
        key_col_(key_col),
        iteration_(iteration) {}
  int key_row() const { return key_row_; }
  int key_col() const { return key_col_; }
  int iteration() const { return iteration_; }

 private:
  int key_row_;
  int key_col_;
  int iteration_;
};

/// A guaranteed internal property failed (e.g. a pixel no patch covered).
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// File could not be read, written, or parsed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dtnfm

#endif  // DTNFM_ERRORS_HPP
