#pragma once

#include <stdexcept>
#include <string>

namespace stallings {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A word uses a generator index outside the ambient alphabet.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

// Two subgroups of different ambient free groups were combined.
class RankMismatchError : public Error {
 public:
  using Error::Error;
};

// A precondition was violated (e.g. a connected graph was required).
class ContractError : public Error {
 public:
  using Error::Error;
};

// relative_index was asked for a pair that is not nested.
class NotASubgroupError : public Error {
 public:
  using Error::Error;
};

// Rejection sampling ran out of its attempt budget.
class SamplingError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; carries the 1-based line number.
class FormatError : public Error {
 public:
  FormatError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace stallings
