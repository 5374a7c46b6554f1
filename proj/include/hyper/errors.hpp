#ifndef HYPER_ERRORS_HPP
#define HYPER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyper {

/// A construction would exceed a fixed size bound (carrier capacity,
/// closure cap, enumeration limit).
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called on input that fails its documented precondition.
struct precondition_error : std::logic_error {
  explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

/// A named builtin or file entry does not exist.
struct not_found_error : std::runtime_error {
  explicit not_found_error(const std::string& what) : std::runtime_error(what) {}
};

/// Structure-file syntax or consistency error, with a 1-based line number.
struct parse_error : std::runtime_error {
  parse_error(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

}  // namespace hyper

#endif
