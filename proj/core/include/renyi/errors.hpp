#pragma once

#include <stdexcept>
#include <string>

namespace renyi {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Index is undefined when every weight is zero (mean weight = 0).
class AllZeroWeights : public Error {
 public:
  using Error::Error;
};

class NonPositiveAlpha : public Error {
 public:
  using Error::Error;
};

class NegativeWeight : public Error {
 public:
  using Error::Error;
};

// Edge-list line that is not "u v" with nonnegative integers.
class MalformedLine : public Error {
 public:
  MalformedLine(int line_no, const std::string& detail)
      : Error("line " + std::to_string(line_no) + ": " + detail),
        line_no_(line_no) {}
  int line_no() const { return line_no_; }

 private:
  int line_no_;
};

// Node id >= the n declared in the file header.
class NodeIdOutOfRange : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Pole of the truncated-Pareto moment formula at k == tau.
class KEqualsTau : public Error {
 public:
  using Error::Error;
};

// Rate regression impossible: too few points or zero spread in n.
class DegenerateFit : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Declarative experiment config violates the schema; carries the key path.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& key_path, const std::string& detail)
      : Error(key_path + ": " + detail), key_path_(key_path) {}
  const std::string& key_path() const { return key_path_; }

 private:
  std::string key_path_;
};

}  // namespace renyi
