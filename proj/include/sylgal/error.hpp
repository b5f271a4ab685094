#pragma once

#include <stdexcept>
#include <string>

namespace sylgal {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidArguments : public Error {
public:
  explicit InvalidArguments(const std::string& what) : Error("invalid arguments: " + what) {}
};

class UnsupportedSize : public Error {
public:
  explicit UnsupportedSize(const std::string& what) : Error("unsupported size: " + what) {}
};

class UnsupportedDimension : public Error {
public:
  explicit UnsupportedDimension(const std::string& what) : Error("unsupported dimension: " + what) {}
};

class UnsupportedField : public Error {
public:
  explicit UnsupportedField(const std::string& what) : Error("unsupported field: " + what) {}
};

// Closure-generated flats that fail to form a linear space when contracted.
class GeometryAnomaly : public Error {
public:
  explicit GeometryAnomaly(const std::string& what) : Error("geometry anomaly: " + what) {}
};

class ParseError : public Error {
public:
  ParseError(int line_no, const std::string& what)
      : Error("parse error at line " + std::to_string(line_no) + ": " + what) {}
};

}  // namespace sylgal
