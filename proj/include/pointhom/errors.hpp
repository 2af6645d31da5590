#pragma once

#include <stdexcept>
#include <string>

namespace pointhom {

struct RadicandMismatch : std::runtime_error {
  explicit RadicandMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
  explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct ParamError : std::runtime_error {
  explicit ParamError(const std::string& what) : std::runtime_error(what) {}
};

struct AmbiguousClustering : std::runtime_error {
  explicit AmbiguousClustering(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotHomogeneous : std::runtime_error {
  explicit NotHomogeneous(const std::string& what) : std::runtime_error(what) {}
};

struct NeedsDimension : std::runtime_error {
  explicit NeedsDimension(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pointhom
