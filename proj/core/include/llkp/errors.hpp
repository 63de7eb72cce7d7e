// Copyright 2026 The llkp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LLKP_ERRORS_HPP_
#define LLKP_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace llkp {

// Root of the library's exception hierarchy. what() always starts with the
// concrete error name ("NonPositiveCapacity: ...") so callers can surface it.
class Error : public std::runtime_error {
 protected:
  Error(std::string_view name, std::string_view what)
      : std::runtime_error(std::string(name) + ": " + std::string(what)) {}
};

// Instance validation.
class EmptyInstance : public Error {
 public:
  explicit EmptyInstance(std::string_view what) : Error("EmptyInstance", what) {}
};

class NonPositiveWeight : public Error {
 public:
  explicit NonPositiveWeight(std::string_view what)
      : Error("NonPositiveWeight", what) {}
};

class NonPositivePrice : public Error {
 public:
  explicit NonPositivePrice(std::string_view what)
      : Error("NonPositivePrice", what) {}
};

class NonPositiveCapacity : public Error {
 public:
  explicit NonPositiveCapacity(std::string_view what)
      : Error("NonPositiveCapacity", what) {}
};

class NonFinite : public Error {
 public:
  explicit NonFinite(std::string_view what) : Error("NonFinite", what) {}
};

class LengthMismatch : public Error {
 public:
  explicit LengthMismatch(std::string_view what)
      : Error("LengthMismatch", what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(std::string_view what) : Error("DomainError", what) {}
};

class NonPositiveScale : public Error {
 public:
  explicit NonPositiveScale(std::string_view what)
      : Error("NonPositiveScale", what) {}
};

// Certificate construction and checking.
class NoCertificateNeeded : public Error {
 public:
  explicit NoCertificateNeeded(std::string_view what)
      : Error("NoCertificateNeeded", what) {}
};

class InconsistentSolution : public Error {
 public:
  explicit InconsistentSolution(std::string_view what)
      : Error("InconsistentSolution", what) {}
};

// Water-filling oracle.
class NonPositiveLambda : public Error {
 public:
  explicit NonPositiveLambda(std::string_view what)
      : Error("NonPositiveLambda", what) {}
};

class BracketFailure : public Error {
 public:
  explicit BracketFailure(std::string_view what)
      : Error("BracketFailure", what) {}
};

class MaxIterExceeded : public Error {
 public:
  explicit MaxIterExceeded(std::string_view what)
      : Error("MaxIterExceeded", what) {}
};

// Serialization and generation.
class ParseError : public Error {
 public:
  explicit ParseError(std::string_view what) : Error("ParseError", what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(std::string_view what) : Error("ConfigError", what) {}
};

}  // namespace llkp

#endif  // LLKP_ERRORS_HPP_
