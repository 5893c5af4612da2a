// Copyright 2026 The supercurve Authors.
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

#ifndef SUPERCURVE_ERROR_HPP
#define SUPERCURVE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supercurve {

/// Root of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The modulus handed to a field constructor is not prime.
class modulus_error : public error {
 public:
  using error::error;
};

/// An argument lies outside the domain of the operation.
class domain_error : public error {
 public:
  using error::error;
};

/// Arithmetic between elements (or matrices, polynomials) of different fields.
class field_mismatch : public error {
 public:
  using error::error;
};

class division_by_zero : public error {
 public:
  using error::error;
};

/// A field too large to enumerate element by element.
class oversized_field : public error {
 public:
  using error::error;
};

/// The curve model does not support the requested computation.
class unsupported_model : public error {
 public:
  using error::error;
};

class invalid_curve : public error {
 public:
  using error::error;
};

/// Operation only defined for a restricted parameter range (e.g. a proper
/// invariant subspace when m is 2 or p + 1).
class not_applicable : public error {
 public:
  using error::error;
};

/// A randomized procedure ran out of budget before reaching a certified answer.
class inconclusive : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(std::size_t offset, std::vector<std::string> expected,
              const std::string& what)
      : error(what), offset_(offset), expected_(std::move(expected)) {}

  /// Byte offset into the source text.
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace supercurve

#endif  // SUPERCURVE_ERROR_HPP
