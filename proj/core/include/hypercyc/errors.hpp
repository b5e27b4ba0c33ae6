// Copyright 2026 The hypercyc Authors.
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

#ifndef HYPERCYC_ERRORS_HPP
#define HYPERCYC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypercyc {

// Root of every exception thrown by the library. Logic errors in callers
// (bad arguments, violated preconditions) and desk-scale limits are kept
// apart so the command line front end can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BadArgument : public Error {
 public:
  using Error::Error;
};

// shift_down was asked to divide by z^m but some exponent is below m.
class SupportTooLow : public Error {
 public:
  using Error::Error;
};

// A beta value, factorial or materialised degree would exceed the configured
// resource limits.
class ResourceCap : public Error {
 public:
  using Error::Error;
};

class IndexNotCovered : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

// A persisted construction state failed re-verification.
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypercyc

#endif  // HYPERCYC_ERRORS_HPP
