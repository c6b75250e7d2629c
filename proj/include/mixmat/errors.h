// Copyright 2026 The Authors.
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

#ifndef MIXMAT_ERRORS_H_
#define MIXMAT_ERRORS_H_

#include <stdexcept>

namespace mixmat {

// Malformed arguments: out-of-range indices, unknown labels, a set that is
// not a subset of what it must be in, circuit data that is not an oriented
// matroid.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The instance exceeds kMaxElements or kMaxCircuits.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An operation was called on a value that does not meet its stated
// precondition (for example an essential-element query on an instance that
// is not P-connected).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A result failed its own self-check. Never expected to fire.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mixmat

#endif  // MIXMAT_ERRORS_H_
