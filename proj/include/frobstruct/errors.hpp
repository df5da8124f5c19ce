/*
 * Copyright 2026 the frobstruct authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace frobstruct {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidArgumentError : public Error {
  public:
    using Error::Error;
};

/// A relation failed the transitivity check; carries a witnessing triple
/// (x <= y and y <= z hold but x <= z does not).
class NotTransitiveError : public Error {
  public:
    NotTransitiveError(int x, int y, int z)
        : Error("relation is not transitive: (" + std::to_string(x) + "," + std::to_string(y) +
                ") and (" + std::to_string(y) + "," + std::to_string(z) + ") present but (" +
                std::to_string(x) + "," + std::to_string(z) + ") missing"),
          x_(x), y_(y), z_(z) {}

    int x() const { return x_; }
    int y() const { return y_; }
    int z() const { return z_; }

  private:
    int x_, y_, z_;
};

class IndexOutOfRangeError : public Error {
  public:
    using Error::Error;
};

/// Raised when an operation needs x <= y but the pair is not comparable.
class NotComparableError : public Error {
  public:
    NotComparableError(int x, int y)
        : Error("elements are not comparable: " + std::to_string(x) + " <= " + std::to_string(y) +
                " does not hold"),
          x_(x), y_(y) {}

    int x() const { return x_; }
    int y() const { return y_; }

  private:
    int x_, y_;
};

class BoundExceededError : public Error {
  public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
  public:
    using Error::Error;
};

class NonSquareError : public Error {
  public:
    using Error::Error;
};

/// An algebra element has support outside the defining pattern.
class PatternViolationError : public Error {
  public:
    using Error::Error;
};

class NotACoidealError : public Error {
  public:
    using Error::Error;
};

class NotBasisSupportedError : public Error {
  public:
    using Error::Error;
};

class NotFrobeniusError : public Error {
  public:
    using Error::Error;
};

class BadRepresentativesError : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace frobstruct
