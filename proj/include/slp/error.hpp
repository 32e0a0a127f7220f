/*
 * Copyright 2026 The slp Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value outside the domain of an operation (bad numeric, bad table, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed formula text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        message_(what),
        line_(line),
        column_(column) {}

  /// The diagnostic without its position prefix.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// A relation or constant symbol that the governing signature lacks.
class UnknownSymbolError : public Error {
 public:
  using Error::Error;
};

/// A relation used with the wrong number of arguments.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Evaluation failed: unbound atom or variable, quantifier in a
/// propositional context, non-classical input to a classical operation.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size limit.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Input files (models, signatures, embeddings, theories) that fail validation.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace slp
