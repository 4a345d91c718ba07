// Copyright 2026 The greenprior Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREENPRIOR_ERROR_HPP
#define GREENPRIOR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace greenprior {

// Error classes map 1:1 onto process exit codes and C API status values.
enum class ErrorClass : int {
  config = 2,
  data = 3,
  numeric = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string message)
      : std::runtime_error(std::move(message)), cls_(cls) {}
  ErrorClass error_class() const { return cls_; }

 private:
  ErrorClass cls_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(std::string message)
      : Error(ErrorClass::config, std::move(message)) {}
};

class DataError : public Error {
 public:
  explicit DataError(std::string message)
      : Error(ErrorClass::data, std::move(message)) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(std::string message)
      : Error(ErrorClass::numeric, std::move(message)) {}
};

// Concrete conditions referenced across modules.

class MisalignedGrids : public DataError {
 public:
  explicit MisalignedGrids(std::string message = "grids are not aligned")
      : DataError(std::move(message)) {}
};

class DuplicateLayerName : public DataError {
 public:
  explicit DuplicateLayerName(const std::string& name)
      : DataError("duplicate layer name: " + name) {}
};

class UnknownAttribute : public DataError {
 public:
  explicit UnknownAttribute(const std::string& name)
      : DataError("unknown zone attribute: " + name) {}
};

class UnknownFeature : public DataError {
 public:
  explicit UnknownFeature(const std::string& name)
      : DataError("unknown feature: " + name) {}
};

class EmptyTable : public DataError {
 public:
  explicit EmptyTable(std::string message = "feature table is empty")
      : DataError(std::move(message)) {}
};

class TooFewRows : public DataError {
 public:
  explicit TooFewRows(std::string message = "too few rows")
      : DataError(std::move(message)) {}
};

class TooFewStations : public DataError {
 public:
  explicit TooFewStations(std::string message = "too few stations")
      : DataError(std::move(message)) {}
};

class NoComparablePoints : public DataError {
 public:
  explicit NoComparablePoints(
      std::string message = "no observations fall on valid grid cells")
      : DataError(std::move(message)) {}
};

class LengthMismatch : public DataError {
 public:
  explicit LengthMismatch(std::string message = "sequence lengths differ")
      : DataError(std::move(message)) {}
};

class SingleClassTraining : public DataError {
 public:
  explicit SingleClassTraining(
      std::string message = "training labels contain a single class")
      : DataError(std::move(message)) {}
};

class WrongModelKind : public ConfigError {
 public:
  explicit WrongModelKind(std::string message)
      : ConfigError(std::move(message)) {}
};

class SingularSystem : public NumericError {
 public:
  explicit SingularSystem(
      std::string message = "kriging system is numerically singular")
      : NumericError(std::move(message)) {}
};

class ParseError : public DataError {
 public:
  ParseError(const std::string& path, int line, const std::string& what)
      : DataError(path + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class DimensionMismatch : public DataError {
 public:
  explicit DimensionMismatch(std::string message)
      : DataError(std::move(message)) {}
};

}  // namespace greenprior

#endif  // GREENPRIOR_ERROR_HPP
