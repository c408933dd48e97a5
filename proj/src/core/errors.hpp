// Copyright 2026 The rcc-lab Authors.
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

#ifndef RCC_CORE_ERRORS_HPP
#define RCC_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rcc {

enum class ErrorCode {
  InvalidArgument = 1,
  DimensionMismatch,
  NotHermitian,
  NotPositive,
  BadTrace,
  NotConverged,
  PremiseViolated,
  NotTracePreserving,
  ZeroProbability,
  WrongDimension,
  SearchExhausted,
  Parse,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the core library carries one of the codes above so
// that the C API can map it onto a status value without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// The randomized creating-operation search ran out of attempts.
class SearchExhausted : public Error {
 public:
  SearchExhausted(const std::string& what, double best_coherence)
      : Error(ErrorCode::SearchExhausted, what), best_(best_coherence) {}
  double best_coherence() const noexcept { return best_; }

 private:
  double best_;
};

}  // namespace rcc

#endif  // RCC_CORE_ERRORS_HPP
