// Copyright 2026 The ambigame Authors. All rights reserved.
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

#ifndef AMBIGAME_ERRORS_H_
#define AMBIGAME_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace ambigame {

// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A vector that should be a probability distribution is not one.
class InvalidProbability : public Error {
 public:
  InvalidProbability(const std::string& what, int vertex_index)
      : Error(what), vertex_index_(vertex_index) {}
  int vertex_index() const { return vertex_index_; }

 private:
  int vertex_index_;
};

// Conditioning on an event that some prior in the set assigns probability 0.
class ZeroProbabilityReach : public Error {
 public:
  ZeroProbabilityReach(const std::string& what, std::vector<std::string> vertex)
      : Error(what), vertex_(std::move(vertex)) {}
  // The offending prior, rendered as exact rational strings.
  const std::vector<std::string>& vertex() const { return vertex_; }

 private:
  std::vector<std::string> vertex_;
};

class MalformedGame : public Error {
 public:
  using Error::Error;
};

class PerfectRecallViolation : public Error {
 public:
  using Error::Error;
};

class UnboundParameter : public Error {
 public:
  explicit UnboundParameter(const std::string& name)
      : Error("payoff parameter '" + name + "' is not bound"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Beliefs are stated over states that do not pin down the player's payoffs.
class StateSpaceMismatch : public Error {
 public:
  using Error::Error;
};

// Input documents that violate the JSON schemas. Carries one message per
// offending JSON path.
class SchemaError : public Error {
 public:
  explicit SchemaError(std::vector<std::string> problems)
      : Error(Join(problems)), problems_(std::move(problems)) {}
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string Join(const std::vector<std::string>& problems) {
    std::string out;
    for (const auto& p : problems) {
      if (!out.empty()) out += "; ";
      out += p;
    }
    return out;
  }
  std::vector<std::string> problems_;
};

}  // namespace ambigame

#endif  // AMBIGAME_ERRORS_H_
