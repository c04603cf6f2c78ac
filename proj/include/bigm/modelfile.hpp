// Copyright 2026 bigm developers
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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bigm/csp.hpp"
#include "bigm/model.hpp"
#include "bigm/reify.hpp"
#include "bigm/sequence.hpp"

namespace bigm::modelfile {

// Parsed statements, in file order. The grammar is line-oriented and
// fail-closed: unknown keywords are rejected with line/column positions.
// See docs/modelfile.md for the full grammar.

struct VarDecl {
  std::string name;
  bool binary = false;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  int line = 0;
};

struct CspBlock {
  std::vector<std::string> domain;
  std::vector<std::string> vars;
  std::vector<std::pair<std::string, std::string>> neq_edges;
  int line = 0;
};

struct SequenceBlock {
  int steps = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<KernelApplication> kernels;
  int line = 0;
};

struct ReifyDecl {
  std::string kernel;  // "even" | "odd" | "congruence:k:r"
  std::string target;
  KernelMode mode = KernelMode::Require;
  std::int64_t weight = 1;
  int line = 0;
};

struct NamedTerm {
  std::string name;
  std::int64_t coef = 1;
};

struct RawConstraint {
  std::string label;  // empty -> auto "c<index>" at compile time
  std::vector<NamedTerm> terms;
  Sense sense = Sense::LE;
  std::int64_t rhs = 0;
  int line = 0;
};

struct ObjectiveDecl {
  ObjectiveSense sense = ObjectiveSense::Feasibility;
  std::vector<NamedTerm> terms;
  int line = 0;
};

struct Document {
  std::vector<VarDecl> vars;
  std::optional<CspBlock> csp;
  std::optional<SequenceBlock> sequence;
  std::vector<ReifyDecl> reifications;
  std::vector<RawConstraint> constraints;
  std::optional<ObjectiveDecl> objective;
};

/// Throws ParseError with "<origin>:<line>:<col>" positions.
Document parse(std::string_view text, std::string_view origin = "<string>");

/// Throws IoError, ParseError.
Document parse_file(const std::string& path);

/// Canonical text form; parse(print(doc)) compiles to an identical model.
std::string print(const Document& document);

/// A reification statement resolved for arithmetic re-checking.
struct ResolvedReify {
  std::string kernel;
  std::string target;
  std::int64_t modulus = 2;
  std::int64_t remainder = 0;
  KernelMode mode = KernelMode::Require;
};

/// A document lowered into one validated Model, plus the codebooks needed
/// to decode solutions and to check assignments at block level.
struct CompiledModel {
  Model model;
  std::optional<CspInstance> csp;
  std::optional<CspCodebook> codebook;
  std::optional<SequenceSpec> sequence_spec;
  std::vector<KernelApplication> sequence_apps;
  std::vector<VarId> states;
  std::vector<ResolvedReify> reifications;
  std::vector<ReifiedTerm> soft_terms;
  std::size_t raw_rows_begin = 0;  // row range of the raw constraints
  std::size_t raw_rows_end = 0;
  std::vector<std::string> user_vars;  // declared with `var`, file order
};

/// Builds the model in a fixed phase order regardless of statement order
/// in the file: variables, csp block, sequence block, reifications, raw
/// constraints, objective. Soft kernels and soft reifications aggregate
/// into a Maximize objective and exclude an explicit objective statement.
/// Throws ParseError, ValidationError and the model-building errors.
CompiledModel compile(const Document& document);

CompiledModel load_file(const std::string& path);
CompiledModel load_string(std::string_view text,
                          std::string_view origin = "<string>");

struct CheckReport {
  bool feasible = true;
  std::vector<std::string> violations;
};

/// Checks a "name = value" assignment against the model. The assignment
/// must cover exactly the user-facing variables: declared vars and
/// sequence states with integers, csp variables with domain labels.
/// Csp edges are checked with homomorphism semantics, Require-mode
/// kernels and reifications arithmetically, raw rows by exact
/// evaluation (one-hot values are lifted from the csp labels).
/// Throws ParseError for malformed input, ValidationError when the
/// assignment misses or invents variables or a raw row cannot be
/// evaluated.
CheckReport check_assignment(const CompiledModel& compiled,
                             std::string_view assignment_text,
                             std::string_view origin = "<string>");

CheckReport check_assignment_file(const CompiledModel& compiled,
                                  const std::string& path);

}  // namespace bigm::modelfile
