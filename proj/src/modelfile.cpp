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

#include "bigm/modelfile.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bigm/lp_format.hpp"

namespace bigm::modelfile {
namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

using Line = std::vector<Token>;

[[noreturn]] void fail_at(std::string_view origin, int line, int col,
                          const std::string& message) {
  std::ostringstream out;
  out << origin << ":" << line << ":" << col << ": " << message;
  raise(ErrorCode::ParseError, out.str());
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(text[0])) && text[0] != '_') {
    return false;
  }
  return std::all_of(text.begin(), text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool parse_int64(std::string_view text, std::int64_t& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<Line> tokenize(std::string_view text, std::string_view origin) {
  std::vector<Line> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    Line tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      char c = line[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '{' || c == '}') {
        tokens.push_back(
            {std::string(1, c), line_no, static_cast<int>(i) + 1});
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i])) &&
             line[i] != '{' && line[i] != '}' && line[i] != '#') {
        ++i;
      }
      tokens.push_back({std::string(line.substr(start, i - start)), line_no,
                        static_cast<int>(start) + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  (void)origin;
  return lines;
}

// One statement's tokens with a cursor.
class Cursor {
 public:
  Cursor(const Line& line, std::string_view origin)
      : line_(line), origin_(origin) {}

  bool done() const { return index_ >= line_.size(); }

  const Token& peek() const {
    if (done()) {
      const Token& last = line_.back();
      fail_at(origin_, last.line,
              last.col + static_cast<int>(last.text.size()),
              "unexpected end of line");
    }
    return line_[index_];
  }

  Token take() {
    const Token& token = peek();
    ++index_;
    return token;
  }

  std::string take_identifier(const std::string& what) {
    Token token = take();
    if (!is_identifier(token.text)) {
      fail_at(origin_, token.line, token.col,
              "expected " + what + ", got '" + token.text + "'");
    }
    return token.text;
  }

  std::int64_t take_int(const std::string& what) {
    Token token = take();
    std::int64_t value = 0;
    if (!parse_int64(token.text, value)) {
      fail_at(origin_, token.line, token.col,
              "expected " + what + ", got '" + token.text + "'");
    }
    return value;
  }

  void take_keyword(const std::string& keyword) {
    Token token = take();
    if (token.text != keyword) {
      fail_at(origin_, token.line, token.col,
              "expected '" + keyword + "', got '" + token.text + "'");
    }
  }

  void expect_done() {
    if (!done()) {
      const Token& token = peek();
      fail_at(origin_, token.line, token.col,
              "unexpected trailing token '" + token.text + "'");
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    if (done()) {
      const Token& last = line_.back();
      fail_at(origin_, last.line,
              last.col + static_cast<int>(last.text.size()), message);
    }
    fail_at(origin_, peek().line, peek().col, message);
  }

 private:
  const Line& line_;
  std::string_view origin_;
  std::size_t index_ = 0;
};

bool is_sense_token(const std::string& text) {
  return text == "<=" || text == ">=" || text == "=";
}

Sense sense_from(const std::string& text) {
  if (text == "<=") return Sense::LE;
  if (text == ">=") return Sense::GE;
  return Sense::EQ;
}

// expr := ['-'] term { ('+'|'-') term },  term := [int] name
// A signed integer token also opens a term ("x -2 n" == "x - 2 n").
std::vector<NamedTerm> parse_expr(Cursor& cursor, bool stop_at_sense) {
  std::vector<NamedTerm> terms;
  bool first = true;
  while (!cursor.done() &&
         !(stop_at_sense && is_sense_token(cursor.peek().text))) {
    std::int64_t sign = 1;
    const std::string& head = cursor.peek().text;
    if (head == "+" || head == "-") {
      if (first && head == "+") cursor.fail("expression cannot start with '+'");
      sign = head == "-" ? -1 : 1;
      cursor.take();
    } else if (!first) {
      std::int64_t fused = 0;
      if (!(parse_int64(head, fused) && fused < 0)) {
        cursor.fail("expected '+' or '-' between terms");
      }
    }
    std::int64_t coef = 1;
    std::int64_t value = 0;
    if (!cursor.done() && parse_int64(cursor.peek().text, value)) {
      coef = value;
      cursor.take();
    }
    std::string name = cursor.take_identifier("variable name");
    terms.push_back({std::move(name), sign * coef});
    first = false;
  }
  if (terms.empty()) cursor.fail("expected a linear expression");
  return terms;
}

void validate_kernel_name(Cursor& cursor, const std::string& name) {
  try {
    kernel_congruence_params(name);
  } catch (const Error& e) {
    cursor.fail(e.what());
  }
}

KernelMode parse_mode(Cursor& cursor) {
  Token token = cursor.take();
  if (token.text == "require") return KernelMode::Require;
  if (token.text == "soft") return KernelMode::Soft;
  cursor.fail("expected 'require' or 'soft', got '" + token.text + "'");
}

std::int64_t parse_optional_weight(Cursor& cursor) {
  if (cursor.done()) return 1;
  cursor.take_keyword("weight");
  return cursor.take_int("weight");
}

}  // namespace

Document parse(std::string_view text, std::string_view origin) {
  Document doc;
  std::vector<Line> lines = tokenize(text, origin);

  enum class BlockKind { None, Csp, Sequence };
  BlockKind block = BlockKind::None;
  bool seq_seen_steps = false;
  bool seq_seen_lo = false;
  bool seq_seen_hi = false;

  for (const Line& line : lines) {
    Cursor cursor(line, origin);
    Token head = cursor.take();

    if (block != BlockKind::None) {
      if (head.text == "}") {
        cursor.expect_done();
        block = BlockKind::None;
        continue;
      }
      if (block == BlockKind::Csp) {
        CspBlock& csp = *doc.csp;
        if (head.text == "domain") {
          if (!csp.domain.empty()) cursor.fail("duplicate 'domain' line");
          while (!cursor.done()) {
            csp.domain.push_back(cursor.take_identifier("domain value"));
          }
          if (csp.domain.empty()) cursor.fail("domain needs at least one value");
        } else if (head.text == "vars") {
          if (!csp.vars.empty()) cursor.fail("duplicate 'vars' line");
          while (!cursor.done()) {
            csp.vars.push_back(cursor.take_identifier("csp variable"));
          }
          if (csp.vars.empty()) cursor.fail("vars needs at least one name");
        } else if (head.text == "neq") {
          std::string u = cursor.take_identifier("csp variable");
          std::string v = cursor.take_identifier("csp variable");
          cursor.expect_done();
          csp.neq_edges.emplace_back(std::move(u), std::move(v));
        } else {
          fail_at(origin, head.line, head.col,
                  "unknown csp item '" + head.text + "'");
        }
        continue;
      }
      // sequence block
      SequenceBlock& seq = *doc.sequence;
      auto set_once = [&](std::int64_t& slot, bool& seen,
                          const char* what) {
        if (seen) cursor.fail(std::string("duplicate '") + what + "' line");
        slot = cursor.take_int(what);
        cursor.expect_done();
        seen = true;
      };
      if (head.text == "steps") {
        if (seq_seen_steps) cursor.fail("duplicate 'steps' line");
        std::int64_t steps = cursor.take_int("steps");
        cursor.expect_done();
        if (steps < 1) {
          fail_at(origin, head.line, head.col, "steps must be >= 1");
        }
        seq.steps = static_cast<int>(steps);
        seq_seen_steps = true;
      } else if (head.text == "lo") {
        set_once(seq.lo, seq_seen_lo, "lo");
      } else if (head.text == "hi") {
        set_once(seq.hi, seq_seen_hi, "hi");
      } else if (head.text == "kernel") {
        KernelApplication app;
        app.kernel = cursor.take().text;
        validate_kernel_name(cursor, app.kernel);
        cursor.take_keyword("step");
        app.step = static_cast<int>(cursor.take_int("step"));
        app.mode = parse_mode(cursor);
        app.weight = parse_optional_weight(cursor);
        cursor.expect_done();
        seq.kernels.push_back(std::move(app));
      } else {
        fail_at(origin, head.line, head.col,
                "unknown sequence item '" + head.text + "'");
      }
      continue;
    }

    if (head.text == "var") {
      VarDecl decl;
      decl.line = head.line;
      decl.name = cursor.take_identifier("variable name");
      Token kind = cursor.take();
      if (kind.text == "int") {
        decl.lo = cursor.take_int("lower bound");
        decl.hi = cursor.take_int("upper bound");
      } else if (kind.text == "bin") {
        decl.binary = true;
        decl.lo = 0;
        decl.hi = 1;
      } else {
        fail_at(origin, kind.line, kind.col,
                "expected 'int' or 'bin', got '" + kind.text + "'");
      }
      cursor.expect_done();
      doc.vars.push_back(std::move(decl));
    } else if (head.text == "csp") {
      if (doc.csp) {
        fail_at(origin, head.line, head.col, "duplicate csp block");
      }
      cursor.take_keyword("{");
      cursor.expect_done();
      doc.csp.emplace();
      doc.csp->line = head.line;
      block = BlockKind::Csp;
    } else if (head.text == "sequence") {
      if (doc.sequence) {
        fail_at(origin, head.line, head.col, "duplicate sequence block");
      }
      cursor.take_keyword("{");
      cursor.expect_done();
      doc.sequence.emplace();
      doc.sequence->line = head.line;
      seq_seen_steps = seq_seen_lo = seq_seen_hi = false;
      block = BlockKind::Sequence;
    } else if (head.text == "reify") {
      ReifyDecl decl;
      decl.line = head.line;
      decl.kernel = cursor.take().text;
      validate_kernel_name(cursor, decl.kernel);
      decl.target = cursor.take_identifier("target variable");
      decl.mode = parse_mode(cursor);
      decl.weight = parse_optional_weight(cursor);
      cursor.expect_done();
      doc.reifications.push_back(std::move(decl));
    } else if (head.text == "constraint") {
      RawConstraint row;
      row.line = head.line;
      const std::string& maybe_label = cursor.peek().text;
      if (maybe_label.size() > 1 && maybe_label.back() == ':' &&
          is_identifier(maybe_label.substr(0, maybe_label.size() - 1))) {
        row.label = maybe_label.substr(0, maybe_label.size() - 1);
        cursor.take();
      }
      row.terms = parse_expr(cursor, /*stop_at_sense=*/true);
      Token op = cursor.take();
      if (!is_sense_token(op.text)) {
        fail_at(origin, op.line, op.col,
                "expected '<=', '>=' or '=', got '" + op.text + "'");
      }
      row.sense = sense_from(op.text);
      row.rhs = cursor.take_int("right-hand side");
      cursor.expect_done();
      doc.constraints.push_back(std::move(row));
    } else if (head.text == "objective") {
      if (doc.objective) {
        fail_at(origin, head.line, head.col, "duplicate objective");
      }
      ObjectiveDecl decl;
      decl.line = head.line;
      Token kind = cursor.take();
      if (kind.text == "maximize") {
        decl.sense = ObjectiveSense::Maximize;
        decl.terms = parse_expr(cursor, /*stop_at_sense=*/false);
      } else if (kind.text == "minimize") {
        decl.sense = ObjectiveSense::Minimize;
        decl.terms = parse_expr(cursor, /*stop_at_sense=*/false);
      } else if (kind.text == "feasibility") {
        decl.sense = ObjectiveSense::Feasibility;
        cursor.expect_done();
      } else {
        fail_at(origin, kind.line, kind.col,
                "expected 'maximize', 'minimize' or 'feasibility', got '" +
                    kind.text + "'");
      }
      doc.objective = std::move(decl);
    } else {
      fail_at(origin, head.line, head.col,
              "unknown statement '" + head.text + "'");
    }
  }

  if (block != BlockKind::None) {
    raise(ErrorCode::ParseError,
          std::string(origin) + ": unterminated block (missing '}')");
  }
  if (doc.sequence &&
      !(seq_seen_steps && seq_seen_lo && seq_seen_hi)) {
    raise(ErrorCode::ParseError,
          std::string(origin) +
              ": sequence block needs 'steps', 'lo' and 'hi'");
  }
  return doc;
}

Document parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorCode::IoError, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

namespace {

void print_terms(std::ostream& out, const std::vector<NamedTerm>& terms) {
  bool first = true;
  for (const NamedTerm& term : terms) {
    if (first) {
      if (term.coef == 1) {
        out << term.name;
      } else if (term.coef == -1) {
        out << "- " << term.name;
      } else {
        out << term.coef << " " << term.name;
      }
      first = false;
      continue;
    }
    std::int64_t magnitude = term.coef < 0 ? -term.coef : term.coef;
    out << (term.coef < 0 ? " - " : " + ");
    if (magnitude != 1) out << magnitude << " ";
    out << term.name;
  }
}

}  // namespace

std::string print(const Document& doc) {
  std::ostringstream out;
  for (const VarDecl& decl : doc.vars) {
    if (decl.binary) {
      out << "var " << decl.name << " bin\n";
    } else {
      out << "var " << decl.name << " int " << decl.lo << " " << decl.hi
          << "\n";
    }
  }
  if (doc.csp) {
    out << "csp {\n  domain";
    for (const std::string& value : doc.csp->domain) out << " " << value;
    out << "\n  vars";
    for (const std::string& name : doc.csp->vars) out << " " << name;
    out << "\n";
    for (const auto& [u, v] : doc.csp->neq_edges) {
      out << "  neq " << u << " " << v << "\n";
    }
    out << "}\n";
  }
  if (doc.sequence) {
    out << "sequence {\n";
    out << "  steps " << doc.sequence->steps << "\n";
    out << "  lo " << doc.sequence->lo << "\n";
    out << "  hi " << doc.sequence->hi << "\n";
    for (const KernelApplication& app : doc.sequence->kernels) {
      out << "  kernel " << app.kernel << " step " << app.step << " "
          << (app.mode == KernelMode::Require ? "require" : "soft");
      if (app.weight != 1) out << " weight " << app.weight;
      out << "\n";
    }
    out << "}\n";
  }
  for (const ReifyDecl& decl : doc.reifications) {
    out << "reify " << decl.kernel << " " << decl.target << " "
        << (decl.mode == KernelMode::Require ? "require" : "soft");
    if (decl.weight != 1) out << " weight " << decl.weight;
    out << "\n";
  }
  for (const RawConstraint& row : doc.constraints) {
    out << "constraint ";
    if (!row.label.empty()) out << row.label << ": ";
    print_terms(out, row.terms);
    out << " "
        << (row.sense == Sense::LE   ? "<="
            : row.sense == Sense::GE ? ">="
                                     : "=")
        << " " << row.rhs << "\n";
  }
  if (doc.objective) {
    out << "objective ";
    if (doc.objective->sense == ObjectiveSense::Feasibility) {
      out << "feasibility\n";
    } else {
      out << (doc.objective->sense == ObjectiveSense::Maximize ? "maximize "
                                                               : "minimize ");
      print_terms(out, doc.objective->terms);
      out << "\n";
    }
  }
  return out.str();
}

namespace {

[[noreturn]] void fail_line(int line, const std::string& message) {
  raise(ErrorCode::ValidationError,
        message + " (line " + std::to_string(line) + ")");
}

VarId resolve_name(const Model& model, const std::string& name, int line) {
  std::optional<VarId> id = model.find_var(name);
  if (!id) fail_line(line, "unknown variable '" + name + "'");
  return *id;
}

}  // namespace

CompiledModel compile(const Document& doc) {
  CompiledModel out;
  Model& model = out.model;

  for (const VarDecl& decl : doc.vars) {
    try {
      if (decl.binary) {
        model.add_bool_var(decl.name);
      } else {
        model.add_int_var(decl.name, decl.lo, decl.hi);
      }
    } catch (const Error& e) {
      fail_line(decl.line, e.what());
    }
    out.user_vars.push_back(decl.name);
  }

  if (doc.csp) {
    const CspBlock& block = *doc.csp;
    if (block.domain.empty() || block.vars.empty()) {
      fail_line(block.line, "csp block needs 'domain' and 'vars' lines");
    }
    CspInstance instance;
    instance.domain.values = block.domain;
    std::set<std::string> seen_labels(block.domain.begin(),
                                      block.domain.end());
    if (seen_labels.size() != block.domain.size()) {
      fail_line(block.line, "csp domain has duplicate values");
    }
    std::set<std::string> seen_vars;
    for (const std::string& name : block.vars) {
      if (!seen_vars.insert(name).second) {
        fail_line(block.line, "duplicate csp variable '" + name + "'");
      }
      if (model.find_var(name)) {
        fail_line(block.line, "csp variable '" + name +
                                  "' collides with a declared variable");
      }
    }
    instance.variables = block.vars;
    BinaryRelation neq = neq_relation(instance.domain);
    for (const auto& [u, v] : block.neq_edges) {
      int ui = instance.var_index(u);
      int vi = instance.var_index(v);
      if (ui < 0 || vi < 0) {
        fail_line(block.line, "neq edge references unknown csp variable '" +
                                  (ui < 0 ? u : v) + "'");
      }
      instance.constraints.push_back(CspConstraint{ui, vi, neq});
    }
    try {
      out.codebook = encode_csp_into(model, instance);
    } catch (const Error& e) {
      fail_line(block.line, e.what());
    }
    out.csp = std::move(instance);
  }

  if (doc.sequence) {
    const SequenceBlock& block = *doc.sequence;
    SequenceSpec spec{block.steps, block.lo, block.hi};
    try {
      out.states = build_sequence(model, spec);
      out.soft_terms = apply_kernels(model, out.states, block.kernels);
    } catch (const Error& e) {
      fail_line(block.line, e.what());
    }
    out.sequence_spec = spec;
    out.sequence_apps = block.kernels;
  }

  for (const ReifyDecl& decl : doc.reifications) {
    VarId target = resolve_name(model, decl.target, decl.line);
    auto [k, r] = kernel_congruence_params(decl.kernel);
    ReifiedTerm term;
    try {
      term = reify_congruence(model, CongruenceSpec{target, k, r},
                              decl.weight);
    } catch (const Error& e) {
      fail_line(decl.line, e.what());
    }
    if (decl.mode == KernelMode::Require) {
      require(model, term);
    } else {
      out.soft_terms.push_back(term);
    }
    out.reifications.push_back(
        ResolvedReify{decl.kernel, decl.target, k, r, decl.mode});
  }

  out.raw_rows_begin = model.num_constraints();
  for (const RawConstraint& row : doc.constraints) {
    LinearConstraint constraint;
    constraint.label = row.label;
    constraint.sense = row.sense;
    constraint.rhs = row.rhs;
    for (const NamedTerm& term : row.terms) {
      constraint.terms.push_back(
          {resolve_name(model, term.name, row.line), term.coef});
    }
    try {
      model.add_constraint(std::move(constraint));
    } catch (const Error& e) {
      fail_line(row.line, e.what());
    }
  }
  out.raw_rows_end = model.num_constraints();

  if (doc.objective && !out.soft_terms.empty()) {
    fail_line(doc.objective->line,
              "soft kernels/reifications already define the objective; "
              "drop the objective statement or use require");
  }
  if (doc.objective) {
    Objective objective;
    objective.sense = doc.objective->sense;
    for (const NamedTerm& term : doc.objective->terms) {
      objective.terms.push_back(
          {resolve_name(model, term.name, doc.objective->line), term.coef});
    }
    model.set_objective(std::move(objective));
  } else if (!out.soft_terms.empty()) {
    maximize_weighted(model, out.soft_terms);
  } else {
    model.set_objective(Objective{ObjectiveSense::Feasibility, {}});
  }

  require_valid(model);
  return out;
}

CompiledModel load_file(const std::string& path) {
  return compile(parse_file(path));
}

CompiledModel load_string(std::string_view text, std::string_view origin) {
  return compile(parse(text, origin));
}

namespace {

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end &&
         std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  while (end > begin &&
         std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  return std::string(text.substr(begin, end - begin));
}

}  // namespace

CheckReport check_assignment(const CompiledModel& compiled,
                             std::string_view assignment_text,
                             std::string_view origin) {
  const Model& model = compiled.model;

  // parse "name = value" lines
  std::map<std::string, std::string> given;
  {
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= assignment_text.size()) {
      std::size_t eol = assignment_text.find('\n', pos);
      std::string_view raw = assignment_text.substr(
          pos, eol == std::string_view::npos ? assignment_text.size() - pos
                                             : eol - pos);
      ++line_no;
      pos = eol == std::string_view::npos ? assignment_text.size() + 1
                                          : eol + 1;
      std::size_t hash = raw.find('#');
      if (hash != std::string_view::npos) raw = raw.substr(0, hash);
      std::string line = trim(raw);
      if (line.empty()) continue;
      std::size_t eq = line.find('=');
      if (eq == std::string::npos) {
        fail_at(origin, line_no, 1, "expected 'name = value'");
      }
      std::string name = trim(std::string_view(line).substr(0, eq));
      std::string value = trim(std::string_view(line).substr(eq + 1));
      if (!is_identifier(name) || value.empty()) {
        fail_at(origin, line_no, 1, "expected 'name = value'");
      }
      if (!given.emplace(name, value).second) {
        fail_at(origin, line_no, 1, "duplicate assignment for '" + name + "'");
      }
    }
  }

  // the user-facing variables the assignment must cover exactly
  std::set<std::string> required_int(compiled.user_vars.begin(),
                                     compiled.user_vars.end());
  for (VarId state : compiled.states) {
    required_int.insert(model.var(state).name);
  }
  std::set<std::string> csp_vars;
  if (compiled.csp) {
    csp_vars.insert(compiled.csp->variables.begin(),
                    compiled.csp->variables.end());
  }

  std::map<std::string, std::int64_t> ints;
  Mapping mapping;
  for (const auto& [name, value] : given) {
    if (required_int.contains(name)) {
      std::int64_t parsed = 0;
      if (!parse_int64(value, parsed)) {
        raise(ErrorCode::ParseError, "value for '" + name +
                                         "' must be an integer, got '" +
                                         value + "'");
      }
      ints[name] = parsed;
    } else if (csp_vars.contains(name)) {
      if (compiled.csp->domain.index_of(value) < 0) {
        raise(ErrorCode::ParseError,
              "value '" + value + "' for '" + name + "' is not in the domain");
      }
      mapping[name] = value;
    } else {
      raise(ErrorCode::ValidationError,
            "assignment names unknown variable '" + name + "'");
    }
  }
  for (const std::string& name : required_int) {
    if (!ints.contains(name)) {
      raise(ErrorCode::ValidationError,
            "assignment misses variable '" + name + "'");
    }
  }
  for (const std::string& name : csp_vars) {
    if (!mapping.contains(name)) {
      raise(ErrorCode::ValidationError,
            "assignment misses csp variable '" + name + "'");
    }
  }

  CheckReport report;
  auto violated = [&report](std::string message) {
    report.violations.push_back(std::move(message));
  };

  // bounds of the provided integers
  for (const auto& [name, value] : ints) {
    const Variable& v = model.var(*model.find_var(name));
    if (value < v.lo || value > v.hi) {
      violated("bounds " + name + ": " + std::to_string(value) +
               " outside [" + std::to_string(v.lo) + ", " +
               std::to_string(v.hi) + "]");
    }
  }

  // values available for exact row evaluation, by variable id
  std::map<std::uint32_t, std::int64_t> by_id;
  for (const auto& [name, value] : ints) {
    by_id[model.find_var(name)->index] = value;
  }

  // csp edges under homomorphism semantics
  if (compiled.csp) {
    const CspInstance& instance = *compiled.csp;
    for (std::size_t i = 0; i < instance.constraints.size(); ++i) {
      const CspConstraint& c = instance.constraints[i];
      const std::string& u = instance.variables[c.u];
      const std::string& v = instance.variables[c.v];
      int a = instance.domain.index_of(mapping.at(u));
      int b = instance.domain.index_of(mapping.at(v));
      if (!c.relation.allows(a, b)) {
        violated("neq " + u + " " + v + ": (" + mapping.at(u) + ", " +
                 mapping.at(v) + ") not allowed");
      }
    }
    // lift one-hot values so raw rows over them stay checkable
    const CspCodebook& codebook = *compiled.codebook;
    for (std::size_t v = 0; v < codebook.ids.size(); ++v) {
      int hot = instance.domain.index_of(mapping.at(codebook.variables[v]));
      for (std::size_t d = 0; d < codebook.ids[v].size(); ++d) {
        by_id[codebook.ids[v][d].index] =
            static_cast<int>(d) == hot ? 1 : 0;
      }
    }
  }

  // Require-mode kernels, re-checked arithmetically
  for (const KernelApplication& app : compiled.sequence_apps) {
    if (app.mode != KernelMode::Require) continue;
    auto [k, r] = kernel_congruence_params(app.kernel);
    const std::string name = "s_" + std::to_string(app.step);
    std::int64_t value = ints.at(name);
    std::int64_t remainder = ((value % k) + k) % k;
    if (remainder != r) {
      violated("kernel " + app.kernel + " step " + std::to_string(app.step) +
               ": " + name + " = " + std::to_string(value));
    }
  }
  for (const ResolvedReify& decl : compiled.reifications) {
    if (decl.mode != KernelMode::Require) continue;
    std::int64_t value = ints.at(decl.target);
    std::int64_t remainder =
        ((value % decl.modulus) + decl.modulus) % decl.modulus;
    if (remainder != decl.remainder) {
      violated("reify " + decl.kernel + " " + decl.target + ": " +
               decl.target + " = " + std::to_string(value));
    }
  }

  // raw rows by exact evaluation
  for (std::size_t i = compiled.raw_rows_begin; i < compiled.raw_rows_end;
       ++i) {
    const LinearConstraint& row = model.constraints()[i];
    std::int64_t sum = 0;
    for (const LinearTerm& term : row.terms) {
      auto it = by_id.find(term.var.index);
      if (it == by_id.end()) {
        raise(ErrorCode::ValidationError,
              "constraint '" + row.label + "' references internal variable '" +
                  model.var(term.var).name + "' and cannot be checked");
      }
      sum += term.coef * it->second;
    }
    bool ok = row.sense == Sense::LE   ? sum <= row.rhs
              : row.sense == Sense::GE ? sum >= row.rhs
                                       : sum == row.rhs;
    if (!ok) {
      violated(row.label + ": " + format_row(model, row) +
               " (lhs = " + std::to_string(sum) + ")");
    }
  }

  report.feasible = report.violations.empty();
  return report;
}

CheckReport check_assignment_file(const CompiledModel& compiled,
                                  const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorCode::IoError, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return check_assignment(compiled, buffer.str(), path);
}

}  // namespace bigm::modelfile
