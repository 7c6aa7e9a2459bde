#pragma once

#include <string>
#include <vector>

#include "idealcore/field.hpp"

namespace idealcore {

// One batch job: flat key = value lines, lists in brackets, polynomials in
// the library grammar. Unset numeric fields stay at their defaults.
struct JobSpec {
  std::string field_token = "Q";  // Q | Qbar | Fp <p>
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  std::vector<std::string> ideal;
  std::vector<std::string> reduction;
  std::vector<long> weights;  // empty: every variable has weight 1
  std::string command;        // may also come from the command line
  std::string method;
  int n_max = 0;
  std::string sample;  // "", "exhaustive", "random:<N>"
  unsigned long seed = 1;
  std::vector<long> primes;
  std::string semantics;  // set only by an explicit --field override

  bool operator==(const JobSpec&) const = default;
};

// Parses and validates: field token well formed (prime modulus), variables
// unique, every polynomial list parseable over the declared field, relations
// and ideal entries homogeneous for the declared weights. Errors carry the
// 1-based line and column.
JobSpec parse_job(const std::string& text);

// Inverse of parse_job up to field ordering: parse_job(print_job(s)) == s
// for every valid s (modulo the command-line-only fields).
std::string print_job(const JobSpec& spec);

// One bracketed comma list on its own, as handed to --ideal / --reduction.
std::vector<std::string> parse_bracket_list(const std::string& text);

JobSpec load_job(const std::string& path);

FieldSpec field_of(const JobSpec& spec);

}  // namespace idealcore
