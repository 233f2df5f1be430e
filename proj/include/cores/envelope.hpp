#pragma once

// The common output record of every CLI subcommand and its three renderings.

#include <optional>
#include <string>
#include <vector>

#include "cores/algebraic.hpp"
#include "cores/ratfunc.hpp"
#include "cores/sequence.hpp"

namespace cores {

enum class OutputFormat { plain, json, bfile };

// Throws DomainError for anything but "plain", "json" or "bfile".
OutputFormat parse_output_format(const std::string& text);

struct OutputEnvelope {
  std::string name;
  int offset = 0;
  std::vector<BigInt> terms;
  std::optional<RatFunc> gf;
  std::optional<AlgebraicEquation> equation;
  std::string method;  // dp, oracle, gf, recurrence, closed-form, guess, ...
  std::string note;

  static OutputEnvelope from_sequence(const CountSequence& seq, std::string method, std::string note = {});
};

// JSON keys are identical for every envelope; absent parts are null and
// every integer is a decimal string.
std::string render_json(const OutputEnvelope& env);
std::string render_plain(const OutputEnvelope& env);
std::string render_bfile(const OutputEnvelope& env);
std::string render(const OutputEnvelope& env, OutputFormat format);

}  // namespace cores
