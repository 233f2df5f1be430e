#include "cores/envelope.hpp"

#include <sstream>

#include <json.hpp>

#include "cores/bfile.hpp"
#include "cores/errors.hpp"

namespace cores {
namespace {

nlohmann::json strings(const std::vector<BigInt>& values) {
  auto out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "plain") return OutputFormat::plain;
  if (text == "json") return OutputFormat::json;
  if (text == "bfile") return OutputFormat::bfile;
  throw DomainError("unknown output format '" + text + "' (use plain, json or bfile)");
}

OutputEnvelope OutputEnvelope::from_sequence(const CountSequence& seq, std::string method, std::string note) {
  OutputEnvelope env;
  env.name = seq.name;
  env.offset = seq.offset;
  env.terms = seq.terms;
  env.method = std::move(method);
  env.note = std::move(note);
  return env;
}

std::string render_json(const OutputEnvelope& env) {
  nlohmann::json j;
  j["name"] = env.name;
  j["offset"] = env.offset;
  j["terms"] = strings(env.terms);
  if (env.gf) {
    j["gf"] = {{"numerator", strings(env.gf->numerator().coefficients())},
               {"denominator", strings(env.gf->denominator().coefficients())},
               {"expression", env.gf->to_string()}};
  } else {
    j["gf"] = nullptr;
  }
  if (env.equation) {
    auto grid = nlohmann::json::array();
    for (const auto& row : env.equation->grid()) grid.push_back(strings(row));
    j["equation"] = {{"coefficients", grid}, {"expression", env.equation->to_string() + " = 0"}};
  } else {
    j["equation"] = nullptr;
  }
  j["method"] = env.method;
  j["note"] = env.note;
  return j.dump(2) + "\n";
}

std::string render_plain(const OutputEnvelope& env) {
  std::ostringstream out;
  for (std::size_t k = 0; k < env.terms.size(); ++k) out << (k ? " " : "") << to_string(env.terms[k]);
  if (!env.terms.empty()) out << '\n';
  if (env.gf) {
    out << "gf: " << env.gf->to_string() << '\n';
    out << "numerator: " << env.gf->numerator().to_list() << '\n';
    out << "denominator: " << env.gf->denominator().to_list() << '\n';
  }
  if (env.equation) out << "equation: " << env.equation->to_string() << " = 0\n";
  if (env.terms.empty() && !env.gf && !env.equation && !env.note.empty()) out << env.note << '\n';
  return out.str();
}

std::string render_bfile(const OutputEnvelope& env) {
  std::vector<std::string> comments{env.name + " (method: " + env.method + ")"};
  if (!env.note.empty()) comments.push_back(env.note);
  if (env.gf) comments.push_back("gf: " + env.gf->to_string());
  if (env.equation) comments.push_back("equation: " + env.equation->to_string() + " = 0");
  std::ostringstream out;
  write_bfile(out, CountSequence{env.name, env.offset, env.terms}, comments);
  return out.str();
}

std::string render(const OutputEnvelope& env, OutputFormat format) {
  switch (format) {
    case OutputFormat::plain:
      return render_plain(env);
    case OutputFormat::json:
      return render_json(env);
    case OutputFormat::bfile:
      return render_bfile(env);
  }
  throw InternalError("unhandled output format");
}

}  // namespace cores
