#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "../common/reference_data.hpp"
#include "cores/bfile.hpp"
#include "cores/diagram.hpp"
#include "cores/envelope.hpp"
#include "cores/errors.hpp"

using namespace cores;

TEST_CASE("b-file round trip") {
  const CountSequence seq{"straub", 0, reference::straub};
  std::stringstream buffer;
  write_bfile(buffer, seq, {"straub sequence", "offset 0"});
  const auto back = read_bfile(buffer, "straub");
  CHECK(back == seq);

  std::stringstream shifted("# comment\n\n5 10\n6 -3\n7 123456789012345678901234567890\n");
  const auto s = read_bfile(shifted);
  CHECK(s.offset == 5);
  CHECK(s.terms[2] == parse_bigint("123456789012345678901234567890"));
  CHECK(s.at(6) == -3);
}

TEST_CASE("b-file errors") {
  std::stringstream gap("0 1\n2 3\n");
  CHECK_THROWS_AS(read_bfile(gap), DomainError);
  std::stringstream junk("0 one\n");
  CHECK_THROWS_AS(read_bfile(junk), DomainError);
  std::stringstream lonely("0\n");
  CHECK_THROWS_AS(read_bfile(lonely), DomainError);
  CHECK_THROWS_AS(read_bfile_path("/nonexistent/b000000.txt"), DomainError);
}

TEST_CASE("csv terms") {
  CHECK(parse_terms_csv("1,2, 5 ,14") == reference::big({1, 2, 5, 14}));
  CHECK_THROWS_AS(parse_terms_csv("1,,2"), DomainError);
  CHECK_THROWS_AS(parse_terms_csv("1,x"), DomainError);
  CHECK_THROWS_AS(parse_terms_csv(""), DomainError);
}

TEST_CASE("json envelopes share one schema") {
  OutputEnvelope plain = OutputEnvelope::from_sequence({"straub", 0, reference::big({1, 2, 4})}, "dp", "note");
  OutputEnvelope rich = plain;
  rich.gf = reference::fibonacci_gf();
  rich.equation = AlgebraicEquation({{-1, 1}});
  for (const auto& env : {plain, rich}) {
    const auto j = nlohmann::json::parse(render_json(env));
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    CHECK(keys == std::vector<std::string>{"equation", "gf", "method", "name", "note", "offset", "terms"});
    for (const auto& t : j["terms"]) CHECK(t.is_string());
  }
  const auto j = nlohmann::json::parse(render_json(rich));
  CHECK(j["gf"]["denominator"][0] == "-1");
  CHECK(j["equation"]["expression"] == "Y - 1 = 0");
  CHECK(nlohmann::json::parse(render_json(plain))["gf"].is_null());
}

TEST_CASE("plain and bfile renderings") {
  const auto env = OutputEnvelope::from_sequence({"sister", 0, reference::big({1, 2, 3, 7, 12})}, "closed-form");
  CHECK(render_plain(env) == "1 2 3 7 12\n");
  std::stringstream b(render_bfile(env));
  CHECK(read_bfile(b).terms == env.terms);
  CHECK(parse_output_format("json") == OutputFormat::json);
  CHECK_THROWS_AS(parse_output_format("xml"), DomainError);
}

TEST_CASE("diagram") {
  const std::vector<long> labels{1, 2};
  const auto ideal = OrderIdeal::from_labels(2, labels);
  const auto svg = render_diagram_svg(2, 0, &ideal);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find(">5</text>") != std::string::npos);
  CHECK(svg.find("2 occupied") != std::string::npos);
  CHECK(render_diagram_svg(0, 1).find("</svg>") != std::string::npos);
  CHECK_THROWS_AS(render_diagram_svg(3, 2), DomainError);
  CHECK_THROWS_AS(render_diagram_svg(3, 0, &ideal), DomainError);
}
