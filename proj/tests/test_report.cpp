#include <sstream>

#include "cforge/errors.hpp"
#include "cforge/report.hpp"
#include "doctest.h"

using namespace cforge;
using namespace cforge::report;

namespace {

std::vector<Record> sample() {
    Record a{"verify:x", "A=2;B=1", 100, Status::pass, std::nullopt, 1.5};
    Record b{"verify:y", "note=a,b", 50, Status::fail, std::string("n=3;value=\"1\""), 0.0};
    return {a, b};
}

}  // namespace

TEST_CASE("csv output quotes fields that need it") {
    std::ostringstream out;
    write_records(out, sample(), Format::csv);
    CHECK(out.str() ==
          "check_id,params,bound,status,counterexample\n"
          "verify:x,A=2;B=1,100,pass,\n"
          "verify:y,\"note=a,b\",50,fail,\"n=3;value=\"\"1\"\"\"\n");
}

TEST_CASE("line records are one JSON object each, with a null counterexample on pass") {
    std::ostringstream out;
    write_records(out, sample(), Format::lines);
    const auto text = out.str();
    CHECK(text.find(R"({"check_id":"verify:x","parameters":"A=2;B=1","bound":100,"status":"pass","counterexample":null})") == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}

TEST_CASE("text output and the timing trailer") {
    std::ostringstream out;
    write_records(out, sample(), Format::text);
    CHECK(out.str().find("[PASS] verify:x") == 0);
    CHECK(out.str().find("[FAIL] verify:y") != std::string::npos);
    std::ostringstream trailer;
    write_timing_trailer(trailer, sample(), 12.25);
    CHECK(trailer.str() == "# elapsed_ms total=12.2 verify:x=1.5\n");
}

TEST_CASE("formats parse by name") {
    CHECK(parse_format("csv") == Format::csv);
    CHECK(parse_format("lines") == Format::lines);
    CHECK(parse_format("text") == Format::text);
    CHECK_THROWS_AS(parse_format("xml"), DomainError);
}

TEST_CASE("records from progression and identity reports") {
    congruence::ProgressionReport p;
    p.sequence = "nu2";
    p.A = 36;
    p.B = 30;
    p.modulus = 4;
    p.checked_bound = 1000;
    p.terms_checked = 28;
    CHECK(from_progression("id", p).status == Status::pass);
    p.counterexample = congruence::Counterexample{66, 7};
    const auto r = from_progression("id", p);
    CHECK(r.status == Status::fail);
    CHECK(*r.counterexample == "n=66;value=7");

    congruence::IdentityCheck c{"lemma", 16, 200, congruence::Mismatch{5, 1, 2}};
    const auto ri = from_identity("dissect:lemma", c);
    CHECK(ri.bound == 200);
    CHECK(*ri.counterexample == "exponent=5;lhs=1;rhs=2");
}
