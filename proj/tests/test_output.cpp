#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deutsch/error.hpp>
#include <deutsch/output.hpp>

#include "json.hpp"

using deutsch::BigInt;
using deutsch::UsageError;
using namespace deutsch::output;

namespace {

OutputDoc sample() {
    OutputDoc doc;
    doc.add("command", std::string("triangle"));
    doc.add("note", std::string("a \"quoted\", comma"));
    BigInt huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 3, 200);
    doc.add("row", IntRow{0, -7, huge});
    doc.add("rows", IntTable{{1}, {0, 1}, {1, 0, 1}});
    doc.add("empty_row", IntRow{});
    doc.add("empty_table", IntTable{});
    return doc;
}

} // namespace

TEST_CASE("format names") {
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("text") == Format::Text);
    CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("text rendering") {
    OutputDoc doc;
    doc.add("label", std::string("x"));
    doc.add("values", IntRow{1, 2, 3});
    doc.add("rows", IntTable{{1}, {0, 1}});
    CHECK(render(doc, Format::Text) == "label: x\nvalues: 1 2 3\nrows:\n0: 1\n1: 0 1\n");
}

TEST_CASE("csv rendering") {
    OutputDoc doc;
    doc.add("label", std::string("x"));
    doc.add("values", IntRow{1, 2});
    doc.add("rows", IntTable{{1}, {0, 1}});
    doc.add("none", IntTable{});
    CHECK(render(doc, Format::Csv) == "label,\"x\"\nvalues,1,2\nrows[0],1\nrows[1],0,1\nnone[]\n");
}

TEST_CASE("json keeps big integers exact") {
    const std::string text = render(sample(), Format::Json);
    CHECK(text.back() == '\n');
    CHECK(text.find("265613988875874769338781322035779626829233452653394495974574961739092490901302182994384699044001") !=
          std::string::npos);
    const auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["command"] == "triangle");
    CHECK(parsed["rows"][2][2] == 1);
    CHECK(parsed["row"][1] == -7);
}

TEST_CASE("json output for the area example") {
    OutputDoc doc;
    doc.add("n", IntRow{0, 1, 2});
    doc.add("area", IntRow{0, 1, 12});
    CHECK(render(doc, Format::Json) == "{\"n\":[0,1,2],\"area\":[0,1,12]}\n");
}

TEST_CASE("round trips are byte identical") {
    const OutputDoc doc = sample();
    const std::string json = render(doc, Format::Json);
    const OutputDoc from_json = parse_json(json);
    CHECK(render(from_json, Format::Json) == json);
    const std::string csv = render(doc, Format::Csv);
    const OutputDoc from_csv = parse_csv(csv);
    CHECK(render(from_csv, Format::Csv) == csv);
    CHECK(from_csv.find("row") != nullptr);
    CHECK(std::get<IntRow>(from_csv.find("row")->value) == std::get<IntRow>(doc.find("row")->value));
    CHECK(doc.find("missing") == nullptr);
}

TEST_CASE("json round trip preserves structure") {
    const OutputDoc doc = sample();
    const OutputDoc back = parse_json(render(doc, Format::Json));
    REQUIRE(back.fields().size() == doc.fields().size());
    for (std::size_t i = 0; i < doc.fields().size(); ++i) {
        CHECK(back.fields()[i].key == doc.fields()[i].key);
    }
    CHECK(std::get<std::string>(back.find("note")->value) == "a \"quoted\", comma");
    CHECK(std::get<IntTable>(back.find("rows")->value) == IntTable{{1}, {0, 1}, {1, 0, 1}});
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_json("{\"a\":[1,2"), UsageError);
    CHECK_THROWS_AS(parse_json("{\"a\":true}"), UsageError);
    CHECK_THROWS_AS(parse_json("{\"a\":[1.5]}"), UsageError);
    CHECK_THROWS_AS(parse_json("{\"a\":{\"b\":1}}"), UsageError);
    CHECK_THROWS_AS(parse_csv("row,1,x\n"), UsageError);
    CHECK_THROWS_AS(parse_csv("label,\"open\n"), UsageError);
    CHECK_THROWS_AS(parse_csv("t[1],1\n"), UsageError);
}
