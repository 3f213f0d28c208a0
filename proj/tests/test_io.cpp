#include "apolar/io.hpp"

#include <gtest/gtest.h>

using namespace apolar;

namespace {

const SurfaceRing P = SurfaceRing::p1xp1();
const SurfaceRing F = SurfaceRing::f1();

ParseError parse_error_of(const std::string& form, const std::string& scheme = {}) {
  try {
    if (scheme.empty())
      parse_form(form);
    else
      parse_scheme(scheme, ring_of(parse_form(form)));
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error";
  return ParseError("", 0, 0);
}

const char* kSmallForm = R"({"surface": "p1xp1", "side": "S", "degree": [1, 1],
  "terms": [{"exp": [1, 0, 1, 0], "num": "3", "den": "2"}]})";

}  // namespace

TEST(Io, ExactFormRoundTrip) {
  const auto f = random_form(F, Side::S, {3, 6}, 4);
  const auto back = parse_form(to_json(f).dump());
  ASSERT_TRUE(std::holds_alternative<ExactForm>(back));
  EXPECT_EQ(std::get<ExactForm>(back), f);
}

TEST(Io, FloatFormRoundTrip) {
  const auto f = to_float(random_form(P, Side::T, {2, 1}, 5)).scaled(Complex(0.1, -0.3));
  const auto back = parse_form(to_json(f).dump());
  ASSERT_TRUE(std::holds_alternative<FloatForm>(back));
  EXPECT_EQ(std::get<FloatForm>(back), f);
}

TEST(Io, SchemeRoundTrip) {
  const auto s = make_scheme(P, std::vector<CoxPoint<Rational>>{{1, 2, 3, 4}, {Rational(1, 3), 1, 0, 1}});
  const auto back = parse_scheme(to_json(s).dump());
  ASSERT_TRUE(std::holds_alternative<ExactScheme>(back));
  EXPECT_EQ(std::get<ExactScheme>(back).points, s.points);

  const auto fs = to_float(s);
  const auto fback = parse_scheme(to_json(fs).dump());
  ASSERT_TRUE(std::holds_alternative<FloatScheme>(fback));
  EXPECT_EQ(std::get<FloatScheme>(fback).points, fs.points);
}

TEST(Io, RationalEntriesAreReduced) {
  const auto f = std::get<ExactForm>(parse_form(
      R"({"surface": "f1", "side": "S", "degree": [0, 1], "terms": [{"exp": [0, 0, 1, 0], "num": "-6", "den": "4"}]})"));
  EXPECT_EQ(f.coefficient({0, 0, 1, 0}), Rational(-3, 2));
}

TEST(Io, SyntaxErrorHasPosition) {
  const auto e = parse_error_of("{\"surface\": \"p1xp1\",\n  \"side\": \"S\" \"degree\": [1, 1]}");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 15u);
}

TEST(Io, WrongDegreeTermIsLocated) {
  const std::string text = "{\"surface\": \"p1xp1\", \"side\": \"S\", \"degree\": [1, 1],\n"
                           "  \"terms\": [{\"exp\": [1, 0, 1, 0], \"num\": \"1\"},\n"
                           "            {\"exp\": [2, 0, 1, 0], \"num\": \"1\"}]}";
  const auto e = parse_error_of(text);
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 21u);
}

TEST(Io, MixedKindsRejected) {
  const std::string text = R"({"surface": "p1xp1", "side": "S", "degree": [1, 0], "terms": [
    {"exp": [1, 0, 0, 0], "num": "1"}, {"exp": [0, 1, 0, 0], "re": 1.0, "im": 0.0}]})";
  const auto e = parse_error_of(text);
  EXPECT_EQ(e.line(), 2u);
}

TEST(Io, ContentErrors) {
  parse_error_of(R"({"surface": "p3", "side": "S", "degree": [1, 0], "terms": []})");
  parse_error_of(R"({"surface": "p1xp1", "side": "X", "degree": [1, 0], "terms": []})");
  parse_error_of(R"({"surface": "p1xp1", "side": "S", "degree": [-1, 0], "terms": []})");
  parse_error_of(R"({"surface": "p1xp1", "side": "S", "degree": [1, 0], "terms": [{"exp": [1, 0, 0, 0], "num": "x"}]})");
  parse_error_of(R"({"surface": "p1xp1", "side": "S", "degree": [1, 0], "terms": [{"exp": [1, 0, 0, 0], "num": "1", "den": "0"}]})");
  parse_error_of(R"({"surface": "p1xp1", "side": "S", "degree": [1, 0]})");
}

TEST(Io, SchemeErrors) {
  const auto mismatch = parse_error_of(kSmallForm, "{\n \"surface\": \"f1\", \"points\": []}");
  EXPECT_EQ(mismatch.line(), 2u);
  EXPECT_EQ(mismatch.column(), 13u);
  // irrelevant locus
  parse_error_of(kSmallForm, R"({"surface": "p1xp1", "points": [{"cox": [0, 0, 1, 1]}]})");
  // repeated point
  parse_error_of(kSmallForm, R"({"surface": "p1xp1", "points": [{"cox": [1, 1, 1, 1]}, {"cox": [2, 2, 1, 1]}]})");
  parse_error_of(kSmallForm, R"({"surface": "p1xp1", "points": [{"cox": [1, 1, 1]}]})");
}
