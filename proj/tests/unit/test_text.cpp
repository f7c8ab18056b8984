#include <gtest/gtest.h>

#include "tbn/error.hpp"
#include "tbn/text.hpp"

using namespace tbn;
using namespace tbn::text;

TEST(WordText, RoundTrip) {
  EXPECT_EQ(parse_word("1 -2 1 1", 4), BraidWord(4, {1, -2, 1, 1}));
  EXPECT_EQ(parse_word("", 4), BraidWord(4));
  EXPECT_EQ(parse_word("  3\t-1\n", 4), BraidWord(4, {3, -1}));
  EXPECT_EQ(parse_word("+2", 4), BraidWord(4, {2}));
  EXPECT_EQ(format_word(BraidWord(4, {1, -2, 1})), "1 -2 1");
  EXPECT_EQ(format_word(BraidWord(4)), "");
}

TEST(WordText, ErrorsNameTheToken) {
  auto message = [](const std::string &s) {
    try {
      parse_word(s, 4);
    } catch (const InputError &e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message("1 x2 3").find("'x2'"), std::string::npos);
  EXPECT_NE(message("1 4").find("'4'"), std::string::npos);
  EXPECT_NE(message("0").find("'0'"), std::string::npos);
  EXPECT_NE(message("1,2").find("'1,2'"), std::string::npos);
  EXPECT_NE(message("99999999999999999999").find("'99999999999999999999'"), std::string::npos);
}

TEST(ElementText, RoundTrip) {
  const GnElement g = parse_element("1;0,1,1,0,0", 5);
  EXPECT_EQ(g.bit, 1);
  EXPECT_EQ(g.vec, (std::vector<std::int64_t>{0, 1, 1, 0, 0}));
  EXPECT_EQ(format_element(g), "1;0,1,1,0,0");
  EXPECT_EQ(format_element(parse_element(" 0; -3, 2 ,0,7", 4)), "0;-3,2,0,7");
}

TEST(ElementText, Errors) {
  EXPECT_THROW(parse_element("1;0,1", 5), InputError);
  EXPECT_THROW(parse_element("2;0,0,0,0", 4), InputError);
  EXPECT_THROW(parse_element("0,0,0,0", 4), InputError);
  try {
    parse_element("0;1,a,0,0", 4);
    FAIL();
  } catch (const InputError &e) {
    EXPECT_NE(std::string(e.what()).find("'a'"), std::string::npos);
  }
}

TEST(HalfTwistText, RoundTrip) {
  const HalfTwist h = parse_half_twist("2|1 3|-", 5);
  EXPECT_EQ(h.index, 2);
  EXPECT_EQ(h.conj, BraidWord(5, {1, 3}));
  EXPECT_TRUE(h.reversed);
  EXPECT_EQ(format_half_twist(h), "2|1 3|-");
  EXPECT_EQ(format_half_twist(parse_half_twist("1||+", 4)), "1||+");
  EXPECT_THROW(parse_half_twist("1|2", 4), InputError);
  EXPECT_THROW(parse_half_twist("4||+", 4), InputError);
  EXPECT_THROW(parse_half_twist("1||*", 4), InputError);
}

TEST(Json, NormalFormRecord) {
  const NormalForm nf{Perm(4), GnElement::s1(4)};
  EXPECT_EQ(normal_form_json(nf).dump(), R"({"n":4,"perm":[1,2,3,4],"bit":0,"vec":[1,0,0,0]})");
  EXPECT_EQ(normal_form_json(nf, false).dump(), R"({"perm":[1,2,3,4],"bit":0,"vec":[1,0,0,0]})");
}

TEST(Json, ReportFieldOrder) {
  PrimeReport r;
  r.record("1a", true);
  r.seed = 5;
  EXPECT_EQ(report_json(r).dump(),
            R"({"verdict":"pass","conditions":{"1a":true},"bound":null,"seed":5,"witness":null})");
  r.record("0", false);
  r.bound = 3;
  const auto j = report_json(r);
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["witness"]["failed"], "0");
  EXPECT_EQ(j["bound"], 3);
}

TEST(Json, Relation) {
  EXPECT_EQ(relation_json(PairRelation{true, false, 0}).dump(),
            R"({"commute":true,"triple":false,"common_endpoints":0,"label":"disjoint-or-transversal"})");
}
