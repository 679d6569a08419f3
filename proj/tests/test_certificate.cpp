#include <gtest/gtest.h>

#include <regex>
#include <vector>

#include "tautbraid/tautbraid.hpp"

using namespace tautbraid;

namespace {

Analysis pretzel() { return analyze_3braid(parse_braid("w=3: s1^7 s2^2 s1^2 s2")); }

// Start and end tags must nest; self-closing tags and the XML declaration are skipped.
bool tags_balanced(const std::string& svg) {
  std::vector<std::string> stack;
  static const std::regex tag(R"(<(/?)([A-Za-z]+)[^>]*?(/?)>)");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tag); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[3].length()) continue;
    if (m[1].length() == 0) {
      stack.push_back(m[2]);
    } else {
      if (stack.empty() || stack.back() != m[2]) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

}  // namespace

TEST(Certificate, PretzelFields) {
  Json j = certificate_json(pretzel());
  EXPECT_EQ(j["tool"], "tautbraid");
  EXPECT_EQ(j["version"], kToolVersion);
  EXPECT_EQ(j["normalized"], "[(7,2),(2,1)]");
  EXPECT_EQ(j["class"], "TypeC");
  EXPECT_EQ(j["genus"]["genus"], 5);
  EXPECT_EQ(j["cusped_count"], 10);
  EXPECT_EQ(j["census"]["pre"]["type1"], 8);
  EXPECT_EQ(j["census"]["pre"]["type2"], 1);
  EXPECT_EQ(j["census"]["post"]["points"], Json::parse(R"([["alpha_7^+","alpha_9^-"]])"));
  EXPECT_EQ(j["sectors"]["polygon"], 2);
  EXPECT_EQ(j["sink"]["verdict"], "sink_disk_free");
  EXPECT_EQ(j["linked_pairs"], Json::parse("[[8,9]]"));
  EXPECT_EQ(j["k"], 9);
  EXPECT_EQ(j["slope_interval"], "(-inf, 9)");
  EXPECT_EQ(j["switch_system"]["positive_solution"], false);
  EXPECT_EQ(j["verdict"], "pass");
}

TEST(Certificate, FieldOrderIsFixed) {
  Json j = certificate_json(pretzel());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  ASSERT_GE(keys.size(), 4u);
  EXPECT_EQ(keys[0], "tool");
  EXPECT_EQ(keys[1], "version");
  EXPECT_EQ(keys[2], "input");
  EXPECT_EQ(keys.back(), "verdict");
}

TEST(Certificate, RoundTripAndByteStability) {
  const std::string a = certificate_json(pretzel()).dump(2);
  const std::string b = certificate_json(pretzel()).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(Json::parse(a).dump(2), a);
}

TEST(Certificate, UnknotIsDegenerate) {
  Analysis a = analyze_3braid(parse_braid("w=3: s1 s2"));
  EXPECT_TRUE(a.degenerate);
  Json j = certificate_json(a);
  EXPECT_EQ(j["verdict"], "degenerate");
  EXPECT_FALSE(j.contains("sectors"));
}

TEST(Certificate, OneBridgeFields) {
  Json j = certificate_json(analyze_1bridge({7, 4, 2}));
  EXPECT_EQ(j["family"], "one_bridge");
  EXPECT_EQ(j["parameters"]["w"], 7);
  EXPECT_EQ(j["gamma"], 5);
  EXPECT_EQ(j["linked_pairs"], Json::array());
  EXPECT_EQ(j["verdict"], "pass");
}

TEST(Certificate, TextMentionsTheVerdict) {
  std::string t = certificate_text(pretzel());
  EXPECT_NE(t.find("verdict:      pass"), std::string::npos);
  EXPECT_NE(t.find("linked pairs: (8,9)"), std::string::npos);
}

TEST(Certificate, SearchJson) {
  Json j = search_json(exhaustive_cusp_search(parse_braid("w=3: s1^3 s2^3")));
  EXPECT_EQ(j["search"]["best_k"], 3);
  EXPECT_EQ(j["search"]["schema_among_best"], true);
}

TEST(Svg, WellFormedAndClassed) {
  for (const Analysis& a : {pretzel(), analyze_1bridge({7, 4, 2})}) {
    std::string s = render_svg(a);
    EXPECT_EQ(s.rfind("<?xml", 0), 0u);
    EXPECT_TRUE(tags_balanced(s));
    for (const char* cls : {"class=\"disk\"", "class=\"band\"", "class=\"minus\"", "class=\"plus\"", "class=\"cusp\"", "class=\"maximal\""})
      EXPECT_NE(s.find(cls), std::string::npos) << cls;
    EXPECT_EQ(render_svg(a), s);
  }
  EXPECT_THROW(render_svg(analyze_3braid(parse_braid("w=3: s1 s2"))), Error);
}
