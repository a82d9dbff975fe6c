#include <gtest/gtest.h>

#include "k3br/brauer.hpp"
#include "k3br/literal.hpp"
#include "k3br/report.hpp"

using namespace k3br;

TEST(Report, IntegersFitOrBecomeStrings) {
  EXPECT_TRUE(to_json(Integer(42)).is_number_integer());
  EXPECT_EQ(to_json(Integer(-7)).get<long>(), -7);
  const Integer big("123456789012345678901234567890");
  EXPECT_TRUE(to_json(big).is_string());
  EXPECT_EQ(to_json(big).get<std::string>(), big.get_str());
  EXPECT_EQ(to_json(Invariants{}).dump(), "[]");
  EXPECT_EQ(to_json(Invariants{Integer(3), Integer(9)}).dump(), "[3,9]");
}

TEST(Report, FieldJson) {
  const auto j = field_json(make_field(-15));
  EXPECT_EQ(j["d"], -15);
  EXPECT_EQ(j["D"], -15);
  EXPECT_EQ(j["class_number"], 2);
  EXPECT_EQ(j["roots_of_unity"], 2);
  EXPECT_EQ(j["ramified_primes"].dump(), "[3,5]");
  EXPECT_EQ(j["omega"], "(1+sqrt(d))/2");
}

TEST(Report, EstimateJsonAndText) {
  const ImQuadField E = make_field(-1);
  const auto est = g_k3_order(E, parse_ideal(E, "(7)"));
  const auto j = estimate_json(est);
  EXPECT_EQ(j["ideal"], "7i");
  EXPECT_EQ(j["A"], 2);
  EXPECT_EQ(j["order"], 2);
  EXPECT_EQ(j["h1_exact"], true);
  EXPECT_EQ(j["J"], 7);
  const std::string t = estimate_text(E, est);
  for (const char* key : {"A: 2", "h1: 1", "J: 7", "e-factor: ", "order: 2"}) {
    EXPECT_NE(t.find(key), std::string::npos) << key << "\n" << t;
  }

  const auto two = estimate_json(g_k3_order(E, parse_ideal(E, "2r^2")));
  EXPECT_EQ(two["h1_exact"], false);
  EXPECT_FALSE(two.contains("order"));
  EXPECT_TRUE(two["possible_orders"].is_array());
}

TEST(Report, EnumerationJson) {
  const auto rep = enumerate_kept(make_field(-1), 1);
  const auto j = enumeration_json(rep);
  EXPECT_EQ(j["schema"], kJsonSchema);
  EXPECT_EQ(j["command"], "enumerate");
  EXPECT_EQ(j["certified"], true);
  EXPECT_EQ(j["kept"].size(), rep.kept.size());
  for (std::size_t i = 0; i < rep.kept.size(); ++i) EXPECT_EQ(j["kept"][i]["ideal"], format_ideal(rep.kept[i].ideal));
  const std::string t = enumeration_text(rep);
  EXPECT_NE(t.find("certified: yes"), std::string::npos);
  EXPECT_NE(t.find("kept: 13"), std::string::npos);
}

TEST(Report, CatalogJsonAndMarkdown) {
  const auto cat = brauer_superset(enumerate_kept(make_field(-3), 1));
  const auto j = catalog_json(cat);
  EXPECT_EQ(j["command"], "brauer");
  EXPECT_EQ(j["groups"].size(), cat.distinct_groups.size());
  EXPECT_EQ(j["entries"].size(), cat.entries.size());
  bool seen = false;
  for (const auto& g : j["groups"]) {
    EXPECT_EQ(parse_group_notation(g["notation"].get<std::string>()).size(), g["invariants"].size());
    seen |= g["invariants"].dump() == "[3,9]";
  }
  EXPECT_TRUE(seen);
  for (const auto& e : j["entries"]) {
    const ImQuadField E = make_field(-3);
    const auto I = parse_ideal(E, e["ideal"].get<std::string>());
    EXPECT_EQ(to_json(Integer(I.norm().get_num())), e["norm"]);
    for (const auto& w : e["witnesses"]) EXPECT_TRUE(divides(I, parse_ideal(E, w.get<std::string>())));
  }

  const std::string table = group_table_markdown({Invariants{}, Invariants{Integer(2), Integer(4)}});
  EXPECT_EQ(table, "| # | group | order |\n|---|---|---|\n| 1 | 0 | 1 |\n| 2 | Z/4 x Z/2 | 8 |\n");
  const std::string md = catalog_markdown(cat);
  EXPECT_EQ(md.rfind("### Br(E, K) for E = ", 0), 0u);
  EXPECT_NE(md.find(group_table_markdown(cat.distinct_groups)), std::string::npos);
  EXPECT_EQ(md.find("uncertified"), std::string::npos);
}

TEST(Report, HilbertJson) {
  const ImQuadField E = make_field(-7);
  const auto set = hilbert_brauer_set(E, 30);
  const auto j = hilbert_json(E, 30, set);
  EXPECT_EQ(j["norm_bound"], 30);
  EXPECT_EQ(j["entries"].size(), set.size());
  EXPECT_NE(hilbert_text(E, 30, set).find("7r"), std::string::npos);
}

TEST(Report, LatticeText) {
  const ImQuadField E = make_field(-1);
  const auto L = parse_lattice(E, "lat((1); alpha=1/2; J=3i^-1)");
  const std::string t = lattice_text(E, L);
  EXPECT_NE(t.find("gram: [[1, 0], [0, 1]]"), std::string::npos) << t;
  EXPECT_NE(t.find("det: 1"), std::string::npos);
  EXPECT_NE(t.find("integral: yes"), std::string::npos);
  EXPECT_NE(t.find("level ideal: 3i"), std::string::npos);
  EXPECT_NE(t.find("brauer group: Z/3 x Z/3"), std::string::npos);
}
