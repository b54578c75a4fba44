#include <gtest/gtest.h>

#include <braidops/error.hpp>
#include <braidops/families.hpp>
#include <braidops/io.hpp>

#include "support.hpp"

using braidops::FieldElement;
using braidops::json;
using braidops::MultiPoly;
using support::q;
using support::x;

TEST(Json, PolynomialFormat) {
    const MultiPoly f = x(2, 1) * x(2, 1) - q(1, 2) * x(2, 2);
    EXPECT_EQ(poly_to_json(f).dump(), R"([{"e":[2,0],"c":"1"},{"e":[0,1],"c":"-1/2"}])");
    EXPECT_EQ(poly_to_json(MultiPoly(3)).dump(), "[]");
}

TEST(Json, RoundTrip) {
    braidops::ParamSampler s(61);
    for (int t = 0; t < 100; ++t) {
        MultiPoly f(3);
        for (int j = 0; j < 5; ++j) {
            const FieldElement c = t % 3 ? s.rational() : s.rational() + s.rational() * FieldElement::zeta();
            f.add_term({s.uniform(0, 3), s.uniform(0, 3), s.uniform(0, 3)}, c);
        }
        EXPECT_EQ(braidops::poly_from_json(json::parse(poly_to_json(f).dump())), f);
        const braidops::SlotPoly p = s.slot_poly(3);
        EXPECT_EQ(braidops::slot_from_json(braidops::slot_to_json(p)), p);
    }
    EXPECT_EQ(braidops::poly_from_json(json::array(), 4), MultiPoly(4));
}

TEST(Json, RejectsMalformedInput) {
    EXPECT_THROW(braidops::poly_from_json(json::parse(R"({"e":[1]})")), braidops::ParseError);
    EXPECT_THROW(braidops::poly_from_json(json::parse(R"([{"e":[1,0],"c":"x"}])")), braidops::ParseError);
    EXPECT_THROW(braidops::poly_from_json(json::parse(R"([{"e":[1,0],"c":"1"},{"e":[1],"c":"1"}])")),
                 braidops::Error);
    EXPECT_THROW(braidops::poly_from_json(json::parse(R"([{"e":[1,0],"c":"1"}])"), 3), braidops::Error);
    EXPECT_THROW(braidops::poly_from_json(json::parse(R"([{"e":[-1,0],"c":"1"}])")), braidops::Error);
    EXPECT_THROW(braidops::slot_from_json(json::parse(R"([{"e":[1,0,0],"c":"1"}])")), braidops::Error);
}

TEST(Json, TableRoundTripsEveryPolynomial) {
    const auto fam = braidops::preset_demazure(4);
    const auto table = polynomial_table(fam, braidops::staircase(4));
    const json doc = json::parse(braidops::table_to_json(4, table).dump());
    EXPECT_EQ(doc["n"], 4);
    ASSERT_EQ(doc["entries"].size(), 24u);
    for (std::size_t j = 0; j < table.size(); ++j) {
        EXPECT_EQ(braidops::poly_from_json(doc["entries"][j]["poly"], 4), table[j].poly);
        EXPECT_EQ(doc["entries"][j]["perm"].get<std::vector<int>>(), table[j].perm.one_line());
    }
}

TEST(Json, InlineArgument) {
    EXPECT_EQ(braidops::load_json_argument("[1,2]"), json::parse("[1,2]"));
    EXPECT_THROW(braidops::load_json_argument("/nonexistent/file.json"), braidops::Error);
}
