#include <gtest/gtest.h>

#include "hw/io.hpp"

using namespace hw;
using nlohmann::json;

TEST(Json, ElementAndLabel) {
    EXPECT_EQ(io::to_json(GroupElement{1, 2, 3}), json::parse(R"({"m":1,"n":2,"l":3})"));
    EXPECT_EQ(io::to_json(make_label(2, 2, 1, 0)),
              json::parse(R"({"s":2,"p":2,"q":1,"r":0,"t":1,"dim":2,"faithful":false})"));
}

TEST(Json, CycIntUsesReducedBasis) {
    CycInt a(8);
    a.add_term(1, 5).add_term(2, 0);
    EXPECT_EQ(io::to_json(a), json::parse(R"({"modulus":8,"coeffs":[2,-1,0,0]})"));
}

TEST(Json, MonomialMatrix) {
    const auto y = irrep_matrix(make_label(2, 2, 1, 1), {0, 0, 1});
    EXPECT_EQ(io::to_json(y), json::parse(R"({"dim":2,"root_modulus":4,
        "entries":[{"row":0,"col":1,"exp":0},{"row":1,"col":0,"exp":2}]})"));
}

TEST(Json, ComplexMatrixEntriesArePairs) {
    const json j = io::to_json(standard_fourier(2));
    EXPECT_EQ(j["dim"], 2);
    ASSERT_EQ(j["entries"].size(), 2u);
    ASSERT_EQ(j["entries"][1][1].size(), 2u);
    EXPECT_NEAR(j["entries"][1][1][0].get<double>(), -1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Json, FusionRow) {
    const auto a = make_label(1, 1, 0, 0);
    const FusionRow row{a, make_label(1, 0, 0, 1), fuse(a, make_label(1, 0, 0, 1))};
    const json j = io::to_json(row);
    EXPECT_EQ(j["left"]["p"], 1);
    EXPECT_EQ(j["right"]["r"], 1);
    ASSERT_EQ(j["terms"].size(), 1u);
    EXPECT_EQ(j["terms"][0]["mult"], 1);
    EXPECT_EQ(j["terms"][0]["label"]["dim"], 2);
}

TEST(Json, CharacterTableMirrorsFields) {
    const json j = io::to_json(character_table(1));
    EXPECT_EQ(j["s"], 1);
    EXPECT_EQ(j["irreps"].size(), 5u);
    EXPECT_EQ(j["classes"].size(), 5u);
    EXPECT_EQ(j["values"][0][3], json::parse(R"({"scale":2,"exp":0})"));
}

TEST(Json, FourierReportNamesResiduals) {
    const json j = io::to_json(verify_fourier_relations(make_label(1, 1, 0, 0)));
    EXPECT_TRUE(j["passed"].get<bool>());
    for (const char* key : {"unitarity_fd", "fourier_fourth_power", "eigen", "conjugation_relation"}) {
        EXPECT_TRUE(j["residuals"].contains(key)) << key;
    }
}

TEST(Csv, CharacterTableAtS1) {
    const std::string expected =
        "class,\"0,0,1\",\"0,1,0\",\"0,1,1\",\"0,0,0\",\"1,0,0\"\n"
        "size,2,2,2,1,1\n"
        "\"1,0,0\",0,0,0,2*w^0,2*w^1\n"
        "\"0,0,0\",1*w^0,1*w^0,1*w^0,1*w^0,1*w^0\n"
        "\"0,0,1\",1*w^1,1*w^0,1*w^1,1*w^0,1*w^0\n"
        "\"0,1,0\",1*w^0,1*w^1,1*w^1,1*w^0,1*w^0\n"
        "\"0,1,1\",1*w^1,1*w^1,1*w^0,1*w^0,1*w^0\n";
    EXPECT_EQ(io::character_table_csv(character_table(1)), expected);
}

TEST(Csv, FusionRowsAndEnumerations) {
    const auto a = make_label(1, 1, 0, 0);
    const std::string csv = io::fusion_rows_csv({{a, a, fuse(a, a)}});
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "left,right,label,mult");
    EXPECT_NE(csv.find("\"1,0,0\",\"1,0,0\",\"0,1,1\",1\n"), std::string::npos);
    EXPECT_EQ(io::irreps_csv({a}), "s,p,q,r,t,dim,faithful\n1,1,0,0,0,2,true\n");
    EXPECT_EQ(io::classes_csv({conjugacy_class_of({0, 1, 0}, GroupParams(1))}), "m,n,l,k,size\n0,1,0,0,2\n");
    EXPECT_EQ(io::csv_field("a\"b"), "\"a\"\"b\"");
    EXPECT_EQ(io::csv_field("ab"), "ab");
    EXPECT_EQ(io::csv_field("a,\"b"), "\"a,\"\"b\"");
}

TEST(Text, FusionRuleAndOrbit) {
    const auto a = make_label(2, 1, 0, 0);
    EXPECT_EQ(io::format_fusion_rule({a, make_label(2, 2, 0, 0), fuse(a, make_label(2, 2, 0, 0))}),
              "[1,0,0] x [2,0,0] = 2[3,0,0]");
    EXPECT_EQ(io::format_orbit(orbit_of(2, 2, 1)), "Orb(2,1) = {1,3}");
}
