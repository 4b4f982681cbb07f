#include "fixtures.hpp"

#include "zmx/construct.hpp"
#include "zmx/io.hpp"

#include <gtest/gtest.h>

using namespace zmx;
using namespace zmx::test;

namespace {

std::string json_report(const Matrix& a) {
    return emit_report(classify(a), cyclic_info(a), Format::Json);
}

}  // namespace

TEST(Parse, TextExamples) {
    EXPECT_EQ(parse_matrix("3\n1 -1 -1\n-2 1 1\n2 -2 -1"), cyclic3());
    EXPECT_EQ(parse_matrix("1\n5"), matrix_from_rows({{5}}));
    EXPECT_EQ(parse_matrix("\n  2\n\n1/2  -3/4\n0 7\n\n"),
              matrix_from_rows({{Rational(1, 2), Rational(-3, 4)}, {0, 7}}));
}

TEST(Parse, RaggedInputReportsPosition) {
    try {
        parse_matrix("2\n1/2 1\n1");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_EQ(e.column(), 1);
    }
}

TEST(Parse, BadLiteralReportsPosition) {
    try {
        parse_matrix("2\n1 2\n3 x/4");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_EQ(e.column(), 3);
    }
}

TEST(Parse, RejectsMalformedInput) {
    for (const char* bad : {"", "0\n", "-1\n", "2 2\n1 2\n3 4", "1/2\n1", "2\n1 2\n3 4\n5 6",
                            "2\n1 2 3\n4 5", "1\n1/0", "{\"n\": 2}", "{\"n\": 1, \"entries\": [[1.5]]}",
                            "{\"n\": 2, \"entries\": [[\"1\", \"2\"]]}", "{\"n\": 1, \"entries\": "}) {
        EXPECT_THROW(parse_matrix(bad), ParseError) << bad;
    }
}

TEST(Parse, JsonLayout) {
    EXPECT_EQ(parse_matrix(R"({"n": 2, "entries": [["1/2", "-1"], [3, "0"]]})"),
              matrix_from_rows({{Rational(1, 2), -1}, {3, 0}}));
}

TEST(Format, RoundTripsBothLayouts) {
    Sampler s(4);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix a = random_matrix(s, 1 + trial % 6, {-50, 50, 17}, 0.2);
        ASSERT_EQ(parse_matrix(format_matrix(a, Format::Text)), a);
        ASSERT_EQ(parse_matrix(format_matrix(a, Format::Json)), a);
    }
    EXPECT_EQ(format_matrix(cyclic3(), Format::Text), "3\n1 -1 -1\n-2 1 1\n2 -2 -1\n");
}

TEST(Report, JsonFragments) {
    const std::string id = json_report(Matrix::Identity(2, 2));
    EXPECT_NE(id.find(R"("l_index":2,"is_nonsingular_m":true)"), std::string::npos) << id;

    const std::string pos = json_report(positive5());
    EXPECT_NE(pos.find(R"("inverse_is_bdsw":true,"verdict":"InverseM")"), std::string::npos) << pos;

    const std::string odd = json_report(parity_odd5());
    EXPECT_NE(odd.find(R"("inverse_is_z":false)"), std::string::npos) << odd;
}

TEST(Report, JsonCarriesExactValues) {
    const std::string r = json_report(cyclic3());
    EXPECT_NE(r.find(R"("determinant":"-1")"), std::string::npos) << r;
    EXPECT_NE(r.find(R"("d":"-1","c":"-2","d_minus_c":"1")"), std::string::npos) << r;
    EXPECT_NE(r.find(R"("inverse":[["-1","-1","0"],["0","-1","-1"],["-2","0","1"]])"), std::string::npos) << r;
    EXPECT_EQ(std::count(r.begin(), r.end(), '\n'), 1);
}

TEST(Report, SingularMatrixHasNoInverse) {
    const std::string r = json_report(Matrix::Ones(2, 2));
    EXPECT_NE(r.find(R"("inverse":null)"), std::string::npos) << r;
    EXPECT_NE(r.find(R"("is_nonsingular":false)"), std::string::npos) << r;
}

TEST(Report, IsByteStable) {
    EXPECT_EQ(json_report(negative5()), json_report(negative5()));
    const std::string text = emit_report(classify(negative4()), cyclic_info(negative4()), Format::Text);
    EXPECT_EQ(text, emit_report(classify(negative4()), cyclic_info(negative4()), Format::Text));
    EXPECT_NE(text.find("verdict:          InverseN"), std::string::npos) << text;
}
