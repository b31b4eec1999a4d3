#include <sstream>

#include "lamkit/io.hpp"
#include "test_support.hpp"

namespace lamkit {
namespace {

TEST(SurfaceJson, RoundTrip) {
    for (int g = 2; g <= 4; ++g) {
        const auto s = build_double_polygon(g);
        const Json doc = to_json(s);
        const auto back = surface_from_json(Json::parse(doc.dump()));
        EXPECT_EQ(back.genus(), g);
        ASSERT_EQ(back.polygons().size(), s.polygons().size());
        for (std::size_t p = 0; p < s.polygons().size(); ++p) {
            ASSERT_EQ(back.polygons()[p].size(), s.polygons()[p].size());
            for (std::size_t v = 0; v < s.polygons()[p].size(); ++v) {
                EXPECT_LE(to_double(abs(back.polygons()[p][v].x - s.polygons()[p][v].x)), 1e-30);
                EXPECT_LE(to_double(abs(back.polygons()[p][v].y - s.polygons()[p][v].y)), 1e-30);
            }
        }
        EXPECT_EQ(to_json(back).dump(), doc.dump());
        EXPECT_LE(lamkit::testing::rel_diff(area(back), area(s)), 1e-30);
    }
}

TEST(SurfaceJson, MalformedDocuments) {
    EXPECT_THROW(surface_from_json(Json::parse(R"({"polygons": []})")), ParseError);
    EXPECT_THROW(surface_from_json(Json::parse(R"({"genus": 2, "polygons": [[[0]]], "gluings": []})")), ParseError);
    EXPECT_THROW(surface_from_json(Json::parse(R"({"genus": 2, "polygons": [[["a", 0]]], "gluings": []})")),
                 ParseError);
}

TEST(SurfaceJson, BadGluingIsAValidationError) {
    Json doc = to_json(build_double_polygon(2));
    doc["gluings"][0][3] = 99;
    EXPECT_THROW(surface_from_json(doc), ValidationError);
}

TEST(WeightsJson, RoundTrip) {
    const TrackWeights w = make_weights({{Rational(2), Rational(3)}, {Rational(1, 2), Rational(0)}}, {Rational(5, 7)});
    const TrackWeights back = weights_from_json(Json::parse(to_json(w).dump()));
    EXPECT_EQ(back.components, w.components);
    EXPECT_EQ(back.rest, w.rest);
}

TEST(WeightsJson, MissingZIsFilledInAndWrongZRejected) {
    const auto w = weights_from_json(Json::parse(R"({"components": [{"x": "1/2", "y": 2}]})"));
    EXPECT_EQ(w.components[0].z, Rational(5, 2));
    EXPECT_THROW(weights_from_json(Json::parse(R"({"components": [{"x": 1, "y": 2, "z": 4}]})")), InvalidWeights);
    EXPECT_THROW(weights_from_json(Json::parse(R"({"components": [{"x": "1/0", "y": 2}]})")), ParseError);
    EXPECT_THROW(weights_from_json(Json::parse(R"({"components": [{"x": 1.5, "y": 2}]})")), ParseError);
    EXPECT_THROW(weights_from_json(Json::parse(R"({"components": [{"y": 2}]})")), ParseError);
}

TEST(WeightsJson, SampleFileParses) {
    const auto w = weights_from_json(read_json_file(std::string(LAMKIT_SAMPLES_DIR) + "/weights_example.json"));
    ASSERT_EQ(w.components.size(), 2u);
    EXPECT_EQ(w.components[0].z, Rational(5));
    EXPECT_EQ(w.rest, std::vector<Rational>{Rational(1, 2)});
}

TEST(ReadJsonFile, Errors) {
    EXPECT_THROW(read_json_file("/nonexistent/file.json"), InvalidParameter);
}

TEST(VectorJson, ScalarsBecomeStrings) {
    EXPECT_EQ(to_json(std::vector<Rational>{Rational(1, 3)}).dump(), R"(["1/3"])");
    EXPECT_EQ(to_json(std::vector<int>{1, 2}).dump(), "[1,2]");
}

TEST(CsvWriter, Quoting) {
    std::ostringstream out;
    CsvWriter csv(out);
    csv.row({"a", "b,c", "say \"hi\""});
    csv.row({"1"});
    EXPECT_EQ(out.str(), "a,\"b,c\",\"say \"\"hi\"\"\"\n1\n");
}

}  // namespace
}  // namespace lamkit
