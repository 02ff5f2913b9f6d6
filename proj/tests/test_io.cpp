#include "twistor/io.hpp"

#include <gtest/gtest.h>

using namespace twistor;
using namespace twistor::io;

TEST(Json, IntegersRoundTrip) {
    EXPECT_EQ(to_json(Integer(-42)), json(-42));
    Integer big("123456789012345678901234567890");
    EXPECT_EQ(to_json(big), json("123456789012345678901234567890"));
    EXPECT_EQ(integer_from_json(to_json(big)), big);
    EXPECT_EQ(integer_from_json(json(7)), 7);
    EXPECT_THROW(integer_from_json(json("x1")), Error);
    EXPECT_THROW(integer_from_json(json(1.5)), Error);
}

TEST(Json, RationalsAndGaussians) {
    EXPECT_EQ(rational_from_json(json("6/8")), Rational(3, 4));
    EXPECT_EQ(rational_from_json(to_json(Rational(-5, 7))), Rational(-5, 7));
    EXPECT_THROW(rational_from_json(json("1/0")), Error);
    GaussianScalar g(Rational(3, 5), Rational(-4, 5));
    json j = to_json(g);
    EXPECT_EQ(j.at("re_num"), "3");
    EXPECT_EQ(j.at("im_den"), "5");
    EXPECT_EQ(gaussian_from_json(j), g);
    EXPECT_EQ(gaussian_from_json(json::array({"1/2", "1/3"})), GaussianScalar(Rational(1, 2), Rational(1, 3)));
}

TEST(Json, RingRoundTrip) {
    for (const auto& base : {projective_space(), flag_threefold()}) {
        BlownUpChow bl = blow_up(base);
        RingPtr back = ring_from_json(to_json(*bl.ring()));
        EXPECT_EQ(*back, *bl.ring());
        TwistorChow z = twistor_chow_from_json(to_json(base));
        EXPECT_EQ(*z.ring(), *base.ring());
        EXPECT_EQ(z.twistor_degrees(), base.twistor_degrees());
        EXPECT_EQ(to_json(z), to_json(base));
    }
    EXPECT_EQ(*ring_from_json(to_json(*quadric::ring())), *quadric::ring());
}

TEST(Json, RingValidationOnLoad) {
    json j = to_json(*quadric::ring());
    j["mult"].push_back({{"d1", 1}, {"i1", 1}, {"d2", 1}, {"i2", 0}, {"out", {2}}});
    EXPECT_THROW(ring_from_json(j), Error);
    json missing = {{"basis", {{"1"}}}};
    EXPECT_THROW(ring_from_json(missing), Error);
}

TEST(Json, MapRoundTrip) {
    const GradedMap& s = quadric::sigma_map();
    GradedMap back = map_from_json(to_json(s), quadric::ring(), quadric::ring());
    for (int d = 0; d <= 2; ++d)
        EXPECT_EQ(back.matrix(d), s.matrix(d));
    EXPECT_TRUE(back.is_ring_hom());
}

TEST(Json, ElementsBothEncodings) {
    BlownUpChow bl = blow_up(projective_space());
    RingElement x = 3 * RingElement::basis(bl.ring(), "f*h") - RingElement::basis(bl.ring(), "[Q]");
    EXPECT_EQ(element_from_json(to_json(x), bl.ring()), x);
    json arrays = json::array({{0}, {3, -1}, {0, 0}, {0}});
    EXPECT_EQ(element_from_json(arrays, bl.ring()), x);
    EXPECT_THROW(element_from_json(json({{"nope", 1}}), bl.ring()), Error);
    EXPECT_THROW(element_from_json(json::array({{0}}), bl.ring()), Error);
}

TEST(Json, DecorationRequest) {
    json req = {{"theta", {{"re_num", "0"}, {"re_den", "1"}, {"im_num", "1"}, {"im_den", "1"}}},
                {"points", {{{"id", "a"}, {"eta", {{"re_num", "3"}, {"re_den", "5"}, {"im_num", "4"}, {"im_den", "5"}}}}}}};
    neck::PhaseDecoration d = decoration_from_request(req);
    ASSERT_EQ(d.points.size(), 1u);
    json out = to_json(d);
    EXPECT_EQ(out.at("points")[0].at("id"), "a");
    EXPECT_EQ(gaussian_from_json(out.at("points")[0].at("rho1")) * gaussian_from_json(out.at("points")[0].at("rho2")),
              GaussianScalar::i());
    req["points"][0]["eta"] = {{"re_num", "2"}, {"re_den", "1"}, {"im_num", "0"}, {"im_den", "1"}};
    EXPECT_THROW(decoration_from_request(req), Error);
}

TEST(Json, ParseErrorsCarryLocation) {
    try {
        parse_json("{\n  \"a\": 1,\n  \"b\": [1, 2,,]\n}", "demo.json");
        FAIL() << "expected a parse error";
    } catch (const Error& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("demo.json:3:"), std::string::npos) << msg;
        EXPECT_NE(msg.find("\"b\": [1, 2,,]"), std::string::npos) << msg;
    }
    EXPECT_THROW(read_json_file("/nonexistent/file.json"), Error);
}
