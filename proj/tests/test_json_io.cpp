#include <gtest/gtest.h>

#include "looijenga/errors.hpp"
#include "looijenga/json_io.hpp"
#include "rng.hpp"

using namespace looijenga;
using namespace looijenga::cli;

TEST(JsonIo, Scalars) {
  EXPECT_EQ(int_from_json(Json("123456789012345678901234567890")), Int("123456789012345678901234567890"));
  EXPECT_EQ(int_from_json(Json(-7)), -7);
  EXPECT_EQ(rat_from_json(Json("-6/4")), Rat(-3, 2));
  EXPECT_EQ(to_json(Rat(-3, 2)), Json("-3/2"));
  EXPECT_EQ(rat_string(Rat(4)), "4");
  EXPECT_EQ(double_string(0.1), "0.10000000000000001");
  EXPECT_THROW(int_from_json(Json("1/2")), ParseError);
  EXPECT_THROW(int_from_json(Json::array()), ParseError);
}

TEST(JsonIo, DataFiles) {
  const std::string dir = LOOIJENGA_DATA_DIR;
  EXPECT_EQ(form_from_json(load_json_file(dir + "/A1.json")), QuadraticForm::scalar(IntMatrix{{2}}));
  EXPECT_EQ(form_from_json(load_json_file(dir + "/A2.json")), QuadraticForm::scalar(IntMatrix{{2, -1}, {-1, 2}}));
  EXPECT_EQ(form_from_json(load_json_file(dir + "/D2.json")), QuadraticForm::scalar(IntMatrix{{2, 0}, {0, 2}}));
  EXPECT_THROW(load_json_file(dir + "/missing.json"), ParseError);
}

TEST(JsonIo, MalformedInput) {
  EXPECT_THROW(parse_json("{\"d\": 1,"), ParseError);
  EXPECT_THROW(form_from_json(parse_json(R"({"d": 1, "c": [["3"]]})")), ParseError);
  EXPECT_THROW(form_from_json(parse_json(R"({"d": 2, "c": [["2"]]})")), ParseError);
  const QuadraticForm q = QuadraticForm::scalar(IntMatrix{{2}});
  EXPECT_THROW(wreath_from_json(q, parse_json(R"({"A": [[2,0],[0,1]]})")), ParseError);
}

TEST(JsonIo, RoundTrips) {
  Rng rng(71);
  for (int k = 0; k < 200; ++k) {
    const std::size_t r = 2 + k % 2, d = 1 + k % 3, e = 1 + k % 2;
    const QuadraticForm q = random_form(rng, d, e);
    ASSERT_EQ(form_from_json(parse_json(to_json(q).dump())), q);
    const WreathElement w = random_wreath(rng, r, d, e);
    ASSERT_EQ(wreath_from_json(q, parse_json(to_json(w).dump())), w);
    const IntMatrix m = random_matrix(rng, d, r);
    ASSERT_EQ(matrix_from_json(to_json(m)), m);
  }
  const Complex z(0.1, -2.5);
  EXPECT_EQ(complex_from_json(to_json(z)), z);
  const FramedLattice lat(Complex(0, 1), 1.0);
  EXPECT_EQ(lattice_from_json(to_json(lat)).t1(), lat.t1());
}

TEST(JsonIo, PresentationRoundTrip) {
  for (std::size_t e : {1u, 2u}) {
    const QuadraticForm q(2, std::vector<IntMatrix>(e, IntMatrix{{2, -1}, {-1, 2}}));
    const GradedPresentation p = presentation(q, 2);
    const GradedPresentation back = presentation_from_json(parse_json(to_json(p).dump()));
    EXPECT_EQ(back.names, p.names);
    EXPECT_EQ(back.degrees, p.degrees);
    EXPECT_EQ(back.relations, p.relations);
  }
}
