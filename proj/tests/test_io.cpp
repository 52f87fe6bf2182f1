#include <gtest/gtest.h>

#include "properties.hpp"

using namespace extpoly;
using namespace extpoly::testing;
using extpoly::io::json;

namespace {

const DegreeBox kBox111{1, 1, 1};

json reparse(const json& j) { return json::parse(j.dump()); }

}  // namespace

TEST(PolynomialJson, ParsesTheDocumentedFormat) {
  const auto j = json::parse(R"({"kind":"trig","box":[1,0,2],"coeffs":[
      {"idx":[0,0,0],"re":1.5,"im":0},{"idx":[1,0,-2],"re":0.5,"im":0.25},{"idx":[-1,0,2],"re":0.5,"im":-0.25}]})");
  const auto f = io::trig_from_json(j);
  EXPECT_EQ(f.box(), (DegreeBox{1, 0, 2}));
  EXPECT_EQ(f.coeff({1, 0, -2}), cplx(0.5, 0.25));
  EXPECT_TRUE(is_real_valued(f));
}

TEST(PolynomialJson, PowerOmitsImaginaryPart) {
  const auto j = io::to_json(fixtures::power_target(1));
  EXPECT_EQ(j.at("kind"), "power");
  for (const auto& e : j.at("coeffs")) EXPECT_FALSE(e.contains("im"));
  EXPECT_THROW(io::power_from_json(json::parse(
                   R"({"kind":"power","box":[1,1,1],"coeffs":[{"idx":[0,0,0],"re":1,"im":2}]})")),
               InputError);
}

TEST(PolynomialJson, MalformedInputsAreRejected) {
  const char* bad[] = {
      R"({"box":[1,1,1],"coeffs":[]})",
      R"({"kind":"other","box":[1,1,1],"coeffs":[]})",
      R"({"kind":"trig","box":[1,1],"coeffs":[]})",
      R"({"kind":"trig","box":[1,-1,1],"coeffs":[]})",
      R"({"kind":"trig","box":[1,1,1],"coeffs":[{"idx":[2,0,0],"re":1,"im":0}]})",
      R"({"kind":"trig","box":[1,1,1],"coeffs":[{"idx":[0,0,0],"re":"x","im":0}]})",
      R"({"kind":"trig","box":[1,1,1],"coeffs":[{"idx":[0,0,0],"re":1},{"idx":[0,0,0],"re":1}]})",
      R"({"kind":"analytic","box":[1,1,1],"coeffs":[{"idx":[-1,0,0],"re":1,"im":0}]})",
      R"({"kind":"trig","box":[1,1,1],"coeffs":{}})",
  };
  for (const char* s : bad) EXPECT_THROW(io::polynomial_from_json(json::parse(s)), std::exception) << s;
}

TEST(PolynomialJson, KindMismatchIsAnError) {
  EXPECT_THROW(io::trig_from_json(io::to_json(fixtures::example1_F(1))), InputError);
  EXPECT_THROW(io::analytic_from_json(io::to_json(fixtures::f0())), InputError);
}

TEST(PhiJson, HalfListIsCompletedBySymmetry) {
  const auto phi = fixtures::example1_phi();
  EXPECT_TRUE(phi.complete());
  EXPECT_EQ(phi({-1, -1, -1}), cplx(1));
  EXPECT_EQ(phi({-1, -1, 1}), cplx(-1));
}

TEST(PhiJson, ConsistentRedundantEntriesAreAccepted) {
  const auto j = json::parse(R"({"box":[1,0,0],"values":[
      {"idx":[0,0,0],"re":1,"im":0},{"idx":[1,0,0],"re":0.2,"im":0.1},{"idx":[-1,0,0],"re":0.2,"im":-0.1}]})");
  EXPECT_EQ(io::phi_from_json(j)({-1, 0, 0}), cplx(0.2, -0.1));
  const auto k = json::parse(R"({"box":[1,0,0],"values":[
      {"idx":[0,0,0],"re":1,"im":0},{"idx":[1,0,0],"re":0.2,"im":0.1},{"idx":[-1,0,0],"re":0.2,"im":0.1}]})");
  EXPECT_THROW(io::phi_from_json(k), InputError);
  EXPECT_THROW(io::phi_from_json(json::parse(R"({"box":[0,0,0],"values":[{"idx":[0,0,0],"re":1,"im":1}]})")),
               InputError);
}

TEST(MeasureJson, ParsesAndValidates) {
  const auto mu = io::measure_from_json(json::parse(R"({"atoms":[{"point":[0,1,2],"weight":3}]})"));
  ASSERT_EQ(mu.atoms().size(), 1u);
  EXPECT_EQ(mu.atoms()[0].weight, 3.0);
  EXPECT_THROW(io::measure_from_json(json::parse(R"({"atoms":[{"point":[0,1,2],"weight":0}]})")), InputError);
  EXPECT_THROW(io::measure_from_json(json::parse(R"({"atoms":[{"point":[0,1],"weight":1}]})")), InputError);
}

TEST(RoundTrip, ReportsReparseToEqualValues) {
  const auto face = face_of_q(fixtures::example1_phi());
  const auto face2 = io::face_report_from_json(reparse(io::to_json(face)));
  EXPECT_EQ(face2.phi, face.phi);
  EXPECT_EQ(face2.nu, face.nu);
  EXPECT_EQ(face2.classification, face.classification);
  ASSERT_EQ(face2.generators.size(), face.generators.size());
  for (std::size_t j = 0; j < face.generators.size(); ++j) EXPECT_EQ(face2.generators[j], face.generators[j]);

  const auto f = fixtures::extremal_sigma();
  const auto zs = find_zeros(f);
  const auto zs2 = io::zeros_from_json(reparse(json{{"zeros", io::to_json(zs)}}));
  ASSERT_EQ(zs2.size(), zs.size());
  for (std::size_t j = 0; j < zs.size(); ++j) {
    EXPECT_EQ(zs2[j].point, zs[j].point);
    EXPECT_EQ(zs2[j].residual, zs[j].residual);
  }

  const auto cert = extremality_rank_test(f, zs);
  const auto cert2 = io::rank_certificate_from_json(reparse(io::to_json(cert)));
  EXPECT_EQ(cert2.rank, cert.rank);
  EXPECT_EQ(cert2.equations, cert.equations);
  EXPECT_EQ(cert2.unknowns, cert.unknowns);
  EXPECT_EQ(cert2.extremal, cert.extremal);
  EXPECT_EQ(cert2.null_space_angle, cert.null_space_angle);
  EXPECT_EQ(cert2.zeros.size(), cert.zeros.size());

  const auto none = extremality_rank_test(fixtures::f0(), {});
  EXPECT_TRUE(io::to_json(none).at("null_space_angle").is_null());
  EXPECT_TRUE(std::isnan(io::rank_certificate_from_json(reparse(io::to_json(none))).null_space_angle));

  for (const auto& f2 : {mod_square(fixtures::example1_F(1)), fixtures::f0() - TrigPoly::constant(kBox111, 1.0)}) {
    const auto res = q_membership(f2);
    const auto res2 = io::q_membership_from_json(reparse(io::to_json(res)));
    EXPECT_EQ(res2.status, res.status);
    EXPECT_EQ(res2.gram.has_value(), res.gram.has_value());
    if (res.gram) {
      EXPECT_EQ(*res2.gram, *res.gram);
    }
    EXPECT_EQ(res2.factors.has_value(), res.factors.has_value());
    if (res.factors) {
      ASSERT_EQ(res2.factors->size(), res.factors->size());
      for (std::size_t j = 0; j < res.factors->size(); ++j) EXPECT_EQ((*res2.factors)[j], (*res.factors)[j]);
    }
    EXPECT_EQ(res2.separator.has_value(), res.separator.has_value());
    if (res.separator) {
      EXPECT_EQ(*res2.separator, *res.separator);
    }
  }
}

TEST(RoundTrip, FixturesReencodeIdentically) {
  const auto phi = fixtures::example1_phi();
  EXPECT_EQ(io::phi_from_json(reparse(io::to_json(phi))), phi);
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(io::analytic_from_json(reparse(io::to_json(fixtures::example1_F(k)))), fixtures::example1_F(k));
    EXPECT_EQ(io::power_from_json(reparse(io::to_json(fixtures::power_target(k)))), fixtures::power_target(k));
  }
  EXPECT_EQ(io::trig_from_json(reparse(io::to_json(fixtures::f0()))), fixtures::f0());
}

TEST(CliJsonProperties, AllHold) {
  for (const auto& p : cli_properties()) {
    const auto r = run_property(p);
    EXPECT_TRUE(r.ok) << p.name << ": " << r.failure;
  }
}
