#include <gtest/gtest.h>

#include "nilorb/error.hpp"
#include "nilorb/json_io.hpp"

using namespace nilorb;
using nlohmann::json;

namespace {

template <class T>
T round_trip(const T& v) {
  const json j = v;
  return json::parse(j.dump()).get<T>();
}

}  // namespace

TEST(Json, Basics) {
  EXPECT_EQ(json(Partition{3, 1, 1}), json::parse("[3,1,1]"));
  EXPECT_EQ(round_trip(Partition{7, 7, 4}), (Partition{7, 7, 4}));
  EXPECT_EQ(json(Eps::Symplectic), -1);
  EXPECT_EQ(round_trip(Eps::Orthogonal), Eps::Orthogonal);
  EXPECT_THROW((void)json(2).get<Eps>(), DomainError);
  EXPECT_EQ(json(Rational(-22, 5)), "-22/5");
  EXPECT_EQ(round_trip(Rational(7, 3)), Rational(7, 3));
  EXPECT_EQ(round_trip(ClassicalAlgebra::make(Series::O, 9)), ClassicalAlgebra::make(Series::O, 9));
}

TEST(Json, Orbit) {
  const auto g = ClassicalAlgebra::make(Series::O, 8);
  const Orbit o = orbit_from_partition(g, Partition{4, 4}, SoLabel::II);
  const json j = o;
  EXPECT_EQ(j.at("series"), "so");
  EXPECT_EQ(j.at("very_even"), true);
  EXPECT_EQ(j.at("so_label"), "II");
  EXPECT_EQ(round_trip(o), o);
  const Orbit plain = orbit_from_partition(ClassicalAlgebra::make(Series::SP, 6), Partition{2, 2, 1, 1});
  EXPECT_EQ(round_trip(plain), plain);
  const auto d = weighted_dynkin(o);
  EXPECT_EQ(round_trip(d), d);
}

TEST(Json, KraftProcesi) {
  const Reduction r = reduce(Partition{5, 5, 1}, Partition{5, 3, 3}, Eps::Orthogonal);
  const Reduction back = round_trip(r);
  EXPECT_EQ(back.lambda_p, r.lambda_p);
  EXPECT_EQ(back.eta_p, r.eta_p);
  EXPECT_EQ(back.eps_p, r.eps_p);
  EXPECT_EQ(back.steps, r.steps);

  const auto c = degeneration_singularity(Partition{5, 5, 4}, Partition{5, 5, 2, 2}, Eps::Symplectic);
  const json jc = c;
  EXPECT_EQ(jc.at("label"), "D3");
  EXPECT_EQ(jc.at("kp_type"), "b");
  const auto c2 = round_trip(c);
  EXPECT_EQ(c2.label(), c.label());
  EXPECT_EQ(c2.kp_type, c.kp_type);

  const auto u = degeneration_singularity(Partition{3, 2, 2}, Partition{1, 1, 1, 1, 1, 1, 1}, Eps::Orthogonal);
  const auto u2 = round_trip(u);
  EXPECT_EQ(u2.kind, SingularityClass::Kind::UnknownNonMinimal);
  ASSERT_TRUE(u2.reduced.has_value());
  EXPECT_EQ(u2.reduced->lambda_p, u.reduced->lambda_p);

  const auto v = is_normal_closure(ClassicalAlgebra::make(Series::O, 7), Partition{3, 2, 2});
  const auto v2 = round_trip(v);
  EXPECT_EQ(v2.status, v.status);
  EXPECT_EQ(v2.witnesses, v.witnesses);
  EXPECT_EQ(v2.hesselink_applies, v.hesselink_applies);
  EXPECT_EQ(json(v).at("status"), "NonNormal");

  const auto s = slice_report(ClassicalAlgebra::make(Series::SP, 14), Partition{7, 7}, Partition{6, 6, 2});
  const auto s2 = round_trip(s);
  EXPECT_EQ(s2.dimension, 2);
  EXPECT_EQ(s2.components, 1);
  ASSERT_TRUE(s2.singularity.has_value());
  EXPECT_EQ(s2.singularity->label(), "A5");
}

TEST(Json, SingReport) {
  const json j = sing_report(Partition{7, 7, 4}, Partition{7, 7, 2, 2}, Eps::Symplectic);
  EXPECT_EQ(j.at("kp_type"), "b");
  EXPECT_EQ(j.at("singularity"), "D3");
  EXPECT_EQ(j.at("codim"), 2);
  EXPECT_EQ(j.at("reduction").at("lambda_p"), json::parse("[4]"));
}

TEST(Json, Admissible) {
  const TableRow row{{5, 5, 1}, {5, 3, 3}, Eps::Symplectic, {4}, {2, 2}, KpType::b};
  EXPECT_EQ(round_trip(row), row);
  const FamilySpec f{AdmSeries::SO_EVEN, Family::III, 7, 3, 10};
  const FamilySpec f2 = round_trip(f);
  EXPECT_EQ(f2.series, f.series);
  EXPECT_EQ(f2.family, f.family);
  EXPECT_EQ(f2.q, f.q);
  EXPECT_EQ(f2.s, f.s);
  EXPECT_EQ(f2.rank, f.rank);
  const json rep = verify_paper_tables(3, 6);
  EXPECT_TRUE(rep.contains("instances"));
  EXPECT_TRUE(rep.contains("mismatches"));
}

TEST(Json, W2) {
  for (const auto& p : w2_generators(5)) EXPECT_EQ(round_trip(p), p);
  const CartanPoint pt{CartanPoint::Basis::Omega, {Rational(1, 2), 0, Rational(-3)}};
  const auto back = round_trip(pt);
  EXPECT_EQ(back.basis, pt.basis);
  EXPECT_EQ(back.coords, pt.coords);
  EXPECT_EQ(json(w2_generators(3)[0]).at("text"), "h1*h3");
}
