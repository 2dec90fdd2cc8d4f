#pragma once

#include <nlohmann/json.hpp>

#include "nilorb/admissible.hpp"
#include "nilorb/kraft_procesi.hpp"
#include "nilorb/orbit.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/rational.hpp"
#include "nilorb/w2.hpp"

// JSON encodings. Partitions are integer arrays, signs are 1 / -1, rationals
// are "p/q" strings. Every to_json has a matching from_json.

namespace nilorb {

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

void to_json(nlohmann::json& j, Eps e);
void from_json(const nlohmann::json& j, Eps& e);

void to_json(nlohmann::json& j, const ClassicalAlgebra& g);
void from_json(const nlohmann::json& j, ClassicalAlgebra& g);

void to_json(nlohmann::json& j, const Orbit& o);
void from_json(const nlohmann::json& j, Orbit& o);

void to_json(nlohmann::json& j, const WeightedDynkinDiagram& d);
void from_json(const nlohmann::json& j, WeightedDynkinDiagram& d);

void to_json(nlohmann::json& j, const ErasureStep& s);
void from_json(const nlohmann::json& j, ErasureStep& s);

void to_json(nlohmann::json& j, const Reduction& r);
void from_json(const nlohmann::json& j, Reduction& r);

void to_json(nlohmann::json& j, const SingularityClass& c);
void from_json(const nlohmann::json& j, SingularityClass& c);

void to_json(nlohmann::json& j, const NormalityVerdict& v);
void from_json(const nlohmann::json& j, NormalityVerdict& v);

void to_json(nlohmann::json& j, const SliceReport& r);
void from_json(const nlohmann::json& j, SliceReport& r);

void to_json(nlohmann::json& j, const TableRow& r);
void from_json(const nlohmann::json& j, TableRow& r);

void to_json(nlohmann::json& j, const FamilySpec& f);
void from_json(const nlohmann::json& j, FamilySpec& f);

void to_json(nlohmann::json& j, const VerificationReport& r);

void to_json(nlohmann::json& j, const QuadPoly& p);
void from_json(const nlohmann::json& j, QuadPoly& p);

void to_json(nlohmann::json& j, const CartanPoint& p);
void from_json(const nlohmann::json& j, CartanPoint& p);

}  // namespace nilorb

namespace nlohmann {
template <>
struct adl_serializer<nilorb::Rational> {
  static void to_json(json& j, const nilorb::Rational& x) { j = nilorb::to_string(x); }
  static void from_json(const json& j, nilorb::Rational& x);
};
}  // namespace nlohmann

namespace nilorb {

/// Singularity of the closure of O_lam along O_eta:
/// {lambda, eta, eps, reduction: {lambda_p, eta_p, eps_p}, kp_type,
///  singularity, codim, components}. kp_type is null off the table.
[[nodiscard]] nlohmann::json sing_report(const Partition& lam, const Partition& eta, Eps eps);

}  // namespace nilorb
