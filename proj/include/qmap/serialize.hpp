#pragma once

#include <json.hpp>

#include "qmap/classifier.hpp"
#include "qmap/functional.hpp"
#include "qmap/mapping.hpp"
#include "qmap/measures.hpp"
#include "qmap/opseq.hpp"
#include "qmap/report.hpp"
#include "qmap/stieltjes.hpp"

namespace qmap {

using Json = nlohmann::ordered_json;

Json to_json(const CycScalar& s);
Json scalars_json(std::span<const CycScalar> v);
/// Coefficient strings, constant term first.
Json to_json(const Poly& p);
Json to_json(const MomentFunctional& u);
Json to_json(const Recurrence& r);
Json to_json(const OPSequence& ops);
Json to_json(const PearsonPair& p);
Json to_json(const ACDTriple& t);
Json to_json(const MappingData& m);
Json to_json(const ClassReport& c);
Json to_json(const Report& r);
Json to_json(const SeriesCheck& s);
Json to_json(const MomentComparison& m);

CycScalar scalar_from_json(const Json& j);
Poly poly_from_json(const Json& j);
MomentFunctional functional_from_json(const Json& j);
Recurrence recurrence_from_json(const Json& j);
ACDTriple acd_from_json(const Json& j);

}  // namespace qmap
