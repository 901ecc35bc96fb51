#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "drinfeld/census.hpp"

namespace drinfeld {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Parses a file; malformed input raises InputError.
Json readJsonFile(std::string const & path);
Json parseJson(std::string const & text);

/// {"p":2,"e":1,"h":[0,1],"n":4,"g":[1,1,0,0,1]}.  Entries of g are F_q
/// codes or lists of F_p coordinates; g defaults to the first irreducible
/// of degree n and h to the first of degree e.
TowerSpec towerSpecFromJson(Json const & j);
Json towerSpecToJson(TowerSpec const & spec);

/// An element of k: an integer code, or a list of F_q codes in the power
/// basis of the tower generator.
KElem kelemFromJson(FieldTower const & k, Json const & j);
Json kelemToJson(FieldTower const & k, KElem a);

/// {"field":{...},"phi_T":[c_0, c_1, ...]}.
DrinfeldModule moduleFromJson(Json const & j);
Json moduleToJson(DrinfeldModule const & phi);

/// "T^2+1" or a list of F_q codes, little-endian.
APoly apolyFromJson(FqField const & F, Json const & j);
Json apolyToJson(APoly const & a);

/// {"generators":[[a_1,...,a_s], ...]}, coordinates relative to the
/// End basis in the order emitted by endRingToJson.
FracIdeal idealFromJson(EndRing const & E, Json const & j);

Json profileToJson(FrobeniusProfile const & P);
Json endRingToJson(EndRing const & E);
Json gorensteinToJson(GorensteinReport const & g);
Json kernelToJson(EndRing const & E, KernelReport const & k);
Json actionToJson(EndRing const & E, FracIdeal const & I);

Json censusHeaderJson(Census const & C, std::uint64_t seed);
Json censusRecordJson(Census const & C, IsoClassInfo const & info);
Json aPiOccurrenceToJson(APiOccurrenceReport const & r);
Json bijectionToJson(BijectionReport const & r);
Json corpusToJson(CorpusReport const & r);

/// {"field":{...},"r":2} with "t" (an element) or "char_prime" (a root is
/// taken); t defaults to 0.
Census censusFromJson(Json const & j, int jobs);

/// Occurrence, bijection and corpus reports as one "validation" record;
/// "violations" holds the total.
Json censusValidationJson(Census const & C, BijectionOptions const & opt, int corpusNormDeg, std::uint64_t seed);

} // namespace drinfeld
