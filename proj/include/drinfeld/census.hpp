#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/action.hpp"

namespace drinfeld {

/// Candidates above this count are refused.
inline constexpr std::uint64_t kCensusLimit = 10'000'000;

/// One root of every monic irreducible P in F_q[T] with deg P | n, smallest
/// code first.  These are the possible values of t up to conjugation.
std::vector<KElem> characteristicRepresentatives(FieldTower const & k);

/// Lexicographically least member of { c phi_T c^-1 : c in k^x }.
SkewPoly canonicalRepresentative(DrinfeldModule const & phi);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1aHex(std::string const & text);

struct IsoClassInfo {
    SkewPoly canonical;
    std::size_t size = 0;
    std::shared_ptr<FrobeniusProfile const> profile;
    std::shared_ptr<EndRing const> end; // null when End is non-commutative
    std::optional<GorensteinReport> gorenstein;
    std::string isoId;
    std::string isogenyId;
};

struct IsogenyClassInfo {
    std::string id;
    std::string mText;
    std::vector<std::size_t> members; // indices into Census::classes
};

struct Census {
    std::shared_ptr<FieldTower const> tower;
    KElem t;
    int r = 0;
    std::uint64_t modules = 0;
    std::vector<IsoClassInfo> classes;          // sorted by canonical key
    std::vector<IsogenyClassInfo> isogenyClasses; // sorted by m text
    std::map<std::vector<std::uint32_t>, std::size_t> byKey;

    std::optional<std::size_t> classOf(DrinfeldModule const & psi) const;
};

/// Every phi_T = t + g_1 tau + ... + g_r tau^r with g_r != 0, partitioned
/// into isomorphism classes and grouped into isogeny classes by m(x).
Census censusIsomorphismClasses(std::shared_ptr<FieldTower const> k, int r, KElem t, int jobs = 1);

struct APiOccurrenceReport {
    std::string isogenyId, mText;
    bool skipped = false;
    std::string notice;
    int H = 0, d = 0, n = 0;
    bool predicted = false; // H = 1 or n = d
    bool occurs = false;    // some member has End = A[pi]
    std::vector<std::string> violations;
};
APiOccurrenceReport checkAPiOccurrence(Census const & C, IsogenyClassInfo const & cls);

struct BijectionOptions {
    int maxNormDeg = 6;
    int linEquivBound = 64;
};

struct BijectionReport {
    std::string isogenyId, mText;
    bool skipped = false;
    std::string notice;
    std::size_t idealsExamined = 0;
    std::size_t idealClasses = 0;
    std::size_t isoClasses = 0;
    int saturatedAt = -1; // smallest norm degree at which every class was hit
    int lastDegree = -1;
    std::size_t unknowns = 0;
    std::map<std::string, std::size_t> hits; // iso id -> number of ideal classes
    std::vector<std::string> violations;
};
BijectionReport checkIdealClassBijection(Census const & C, IsogenyClassInfo const & cls, BijectionOptions const & opt);

struct CorpusReport {
    std::size_t ordersChecked = 0;
    std::size_t gorensteinOrders = 0;
    std::size_t idealsChecked = 0;
    std::size_t kernelIdeals = 0;
    std::size_t equalities = 0;
    std::size_t rescalings = 0;
    std::size_t kernelPairs = 0;
    std::vector<std::string> violations;
};
/// Kernel, O_I and rescaling properties for every enumerated ideal of
/// every commutative End in the census.
CorpusReport checkCorpusProperties(Census const & C, int maxNormDeg, std::uint64_t seed);

} // namespace drinfeld
