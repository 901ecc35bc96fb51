#include "drinfeld/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

template <class Fn>
void parallelFor(std::size_t count, int jobs, Fn fn)
{
    std::size_t const workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs > 0 ? jobs : 1, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex errorMutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (true) {
                std::size_t const i = next++;
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(errorMutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    for (auto & th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

std::vector<std::uint32_t> codes(SkewPoly const & f)
{
    std::vector<std::uint32_t> c;
    for (auto x : f.coeffs())
        c.push_back(x.v);
    return c;
}

} // namespace

std::vector<KElem> characteristicRepresentatives(FieldTower const & k)
{
    std::set<std::string> seen;
    std::vector<KElem> out;
    for (KElem a : k.elements()) {
        std::string const key = minimalPolynomialOverFq(k, a).toString();
        if (seen.insert(key).second)
            out.push_back(a);
    }
    return out;
}

SkewPoly canonicalRepresentative(DrinfeldModule const & phi)
{
    FieldTower const & k = phi.tower();
    SkewPoly best = phi.phiT();
    auto bestKey = codes(best);
    for (std::uint32_t i = 0; i + 1 < k.size(); ++i) {
        SkewPoly const c = phi.phiT().conjugated(k.exp(i));
        auto key = codes(c);
        if (key < bestKey) {
            bestKey = std::move(key);
            best = c;
        }
    }
    return best;
}

std::string fnv1aHex(std::string const & text)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::optional<std::size_t> Census::classOf(DrinfeldModule const & psi) const
{
    auto it = byKey.find(codes(canonicalRepresentative(psi)));
    if (it == byKey.end())
        return std::nullopt;
    return it->second;
}

Census censusIsomorphismClasses(std::shared_ptr<FieldTower const> k, int r, KElem t, int jobs)
{
    if (r < 1)
        throw InputError("rank must be positive");
    long double const total = std::pow(static_cast<long double>(k->size()), r);
    if (total > static_cast<long double>(kCensusLimit))
        throw TooLarge("census of " + std::to_string(static_cast<unsigned long long>(total)) +
                       " candidates exceeds the limit of " + std::to_string(kCensusLimit));
    std::uint64_t const size = k->size();
    std::uint64_t count = size - 1;
    for (int i = 1; i < r; ++i)
        count *= size;

    Census C;
    C.tower = k;
    C.t = t;
    C.r = r;
    C.modules = count;

    // canonical key of every candidate, in fixed-size chunks
    std::size_t const chunk = 4096;
    std::size_t const chunks = static_cast<std::size_t>((count + chunk - 1) / chunk);
    std::vector<std::map<std::vector<std::uint32_t>, std::size_t>> partial(chunks);
    parallelFor(chunks, jobs, [&](std::size_t ci) {
        auto & out = partial[ci];
        for (std::uint64_t idx = ci * chunk; idx < std::min<std::uint64_t>(count, (ci + 1) * chunk); ++idx) {
            std::vector<KElem> g(r + 1);
            g[0] = t;
            std::uint64_t x = idx;
            for (int i = 1; i < r; ++i) {
                g[i] = KElem{static_cast<std::uint32_t>(x % size)};
                x /= size;
            }
            g[r] = KElem{static_cast<std::uint32_t>(x + 1)};
            DrinfeldModule const phi(k, SkewPoly(*k, g));
            ++out[codes(canonicalRepresentative(phi))];
        }
    });
    std::map<std::vector<std::uint32_t>, std::size_t> sizes;
    for (auto const & m : partial)
        for (auto const & [key, n] : m)
            sizes[key] += n;

    for (auto const & [key, n] : sizes) {
        IsoClassInfo info;
        std::vector<KElem> g;
        for (auto v : key)
            g.push_back(KElem{v});
        info.canonical = SkewPoly(*k, g);
        info.size = n;
        C.byKey[key] = C.classes.size();
        C.classes.push_back(std::move(info));
    }
    parallelFor(C.classes.size(), jobs, [&](std::size_t i) {
        auto & info = C.classes[i];
        info.profile = std::make_shared<FrobeniusProfile const>(DrinfeldModule(k, info.canonical));
        if (info.profile->isCommutative()) {
            info.end = EndRing::compute(info.profile);
            info.gorenstein = gorensteinReport(*info.end->order());
        }
        info.isoId = fnv1aHex(info.canonical.toString());
        info.isogenyId = fnv1aHex(info.profile->mText());
    });

    std::map<std::string, std::size_t> isogeny;
    for (std::size_t i = 0; i < C.classes.size(); ++i) {
        std::string const m = C.classes[i].profile->mText();
        auto [it, fresh] = isogeny.emplace(m, C.isogenyClasses.size());
        if (fresh)
            C.isogenyClasses.push_back({C.classes[i].isogenyId, m, {}});
        C.isogenyClasses[it->second].members.push_back(i);
    }
    std::sort(C.isogenyClasses.begin(), C.isogenyClasses.end(),
              [](auto const & a, auto const & b) { return a.mText < b.mText; });
    return C;
}

APiOccurrenceReport checkAPiOccurrence(Census const & C, IsogenyClassInfo const & cls)
{
    APiOccurrenceReport rep;
    rep.isogenyId = cls.id;
    rep.mText = cls.mText;
    std::uint64_t members = 0;
    for (auto i : cls.members)
        members += C.classes[i].size;
    if (members == 0)
        rep.violations.push_back("empty isogeny class");
    auto const & P0 = *C.classes[cls.members.front()].profile;
    rep.H = P0.H();
    rep.d = P0.d();
    rep.n = P0.n();
    rep.predicted = rep.H == 1 || rep.n == rep.d;
    for (auto i : cls.members) {
        auto const & info = C.classes[i];
        auto const & P = *info.profile;
        if (P.H() != rep.H || P.m() != P0.m())
            rep.violations.push_back("isogeny class " + cls.id + " mixes invariants");
        bool const cor = P.H() == 1 || P.d() == P.n();
        if (P.isCommutative() && P.isLocallyMaximal() != cor)
            rep.violations.push_back("local maximality verdict disagrees with (H=1 or d=n) for " +
                                     info.canonical.toString());
    }
    if (!P0.isCommutative()) {
        rep.skipped = true;
        rep.notice = "non-commutative endomorphism algebra";
        return rep;
    }
    for (auto i : cls.members)
        if (C.classes[i].end->isAPi())
            rep.occurs = true;
    if (rep.occurs != rep.predicted)
        rep.violations.push_back(std::string("A[pi] ") + (rep.occurs ? "occurs" : "does not occur") +
                                 " as an End ring but (H=1 or n=d) is " + (rep.predicted ? "true" : "false") +
                                 " for m = " + cls.mText);
    if (rep.occurs && !P0.isLocallyMaximal())
        rep.violations.push_back("A[pi] occurs but is not locally maximal at pi for m = " + cls.mText);
    return rep;
}

BijectionReport checkIdealClassBijection(Census const & C, IsogenyClassInfo const & cls, BijectionOptions const & opt)
{
    BijectionReport rep;
    rep.isogenyId = cls.id;
    rep.mText = cls.mText;
    auto const & P0 = *C.classes[cls.members.front()].profile;
    if (!P0.isCommutative()) {
        rep.skipped = true;
        rep.notice = "non-commutative endomorphism algebra";
        return rep;
    }
    if (!(P0.isOrdinary() || P0.d() == P0.n())) {
        rep.skipped = true;
        rep.notice = "neither ordinary nor over the prime field";
        return rep;
    }
    std::optional<std::size_t> base;
    for (auto i : cls.members)
        if (C.classes[i].end->isAPi()) {
            base = i;
            break;
        }
    if (!base) {
        rep.violations.push_back("no member with End = A[pi] in " + cls.mText);
        return rep;
    }
    EndRing const & E0 = *C.classes[*base].end;
    std::set<std::size_t> targets(cls.members.begin(), cls.members.end());
    rep.isoClasses = targets.size();
    for (auto i : cls.members)
        rep.hits[C.classes[i].isoId] = 0;

    std::vector<FracIdeal> reps;
    std::vector<std::size_t> repClass;
    for (int D = 0; D <= opt.maxNormDeg; ++D) {
        rep.lastDegree = D;
        for (auto const & I : enumerateIntegralIdeals(E0.order(), D, D)) {
            ++rep.idealsExamined;
            DrinfeldModule const psi = act(E0, I).module;
            auto cls2 = C.classOf(psi);
            if (!cls2 || !targets.count(*cls2)) {
                rep.violations.push_back("I*phi0 left the isogeny class for I = " + I.toString());
                continue;
            }
            std::optional<std::size_t> match;
            bool unknown = false;
            for (std::size_t j = 0; j < reps.size(); ++j) {
                auto const res = linEquiv(E0, I, reps[j], opt.linEquivBound);
                if (res.status == LinEquivStatus::Yes) {
                    match = j;
                    break;
                }
                if (res.status == LinEquivStatus::Unknown)
                    unknown = true;
            }
            if (match) {
                if (repClass[*match] != *cls2)
                    rep.violations.push_back("linearly equivalent ideals give non-isomorphic modules: " +
                                             I.toString() + " and " + reps[*match].toString());
                continue;
            }
            if (unknown)
                ++rep.unknowns;
            std::string const id = C.classes[*cls2].isoId;
            if (rep.hits[id] > 0 && !unknown)
                rep.violations.push_back("action is not free: a new ideal class " + I.toString() +
                                         " lands on iso class " + id);
            ++rep.hits[id];
            reps.push_back(I);
            repClass.push_back(*cls2);
        }
        bool const all = std::all_of(rep.hits.begin(), rep.hits.end(), [](auto const & h) { return h.second > 0; });
        if (all && rep.saturatedAt < 0)
            rep.saturatedAt = D;
        if (rep.saturatedAt >= 0 && D >= rep.saturatedAt + 1)
            break;
    }
    rep.idealClasses = reps.size();
    if (rep.saturatedAt < 0)
        rep.violations.push_back("not every isomorphism class was reached up to norm degree " +
                                 std::to_string(opt.maxNormDeg));
    if (rep.idealClasses != rep.isoClasses)
        rep.violations.push_back(std::to_string(rep.idealClasses) + " ideal classes but " +
                                 std::to_string(rep.isoClasses) + " isomorphism classes");
    return rep;
}

CorpusReport checkCorpusProperties(Census const & C, int maxNormDeg, std::uint64_t seed)
{
    CorpusReport rep;
    std::mt19937_64 rng(seed);
    for (auto const & info : C.classes) {
        if (!info.end)
            continue;
        EndRing const & E = *info.end;
        FqField const & F = E.module().fq();
        ++rep.ordersChecked;
        bool const gor = info.gorenstein && info.gorenstein->gorenstein;
        rep.gorensteinOrders += gor;
        std::map<std::size_t, std::vector<FracIdeal>> kernelByClass;
        for (auto const & I : enumerateIntegralIdeals(E.order(), maxNormDeg)) {
            ++rep.idealsChecked;
            std::string const where = " (" + info.canonical.toString() + ", I = " + I.toString() + ")";
            auto const k = isKernelIdeal(E, I);
            rep.kernelIdeals += k.kernel;
            if (gor && !k.kernel)
                rep.violations.push_back("ideal of a Gorenstein End is not a kernel ideal" + where);
            auto const cmp = endOfActedModule(E, I);
            if (!cmp.contained)
                rep.violations.push_back("O_I is not contained in End(I*phi)" + where);
            if (k.kernel) {
                if (!cmp.equal)
                    rep.violations.push_back("O_I differs from End(I*phi) on a kernel ideal" + where);
                else
                    ++rep.equalities;
            }

            // random nonzero alpha in E
            std::vector<APoly> a;
            bool nonzero = false;
            while (!nonzero) {
                a.clear();
                for (std::size_t i = 0; i < E.rank(); ++i) {
                    std::vector<FqElem> c(2);
                    for (auto & x : c)
                        x = FqElem{static_cast<std::uint32_t>(rng() % F.q())};
                    a.emplace_back(F, c);
                    nonzero = nonzero || !a.back().isZero();
                }
            }
            DrinfeldModule const psi = act(E, I).module;
            DrinfeldModule const psi2 = act(E, I.scaled(E.fromOmega(a))).module;
            if (!psi.isIsomorphic(psi2))
                rep.violations.push_back("principal rescaling changed the isomorphism class" + where);
            ++rep.rescalings;
            if (k.kernel) {
                auto cls = C.classOf(psi);
                if (!cls)
                    rep.violations.push_back("I*phi is not in the census" + where);
                else
                    kernelByClass[*cls].push_back(I);
            }
        }
        for (auto const & [cls, list] : kernelByClass)
            for (std::size_t j = 1; j < list.size(); ++j) {
                ++rep.kernelPairs;
                if (linEquiv(E, list[j], list[0]).status == LinEquivStatus::No)
                    rep.violations.push_back("kernel ideals with isomorphic I*phi are not linearly equivalent (" +
                                             info.canonical.toString() + ")");
            }
    }
    return rep;
}

} // namespace drinfeld
