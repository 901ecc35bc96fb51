// One PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <cstdio>
#include <string>
#include <thread>

#include "drinfeld/census.hpp"
#include "drinfeld/golden.hpp"
#include "properties.hpp"

using namespace drinfeld;

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point since)
{
    return std::chrono::duration<double>(Clock::now() - since).count();
}

int failures = 0;

void report(int id, bool ok, std::string const & what)
{
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

struct CensusSpec {
    std::uint32_t p, n;
    int r;
};

std::vector<Census> censuses(std::vector<CensusSpec> const & specs, int jobs)
{
    std::vector<Census> out;
    for (auto const & s : specs) {
        auto k = FieldTower::primeTower(s.p, s.n);
        for (KElem t : characteristicRepresentatives(*k))
            out.push_back(censusIsomorphismClasses(k, s.r, t, jobs));
    }
    return out;
}

std::string label(Census const & C)
{
    return "q=" + std::to_string(C.tower->q()) + " n=" + std::to_string(C.tower->n()) + " r=" +
           std::to_string(C.r) + " t=" + C.tower->toString(C.t, "x");
}

void goldenCriteria()
{
    auto const start = Clock::now();
    auto const results = runGoldenExamples();
    double const elapsed = seconds(start);

    int passed1 = 0, failed1 = 0, passed2 = 0, failed2 = 0;
    bool valuation = false, invariant = false;
    std::string firstFail;
    for (auto const & r : results) {
        bool const rankThree = r.name.rfind("F_16 rank 3", 0) == 0;
        if (r.status == GoldenStatus::Fail && firstFail.empty())
            firstFail = r.name;
        if (r.status == GoldenStatus::Discrepancy) {
            valuation |= r.name.find("phi_p is") != std::string::npos;
            invariant |= r.name.find("s*n = NK*r") != std::string::npos;
            continue;
        }
        bool const ok = r.status == GoldenStatus::Pass;
        (rankThree ? (ok ? passed1 : failed1) : (ok ? passed2 : failed2))++;
    }
    std::string const t = " in " + std::to_string(elapsed) + " s";
    report(1, failed1 == 0 && passed1 >= 12 && elapsed < 10,
           "rank 3 example over F_16: " + std::to_string(passed1) + " checks passed" + t +
               (failed1 ? ", first failure: " + firstFail : ""));
    report(2, failed2 == 0 && passed2 >= 6 && elapsed < 30,
           "golden invariants: " + std::to_string(passed2) + " checks passed" + t +
               (failed2 ? ", first failure: " + firstFail : ""));
    report(3, valuation && invariant,
           std::string("DISCREPANCY for phi_p valuation ") + (valuation ? "emitted" : "missing") +
               ", for s*n = NK*r " + (invariant ? "emitted" : "missing"));
}

void propertyCriterion()
{
    int const cases = 1000;
    props::Outcome const a = props::skewDivision(cases, 101);
    props::Outcome const b = props::skewGcd(cases, 202);
    props::ProfileOutcome const c = props::profiles(cases, 303);
    props::Outcome const d = props::hermite(cases, 404);
    std::string detail;
    int bad = 0;
    auto add = [&](char const * name, props::Outcome const & o) {
        detail += std::string(detail.empty() ? "" : ", ") + name + " " + std::to_string(o.cases - o.failures) +
                  "/" + std::to_string(o.cases);
        if (!o.ok() || o.cases < cases) {
            ++bad;
            detail += " (" + o.first + ")";
        }
    };
    add("rdivmod", a);
    add("rgcd", b);
    add("m(pi)=0", c.minpoly);
    add("m-bar", c.reduction);
    add("lhs<=rhs", c.inequality);
    add("hermite", d);
    report(4, bad == 0, detail);
}

} // namespace

int main()
{
    int const jobs = static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency())));

    goldenCriteria();
    propertyCriterion();

    std::vector<Census> const small = censuses({{2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {3, 1, 3}}, jobs);

    {
        auto const start = Clock::now();
        std::vector<Census> extra = censuses({{2, 3, 2}}, jobs);
        auto k = FieldTower::primeTower(2, 4);
        extra.push_back(censusIsomorphismClasses(k, 3, k->generator(), jobs));
        CorpusReport total;
        std::string firstViolation;
        auto absorb = [&](Census const & C, int deg) {
            CorpusReport const r = checkCorpusProperties(C, deg, 55);
            total.ordersChecked += r.ordersChecked;
            total.gorensteinOrders += r.gorensteinOrders;
            total.idealsChecked += r.idealsChecked;
            total.kernelIdeals += r.kernelIdeals;
            total.equalities += r.equalities;
            total.rescalings += r.rescalings;
            for (auto const & v : r.violations) {
                if (firstViolation.empty())
                    firstViolation = label(C) + ": " + v;
                total.violations.push_back(v);
            }
        };
        for (auto const & C : small)
            absorb(C, 3);
        for (auto const & C : extra)
            absorb(C, 2);
        double const elapsed = seconds(start);
        report(5, total.violations.empty() && total.idealsChecked > 0 && elapsed < 600,
               std::to_string(total.ordersChecked) + " orders (" + std::to_string(total.gorensteinOrders) +
                   " Gorenstein), " + std::to_string(total.idealsChecked) + " ideals, " +
                   std::to_string(total.kernelIdeals) + " kernel, " + std::to_string(total.equalities) +
                   " O_I = End equalities, " + std::to_string(total.rescalings) + " rescalings, " +
                   std::to_string(total.violations.size()) + " violations in " + std::to_string(elapsed) + " s" +
                   (firstViolation.empty() ? "" : "; " + firstViolation));
    }

    {
        std::size_t classes = 0, occurring = 0, members = 0, violations = 0;
        std::string first;
        for (auto const & C : small)
            for (auto const & cls : C.isogenyClasses) {
                auto const r = checkAPiOccurrence(C, cls);
                if (r.skipped)
                    continue;
                ++classes;
                occurring += r.occurs;
                members += cls.members.size();
                violations += r.violations.size();
                if (!r.violations.empty() && first.empty())
                    first = label(C) + " " + r.mText + ": " + r.violations.front();
            }
        report(6, violations == 0 && classes > 0,
               std::to_string(classes) + " commutative isogeny classes, A[pi] occurs in " +
                   std::to_string(occurring) + ", " + std::to_string(members) + " members cross-checked, " +
                   std::to_string(violations) + " violations" + (first.empty() ? "" : "; " + first));
    }

    {
        auto const start = Clock::now();
        std::size_t classes = 0, ideals = 0, isoClasses = 0, violations = 0;
        std::string first;
        for (auto const & C : small)
            for (auto const & cls : C.isogenyClasses) {
                auto const r = checkIdealClassBijection(C, cls, {});
                if (r.skipped)
                    continue;
                ++classes;
                ideals += r.idealsExamined;
                isoClasses += r.isoClasses;
                std::vector<std::string> issues = r.violations;
                if (r.unknowns)
                    issues.push_back(std::to_string(r.unknowns) + " undecided equivalences");
                if (r.saturatedAt < 0)
                    issues.push_back("not saturated by norm degree " + std::to_string(r.lastDegree));
                if (r.idealClasses != r.isoClasses)
                    issues.push_back(std::to_string(r.idealClasses) + " ideal classes vs " +
                                     std::to_string(r.isoClasses) + " isomorphism classes");
                for (auto const & [id, hits] : r.hits)
                    if (hits != 1)
                        issues.push_back("class " + id + " hit " + std::to_string(hits) + " times");
                violations += issues.size();
                if (!issues.empty() && first.empty())
                    first = label(C) + " " + r.mText + ": " + issues.front();
            }
        double const elapsed = seconds(start);
        report(7, violations == 0 && classes > 0 && elapsed < 1800,
               std::to_string(classes) + " isogeny classes, " + std::to_string(isoClasses) +
                   " isomorphism classes matched by ideal classes, " + std::to_string(ideals) + " ideals, " +
                   std::to_string(violations) + " violations in " + std::to_string(elapsed) + " s" +
                   (first.empty() ? "" : "; " + first));
    }

    return failures ? 1 : 0;
}
