#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "drinfeld/errors.hpp"
#include "drinfeld/golden.hpp"
#include "drinfeld/io.hpp"

using namespace drinfeld;

namespace {

enum Exit { kOk = 0, kAssertion = 1, kInput = 2 };

struct Options {
    std::string input;
    std::string ideal;
    std::string out;
    std::string format = "text";
    int maxNormDeg = 4;
    int linEquivBound = 64;
    int jobs = 1;
    std::uint64_t seed = 1;
};

class Sink {
  public:
    explicit Sink(std::string const & path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw InputError("cannot write " + path);
        }
    }
    std::ostream & os() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::string yesNo(bool b) { return b ? "yes" : "no"; }

std::string solutionsText(std::vector<InvariantTuple> const & sols)
{
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < sols.size(); ++i)
        os << (i ? ", " : "") << "(" << sols[i][0] << "," << sols[i][1] << "," << sols[i][2] << "," << sols[i][3]
           << ")";
    os << "}";
    return os.str();
}

DrinfeldModule loadModule(Options const & o)
{
    if (o.input.empty())
        throw InputError("--input is required");
    return moduleFromJson(readJsonFile(o.input));
}

int runAnalyze(Options const & o)
{
    FrobeniusProfile const P(loadModule(o));
    Sink sink(o.out);
    if (o.format == "json") {
        sink.os() << profileToJson(P).dump(2) << "\n";
        return kOk;
    }
    auto & os = sink.os();
    os << "phi_T = " << P.module().toString() << "\n"
       << "p(T) = " << P.module().charPrime().toString() << "\n"
       << "m(x) = " << P.mText() << "\n"
       << "m~(x) = " << P.mTildeText() << "\n"
       << "s = " << P.s() << ", NK = " << P.NK() << ", H = " << P.H() << ", d = " << P.d() << ", n = " << P.n()
       << ", r = " << P.r() << "\n"
       << "ordinary: " << yesNo(P.isOrdinary()) << "\n"
       << "commutative End: " << yesNo(P.isCommutative()) << "\n"
       << "A[pi] locally maximal at pi: " << (P.isLocallyMaximal() ? "true" : "false") << " (lhs "
       << P.localMaximality().lhs << ", rhs " << P.localMaximality().rhs << ")\n"
       << "invariant solutions: " << solutionsText(P.invariantSolutions()) << "\n";
    return kOk;
}

int runEndring(Options const & o)
{
    auto E = EndRing::compute(loadModule(o));
    Sink sink(o.out);
    if (o.format == "json") {
        sink.os() << endRingToJson(*E).dump(2) << "\n";
        return kOk;
    }
    auto & os = sink.os();
    FrobeniusField const & f = *E->profile().frobeniusField();
    os << "rank " << E->rank() << "\n";
    for (std::size_t i = 0; i < E->rank(); ++i)
        os << "omega_" << i + 1 << " = " << E->module().skewToString(E->basis()[i]) << "  [pi: "
           << f.toString(E->basisCoords()[i]) << "]\n";
    auto const g = gorensteinReport(*E->order());
    os << "chi(E/A[pi]) = " << E->indexOverAPi().toString() << "\n"
       << "E = A[pi]: " << yesNo(E->isAPi()) << "\n"
       << "Gorenstein: " << yesNo(g.gorenstein) << " (defect " << g.defect.toString() << ")\n";
    return kOk;
}

std::pair<std::shared_ptr<EndRing const>, FracIdeal> loadIdeal(Options const & o)
{
    auto E = EndRing::compute(loadModule(o));
    if (o.ideal.empty())
        throw InputError("--ideal is required");
    FracIdeal I = idealFromJson(*E, readJsonFile(o.ideal));
    return {E, std::move(I)};
}

int runIdealAct(Options const & o)
{
    auto [E, I] = loadIdeal(o);
    Json const j = actionToJson(*E, I);
    Sink sink(o.out);
    if (o.format == "json") {
        sink.os() << j.dump(2) << "\n";
        return kOk;
    }
    sink.os() << "u_I = " << j["u_I"].get<std::string>() << "\n"
              << "psi_T = " << j["psi_T"].get<std::string>() << "\n"
              << "kernel ideal: " << (j["kernel"]["kernel"].get<bool>() ? "true" : "false") << "\n";
    if (!j["kernel"]["witness"].is_null())
        sink.os() << "witness: " << j["kernel"]["witness"].get<std::string>() << "\n";
    sink.os() << "O_I in End(psi): " << yesNo(j["multiplicator_in_end"].get<bool>())
              << ", equal: " << yesNo(j["multiplicator_equals_end"].get<bool>()) << "\n";
    return kOk;
}

int runKernelTest(Options const & o)
{
    auto [E, I] = loadIdeal(o);
    KernelReport const k = isKernelIdeal(*E, I);
    Sink sink(o.out);
    if (o.format == "json") {
        sink.os() << kernelToJson(*E, k).dump(2) << "\n";
        return kOk;
    }
    sink.os() << "kernel ideal: " << (k.kernel ? "true" : "false") << "\n";
    if (k.witness)
        sink.os() << "witness: "
                  << (k.witnessInA ? k.witnessInA->toString() : E->profile().frobeniusField()->toString(*k.witness))
                  << "\n";
    return kOk;
}

int runCensus(Options const & o)
{
    if (o.input.empty())
        throw InputError("--input is required");
    Census const C = censusFromJson(readJsonFile(o.input), o.jobs);
    Json const v = censusValidationJson(C, {o.maxNormDeg, o.linEquivBound}, std::min(o.maxNormDeg, 2), o.seed);
    std::size_t const violations = v["violations"].get<std::size_t>();

    Sink sink(o.out);
    auto & os = sink.os();
    if (o.format == "json") {
        os << censusHeaderJson(C, o.seed).dump() << "\n";
        for (auto const & info : C.classes)
            os << censusRecordJson(C, info).dump() << "\n";
        os << v.dump() << "\n";
    } else {
        Json const h = censusHeaderJson(C, o.seed);
        os << "census: q = " << C.tower->q() << ", n = " << C.tower->n() << ", r = " << C.r << ", t = " << h["t_text"].get<std::string>()
           << " (p = " << h["char_prime"].get<std::string>() << ")\n"
           << C.modules << " modules, " << C.classes.size() << " isomorphism classes, " << C.isogenyClasses.size()
           << " isogeny classes\n";
        for (std::size_t i = 0; i < C.isogenyClasses.size(); ++i) {
            auto const & cls = C.isogenyClasses[i];
            os << "  m = " << cls.mText << ": " << cls.members.size() << " classes, A[pi] occurs "
               << yesNo(v["a_pi_occurrence"][i]["occurs"].get<bool>()) << "\n";
        }
        os << "violations: " << violations << "\n";
    }
    return violations ? kAssertion : kOk;
}

int runGolden(Options const & o)
{
    auto const results = runGoldenExamples();
    Sink sink(o.out);
    bool failed = false;
    Json arr = Json::array();
    for (auto const & r : results) {
        failed = failed || r.status == GoldenStatus::Fail;
        if (o.format == "json")
            arr.push_back({{"name", r.name}, {"status", statusName(r.status)}, {"detail", r.detail}});
        else
            sink.os() << statusName(r.status) << "  " << r.name << (r.detail.empty() ? "" : "  [" + r.detail + "]")
                      << "\n";
    }
    if (o.format == "json")
        sink.os() << arr.dump(2) << "\n";
    return failed ? kAssertion : kOk;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Drinfeld modules over finite fields: Frobenius invariants, endomorphism rings and ideal actions"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App * sub, bool needsInput) {
        auto * in = sub->add_option("--input", o.input, "JSON input file");
        if (needsInput)
            in->required();
        sub->add_option("--out", o.out, "output file (default stdout)");
        sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--max-norm-deg", o.maxNormDeg, "largest ideal norm degree enumerated")
            ->check(CLI::Range(0, 64));
        sub->add_option("--lin-equiv-bound", o.linEquivBound, "degree bound for linear equivalence")
            ->check(CLI::Range(0, 4096));
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 1024));
        sub->add_option("--seed", o.seed, "random seed");
    };
    auto * analyze = app.add_subcommand("analyze", "Frobenius invariants and local maximality");
    common(analyze, true);
    auto * endring = app.add_subcommand("endring", "endomorphism ring as an A-order");
    common(endring, true);
    auto * idealAct = app.add_subcommand("ideal-act", "I*phi, u_I and the kernel verdict");
    common(idealAct, true);
    idealAct->add_option("--ideal", o.ideal, "ideal JSON file")->required();
    auto * kernel = app.add_subcommand("kernel-test", "kernel ideal test with witness");
    common(kernel, true);
    kernel->add_option("--ideal", o.ideal, "ideal JSON file")->required();
    auto * census = app.add_subcommand("census", "enumerate and validate a census (JSONL)");
    common(census, true);
    auto * golden = app.add_subcommand("paper-examples", "recompute the worked examples");
    common(golden, false);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int const code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }
    if (census->parsed() && census->count("--format") == 0)
        o.format = "json";

    try {
        if (analyze->parsed())
            return runAnalyze(o);
        if (endring->parsed())
            return runEndring(o);
        if (idealAct->parsed())
            return runIdealAct(o);
        if (kernel->parsed())
            return runKernelTest(o);
        if (census->parsed())
            return runCensus(o);
        return runGolden(o);
    } catch (InputError const & e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (TooLarge const & e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (NonCommutativeEndomorphismRing const & e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (NotSublattice const & e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (std::exception const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return kAssertion;
    }
}
