#include <pybind11/pybind11.h>

#include "drinfeld/errors.hpp"
#include "drinfeld/golden.hpp"
#include "drinfeld/io.hpp"

namespace py = pybind11;
using namespace drinfeld;

namespace {

// Every entry point takes and returns JSON text; the Python layer converts.

std::string analyze(std::string const & module)
{
    return profileToJson(FrobeniusProfile(moduleFromJson(parseJson(module)))).dump();
}

std::string endRing(std::string const & module)
{
    return endRingToJson(*EndRing::compute(moduleFromJson(parseJson(module)))).dump();
}

std::string idealAct(std::string const & module, std::string const & ideal)
{
    auto E = EndRing::compute(moduleFromJson(parseJson(module)));
    return actionToJson(*E, idealFromJson(*E, parseJson(ideal))).dump();
}

std::string kernelTest(std::string const & module, std::string const & ideal)
{
    auto E = EndRing::compute(moduleFromJson(parseJson(module)));
    return kernelToJson(*E, isKernelIdeal(*E, idealFromJson(*E, parseJson(ideal)))).dump();
}

std::string census(std::string const & spec, int jobs, int maxNormDeg, int linEquivBound, std::uint64_t seed,
                   bool validate)
{
    Census C;
    {
        py::gil_scoped_release release;
        C = censusFromJson(parseJson(spec), jobs);
    }
    Json out = Json::array();
    out.push_back(censusHeaderJson(C, seed));
    for (auto const & info : C.classes)
        out.push_back(censusRecordJson(C, info));
    if (validate) {
        py::gil_scoped_release release;
        out.push_back(censusValidationJson(C, {maxNormDeg, linEquivBound}, std::min(maxNormDeg, 2), seed));
    }
    return out.dump();
}

std::string paperExamples()
{
    Json out = Json::array();
    for (auto const & r : runGoldenExamples())
        out.push_back({{"name", r.name}, {"status", statusName(r.status)}, {"detail", r.detail}});
    return out.dump();
}

} // namespace

PYBIND11_MODULE(_drinfeld, m)
{
    m.doc() = "Exact arithmetic for Drinfeld modules over finite fields";

    auto const & base = py::register_exception<Error>(m, "DrinfeldError", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", base);
    py::register_exception<TooLarge>(m, "TooLarge", base);
    py::register_exception<NonCommutativeEndomorphismRing>(m, "NonCommutativeEndomorphismRing", base);
    py::register_exception<NotSublattice>(m, "NotSublattice", base);

    m.attr("schema_version") = kSchemaVersion;
    m.def("analyze", &analyze, py::arg("module"));
    m.def("end_ring", &endRing, py::arg("module"));
    m.def("ideal_act", &idealAct, py::arg("module"), py::arg("ideal"));
    m.def("kernel_test", &kernelTest, py::arg("module"), py::arg("ideal"));
    m.def("census", &census, py::arg("spec"), py::arg("jobs") = 1, py::arg("max_norm_deg") = 4,
          py::arg("lin_equiv_bound") = 64, py::arg("seed") = 1, py::arg("validate") = true);
    m.def("paper_examples", &paperExamples);
}
