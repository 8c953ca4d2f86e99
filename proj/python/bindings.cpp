#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rescoh/cli.hpp"
#include "rescoh/error.hpp"
#include "rescoh/realform.hpp"
#include "rescoh/root_spec.hpp"
#include "rescoh/serialize.hpp"

namespace py = pybind11;
using namespace rescoh;

namespace {

// Documents cross the boundary as JSON text; the Python side decodes them.
std::string datum_json(std::size_t rank, const std::string& chamber, const std::string& alpha0,
                       const std::vector<long>& lambda, bool full) {
  std::vector<Rational> coords(lambda.begin(), lambda.end());
  const ValidationResult res =
      validate_datum(rank, SignChamber::parse(chamber), parse_root_spec(alpha0, rank), Weight(std::move(coords)));
  if (!res.ok()) return Json{{"valid", false}, {"violations", to_json(res.violations)}}.dump();
  if (!full) return Json{{"valid", true}, {"hc_datum", to_json(*res.datum)}}.dump();
  return package_document(derive_package(*res.datum)).dump();
}

}  // namespace

PYBIND11_MODULE(_rescoh, m) {
  m.doc() = "Bindings for the rescoh C++ core";
  py::register_exception<Error>(m, "RescohError", PyExc_ValueError);

  m.def("validate_json", [](std::size_t rank, const std::string& chamber, const std::string& alpha0,
                            const std::vector<long>& lambda) { return datum_json(rank, chamber, alpha0, lambda, false); });
  m.def("package_json", [](std::size_t rank, const std::string& chamber, const std::string& alpha0,
                           const std::vector<long>& lambda) { return datum_json(rank, chamber, alpha0, lambda, true); });
  m.def("enumerate_json", [](std::size_t rank, long bound) {
    Json out = Json::array();
    for (const auto& d : enumerate_data(rank, bound)) out.push_back(package_document(derive_package(d)));
    return out.dump();
  });
  m.def("sl2_verify_json", [](const std::string& a_plus, const std::string& a_minus, int depth) {
    Sl2Options opts;
    opts.a_plus = Rational(a_plus);
    opts.a_minus = Rational(a_minus);
    opts.a_plus.canonicalize();
    opts.a_minus.canonicalize();
    opts.depth = depth;
    return to_json(verify_baby_theorem(opts), opts).dump();
  });
  m.def("lshape_json", [](std::size_t rank, const std::string& cls, bool ccc, bool tempered, bool central) {
    const LShape shape = l_shape(rank, parse_parabolic_class(cls));
    return Json{{"lshape", to_json(shape)},
                {"pole_certificate", to_json(pole_certificate(shape, {ccc, tempered, central}))}}
        .dump();
  });
  m.def("intertwining_coefficient", [](int k) { return intertwining_coefficient(k).to_string("s"); });
  m.def("wedge_weights", [](std::size_t rank, int q) {
    std::map<std::string, std::uint64_t> out;
    for (const auto& [w, mult] : rescoh::wedge_weights(rank, q)) out.emplace(w.to_string(), mult);
    return out;
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
