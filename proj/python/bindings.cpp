#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sympow/affine_counting.hpp"
#include "sympow/cli.hpp"
#include "sympow/errors.hpp"
#include "sympow/etale.hpp"
#include "sympow/polynomial.hpp"
#include "sympow/transfer.hpp"

namespace py = pybind11;

namespace {

py::int_ to_python(const mpz_class& v) { return py::int_(py::str(v.get_str())); }

std::string run_json(const std::string& command, std::optional<std::size_t> n, std::optional<std::uint64_t> q,
                     std::optional<std::uint32_t> r, std::optional<std::size_t> d, std::optional<std::size_t> x,
                     std::optional<std::size_t> z, std::uint64_t seed, std::optional<std::string> input,
                     std::optional<std::string> caps) {
  sympow::cli::RunConfig c;
  c.command = command;
  c.n = n;
  c.q = q;
  c.r = r;
  c.d = d;
  c.x = x;
  c.z = z;
  c.seed = seed;
  c.input_path = input;
  if (caps) c.caps = sympow::cli::parse_caps(*caps);
  return sympow::cli::execute(c).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact verification of symmetric power identities";

  static py::exception<sympow::Error> error(m, "Error");
  static py::exception<sympow::ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<sympow::CapExceeded> cap_exceeded(m, "CapExceeded", error.ptr());
  static py::exception<sympow::InvalidInput> invalid_input(m, "InvalidInput", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const sympow::ParseError& e) {
      py::object exc = py::handle(parse_error.ptr())(e.what());
      exc.attr("line") = e.line();
      exc.attr("column") = e.column();
      PyErr_SetObject(parse_error.ptr(), exc.ptr());
    } catch (const sympow::CapExceeded& e) {
      cap_exceeded(e.what());
    } catch (const sympow::InvalidInput& e) {
      invalid_input(e.what());
    } catch (const sympow::Error& e) {
      error(e.what());
    }
  });

  m.def("run_json", &run_json, py::arg("command"), py::arg("n") = py::none(), py::arg("q") = py::none(),
        py::arg("r") = py::none(), py::arg("d") = py::none(), py::arg("x") = py::none(), py::arg("z") = py::none(),
        py::arg("seed") = 0, py::arg("input") = py::none(), py::arg("caps") = py::none());
  m.def("commands", &sympow::cli::commands);

  m.def(
      "canonical_poly",
      [](const std::string& text, std::vector<std::string> vars, std::uint32_t p) {
        const auto field = p == 0 ? sympow::Field::rationals() : sympow::Field::prime(p);
        return sympow::poly::parse_poly(text, sympow::poly::make_ring(std::move(vars), field)).str();
      },
      py::arg("text"), py::arg("vars"), py::arg("p") = 0);

  m.def(
      "sym_count",
      [](std::uint64_t q, std::vector<std::string> vars, const std::vector<std::string>& equations, std::size_t n) {
        const auto x = sympow::counting::AffineVarietySpec::make("X", q, std::move(vars), equations);
        return to_python(sympow::counting::sym_count(x, n).count);
      },
      py::arg("q"), py::arg("vars"), py::arg("equations"), py::arg("n"));

  m.def(
      "point_counts",
      [](std::uint64_t q, std::vector<std::string> vars, const std::vector<std::string>& equations, std::size_t depth) {
        const auto x = sympow::counting::AffineVarietySpec::make("X", q, std::move(vars), equations);
        const auto inv = sympow::counting::closed_points(x, depth);
        py::list n, c;
        for (const auto& v : inv.N) n.append(to_python(v));
        for (const auto& v : inv.c) c.append(to_python(v));
        return py::make_tuple(n, c);
      },
      py::arg("q"), py::arg("vars"), py::arg("equations"), py::arg("depth"));

  m.def(
      "invariant_dimension",
      [](std::uint64_t q, std::uint32_t r, std::size_t n) {
        const auto rep = sympow::etale::dimension_check(sympow::etale::ExtensionSpec::make(q, r), n);
        return py::make_tuple(rep.dim_expected, rep.dim_actual);
      },
      py::arg("q"), py::arg("r"), py::arg("n"));

  m.def(
      "linearization_inverse_holds",
      [](std::size_t d, std::size_t n) { return sympow::transfer::prop81_verify(d, n).ok(); }, py::arg("d"),
      py::arg("n"));
}
