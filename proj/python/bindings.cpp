#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "qjones/braid.hpp"
#include "qjones/error.hpp"
#include "qjones/foxburau.hpp"
#include "qjones/format.hpp"
#include "qjones/kashaev.hpp"
#include "qjones/mcmahon.hpp"
#include "qjones/verma_oracle.hpp"

namespace py = pybind11;
using namespace qjones;

namespace {

BraidWord braid(const std::string& word, std::optional<int> strands) { return parse_braid(word, strands); }

}  // namespace

PYBIND11_MODULE(_qjones, m) {
  m.doc() = "Colored Jones, Alexander and Kashaev invariants of braid closures";

  static py::exception<Error> error(m, "Error");
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<DomainError> domain_error(m, "DomainError", error.ptr());
  static py::exception<NotAKnotError> not_a_knot(m, "NotAKnotError", domain_error.ptr());
  static py::exception<UnterminatedError> unterminated(m, "UnterminatedError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NotAKnotError& e) {
      not_a_knot(e.what());
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const DomainError& e) {
      domain_error(e.what());
    } catch (const UnterminatedError& e) {
      unterminated(e.what());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  m.def("is_knot", [](const std::string& w, std::optional<int> s) { return closure_is_knot(braid(w, s)); },
        py::arg("word"), py::arg("strands") = py::none());

  m.def(
      "colored_jones",
      [](const std::string& w, int n, std::optional<int> s, const std::string& mode) {
        InverseSeriesConfig cfg;
        if (mode == "bosonic") cfg.mode = SeriesMode::bosonic;
        else if (mode != "fermionic") throw DomainError("mode must be 'fermionic' or 'bosonic'");
        return to_string(colored_jones(braid(w, s), n, cfg));
      },
      py::arg("word"), py::arg("N"), py::arg("strands") = py::none(), py::arg("mode") = "fermionic",
      "J'_K(N) as a polynomial string in ascending powers of q.");

  m.def(
      "state_sum_jones",
      [](const std::string& w, int n, std::optional<int> s) { return to_string(state_sum_jones(braid(w, s), n)); },
      py::arg("word"), py::arg("N"), py::arg("strands") = py::none());

  m.def(
      "alexander",
      [](const std::string& w, std::optional<int> s, const std::string& engine) {
        const auto b = braid(w, s);
        const auto d = engine == "fox" ? abelianize_check(b).alexander : alexander(b);
        return to_string(d, TermOrder::center_out);
      },
      py::arg("word"), py::arg("strands") = py::none(), py::arg("engine") = "mcmahon");

  m.def(
      "kashaev",
      [](const std::string& w, int n, std::optional<int> s, bool exact) {
        return kashaev_value(braid(w, s), n, exact ? KashaevMode::exact : KashaevMode::floating).approx;
      },
      py::arg("word"), py::arg("N"), py::arg("strands") = py::none(), py::arg("exact") = true);

  m.def(
      "kashaev_exact",
      [](const std::string& w, int n, std::optional<int> s) { return to_string(*kashaev_value(braid(w, s), n).exact); },
      py::arg("word"), py::arg("N"), py::arg("strands") = py::none(),
      "Residue modulo the N-th cyclotomic polynomial, ascending in q.");

  m.def(
      "volume_rate",
      [](const std::string& w, const std::vector<int>& orders, std::optional<int> s, unsigned threads) {
        std::vector<std::tuple<int, double, std::optional<double>>> out;
        py::gil_scoped_release release;
        for (const auto& p : volume_rate(braid(w, s), orders, threads)) out.emplace_back(p.order, p.abs_value, p.rate);
        return out;
      },
      py::arg("word"), py::arg("orders"), py::arg("strands") = py::none(), py::arg("threads") = 0);

  m.def("mahler_measure", [](const std::string& poly) { return mahler_measure(parse_laurent(poly)); }, py::arg("poly"));
}
