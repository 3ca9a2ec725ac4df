#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "zcoarse/cli.hpp"
#include "zcoarse/oracle.hpp"
#include "zcoarse/profinite.hpp"
#include "zcoarse/rectify.hpp"
#include "zcoarse/report.hpp"
#include "zcoarse/spectra.hpp"

namespace py = pybind11;
using namespace zcoarse;

namespace {

// Python ints cross the boundary as decimal text, so no width is imposed.
BigInt from_py(const py::int_& v) { return parse_bigint(std::string(py::str(v))); }

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_decimal(v).c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(to_py(v));
  return out;
}

py::object to_py(const report::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

ClassifyParams classify_params(std::uint64_t i_max, WordLength threshold, std::int64_t lo, std::int64_t hi,
                               std::uint64_t random_pairs, std::uint64_t seed) {
  ClassifyParams p;
  p.i_max = i_max;
  p.threshold = threshold;
  p.sampling.exhaustive = {lo, hi};
  p.sampling.random_pairs = random_pairs;
  p.sampling.seed = seed;
  return p;
}

}  // namespace

PYBIND11_MODULE(_zcoarse, m) {
  m.doc() = "Word metrics on Z, g-adic and pro-Q residues, power-invertibility spectra";
  m.attr("__version__") = report::version();

  m.def("special_rep", [](std::int64_t g, const py::int_& k) { return special_rep(Base(g), from_py(k)).digits; },
        py::arg("g"), py::arg("k"), "Special g-adic digits of k, least significant first.");
  m.def("word_length", [](std::int64_t g, const py::int_& k) { return word_length(Base(g), from_py(k)); },
        py::arg("g"), py::arg("k"));
  m.def("distance",
        [](std::int64_t g, const py::int_& a, const py::int_& b) { return distance(Base(g), from_py(a), from_py(b)); },
        py::arg("g"), py::arg("a"), py::arg("b"));
  m.def(
      "oracle_length",
      [](std::int64_t g, std::int64_t k, unsigned max_terms) -> std::optional<WordLength> {
        return oracle_length(GeneratorSet::geometric(Base(g)), k, max_terms).length;
      },
      py::arg("g"), py::arg("k"), py::arg("max_terms") = 40, "Brute-force length, or None when inconclusive.");
  m.def(
      "validate_formula",
      [](std::int64_t g, std::int64_t lo, std::int64_t hi) { return to_py(report::to_json(validate_formula(Base(g), {lo, hi}))); },
      py::arg("g"), py::arg("lo"), py::arg("hi"));

  m.def(
      "mod_inverse", [](std::int64_t p, std::int64_t g, unsigned n) { return to_py(mod_inverse(p, Base(g), n).residue); },
      py::arg("p"), py::arg("g"), py::arg("precision"));
  m.def(
      "divergence_witness",
      [](std::int64_t g, std::int64_t p, std::uint64_t i_max) {
        py::list out;
        for (const auto& t : divergence_witness(Base(g), p, i_max).terms) out.append(py::make_tuple(t.index, to_py(t.value), t.length));
        return out;
      },
      py::arg("g"), py::arg("p"), py::arg("i_max") = 40, "(index, value, word length) triples.");

  m.def(
      "spectrum",
      [](std::int64_t g, std::vector<std::int64_t> primes, std::uint64_t i_max, WordLength threshold, std::int64_t lo,
         std::int64_t hi, std::uint64_t random_pairs, std::uint64_t seed) {
        const SpectrumReport r = spectrum(Base(g), std::move(primes), classify_params(i_max, threshold, lo, hi, random_pairs, seed));
        auto j = report::to_json(r);
        j["evidence"] = report::evidence_of(r);
        return to_py(j);
      },
      py::arg("g"), py::arg("primes"), py::arg("i_max") = 40, py::arg("threshold") = 20, py::arg("lo") = -300,
      py::arg("hi") = 300, py::arg("random_pairs") = 1000, py::arg("seed") = 1);
  m.def(
      "spectrum_profinite",
      [](std::vector<std::int64_t> q, std::vector<std::int64_t> primes) {
        const SpectrumReport r = spectrum_profinite(PrimeSet(std::move(q)), std::move(primes));
        auto j = report::to_json(r);
        j["evidence"] = report::evidence_of(r);
        return to_py(j);
      },
      py::arg("Q"), py::arg("primes"));
  m.def(
      "compare_bases",
      [](std::int64_t a, std::int64_t b, std::vector<std::int64_t> primes) {
        return to_string(compare_spectra(spectrum(Base(a), primes), spectrum(Base(b), primes)).outcome);
      },
      py::arg("a"), py::arg("b"), py::arg("primes"));

  m.def(
      "q_star",
      [](std::vector<std::int64_t> q, std::int64_t bound) {
        std::vector<std::int64_t> out;
        for (const auto& member : q_star_members(PrimeSet(std::move(q)), bound)) out.push_back(member.value);
        return out;
      },
      py::arg("Q"), py::arg("bound"));
  m.def(
      "inverse_sequence",
      [](std::vector<std::int64_t> q, std::int64_t p, unsigned n) { return to_py(qadic_inverse_sequence(PrimeSet(std::move(q)), p, n)); },
      py::arg("Q"), py::arg("p"), py::arg("n_max"));

  m.def(
      "partition",
      [](std::int64_t g, std::int64_t lo, std::int64_t hi) { return build_partition(Base(g), {lo, hi}).blocks; },
      py::arg("g"), py::arg("lo"), py::arg("hi"), "Block index -> members of the window.");
  m.def(
      "rectify_multiplication",
      [](std::int64_t g, std::int64_t lo, std::int64_t hi) {
        const auto f = FiniteCoarseMap::tabulate({lo, hi}, [g](std::int64_t x) { return g * x; });
        const auto finv = FiniteCoarseMap::tabulate({lo, hi}, [g](std::int64_t x) { return floor_div(x, g); });
        const RectifyReport r = rectify(f, finv, Base(g), Base(g));
        return py::make_tuple(r.csb.h, r.audit.max_displacement);
      },
      py::arg("g"), py::arg("lo"), py::arg("hi"), "Bijection close to k -> g k on [lo, hi] and its closeness.");

  m.def(
      "run",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "zcoarse");
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI command; returns (exit code, stdout, stderr).");
}
