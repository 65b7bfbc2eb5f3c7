#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <map>
#include <string>
#include <vector>

#include "entorder/errors.hpp"
#include "entorder/measures.hpp"
#include "entorder/ordering.hpp"
#include "entorder/rng.hpp"
#include "entorder/sampler.hpp"
#include "entorder/states.hpp"

namespace py = pybind11;

namespace {

using entorder::CMat4;
using entorder::Complex;
using entorder::CVec4;
using entorder::DensityMatrix;
using entorder::PureState;

// States cross the boundary as nested 4x4 lists of complex numbers.
using Rows = std::array<std::array<Complex, 4>, 4>;

Rows to_rows(const CMat4& m) {
  Rows rows;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) rows[r][c] = m(r, c);
  return rows;
}

CMat4 from_rows(const Rows& rows) {
  CMat4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = rows[r][c];
  return m;
}

DensityMatrix state_from_rows(const Rows& rows) {
  return DensityMatrix(from_rows(rows));
}

py::dict measures_dict(const entorder::MeasureSet& m) {
  py::dict d;
  d["concurrence"] = m.concurrence;
  d["negativity"] = m.negativity;
  d["log_negativity"] = m.log_negativity;
  d["eof"] = m.eof;
  return d;
}

py::dict comparison_dict(const entorder::PairComparison& c) {
  py::dict d;
  d["delta_c"] = c.delta_c;
  d["delta_n"] = c.delta_n;
  d["delta"] = c.delta;
  d["verdict"] = std::string(entorder::verdict_name(c.verdict));
  return d;
}

py::dict optimum_dict(const entorder::BoundaryOptimum& o) {
  py::dict d;
  d["value"] = o.value;
  d["c1"] = o.c1;
  d["c2"] = o.c2;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-qubit entanglement measures and ordering analysis";
  m.attr("__version__") = ENTORDER_VERSION;

  // Base first so the derived translators registered afterwards win.
  const auto base = py::register_exception<entorder::Error>(
      m, "EntorderError", PyExc_RuntimeError);
  py::register_exception<entorder::ValidationError>(m, "InvalidState",
                                                    PyExc_ValueError);
  py::register_exception<entorder::ParamOutOfRange>(m, "ParamOutOfRange",
                                                    PyExc_ValueError);
  py::register_exception<entorder::ZeroVector>(m, "ZeroVector",
                                               PyExc_ValueError);
  py::register_exception<entorder::NotOrthogonal>(m, "NotOrthogonal",
                                                  PyExc_ValueError);
  py::register_exception<entorder::NotSeparable>(m, "NotSeparable",
                                                 PyExc_ValueError);
  py::register_exception<entorder::BandViolation>(m, "BandViolation",
                                                  PyExc_ValueError);
  (void)base;

  m.def(
      "werner", [](double p) { return to_rows(entorder::werner(p).matrix()); },
      py::arg("p"), "Bell state mixed with white noise at weight p.");
  m.def(
      "horodecki",
      [](double p) { return to_rows(entorder::horodecki(p).matrix()); },
      py::arg("p"), "Bell state mixed with |00><00| at weight p.");
  m.def(
      "mixture",
      [](double p, double q) {
        return to_rows(entorder::mixture(p, q).matrix());
      },
      py::arg("p"), py::arg("q"),
      "Bell state mixed with the separable sqrt(1-q)|00> + sqrt(q)|01>.");
  m.def(
      "family_xy",
      [](double p) { return to_rows(entorder::family_xy(p).matrix()); },
      py::arg("p"), "Constant-negativity slice, p in [(sqrt(2)-1)/2, 1/2].");
  m.def(
      "family_xz",
      [](double q) { return to_rows(entorder::family_xz(q).matrix()); },
      py::arg("q"), "Constant-concurrence slice, q in [0, 1].");
  m.def(
      "family_xv",
      [](double p) { return to_rows(entorder::family_xv(p).matrix()); },
      py::arg("p"),
      "Constant concurrence-plus-negativity slice, p in [sqrt(2)/4, 1/2].");
  m.def(
      "pure_theta",
      [](double p) { return entorder::pure_theta(p).amplitudes(); },
      py::arg("p"),
      "Amplitudes of sqrt(p)|01> + sqrt(1-p)|10>, as (c00, c01, c10, c11).");
  m.def(
      "min_neg_state",
      [](double p, const CVec4& separable) {
        return to_rows(entorder::min_neg_state(
                           p, PureState::from_amplitudes(separable))
                           .matrix());
      },
      py::arg("p"), py::arg("separable"),
      "Bell state mixed with an orthogonal separable pure state.");
  m.def("q_prime", &entorder::q_prime, py::arg("n_target"), py::arg("p"),
        "Mixing weight holding the mixture negativity at n_target.");
  m.def("q_triple_prime", &entorder::q_triple_prime, py::arg("n_ref"),
        py::arg("c_ref"), py::arg("p"),
        "Mixing weight holding concurrence + negativity at c_ref + n_ref.");
  m.def(
      "make_state",
      [](const std::string& family, const std::map<std::string, double>& params) {
        return to_rows(entorder::make_state(
                           {entorder::family_from_name(family), params})
                           .matrix());
      },
      py::arg("family"), py::arg("params"),
      "Instantiate a named family from its parameter dictionary.");

  m.def(
      "concurrence",
      [](const Rows& rho) { return entorder::concurrence(state_from_rows(rho)); },
      py::arg("rho"));
  m.def(
      "negativity",
      [](const Rows& rho) { return entorder::negativity(state_from_rows(rho)); },
      py::arg("rho"));
  m.def(
      "log_negativity",
      [](const Rows& rho) {
        return entorder::log_negativity(state_from_rows(rho));
      },
      py::arg("rho"));
  m.def(
      "eof",
      [](const Rows& rho) { return entorder::eof(state_from_rows(rho)); },
      py::arg("rho"), "Entanglement of formation.");
  m.def("binary_entropy", &entorder::binary_entropy, py::arg("x"));
  m.def("eof_from_concurrence", &entorder::eof_from_concurrence, py::arg("c"));
  m.def(
      "pure_measures",
      [](const CVec4& amplitudes) {
        return entorder::pure_measures(PureState::from_amplitudes(amplitudes));
      },
      py::arg("amplitudes"),
      "2|c00 c11 - c01 c10|, the shared measure value of a pure state.");
  m.def(
      "measure_all",
      [](const Rows& rho) {
        return measures_dict(entorder::measure_all(state_from_rows(rho)));
      },
      py::arg("rho"), "All four measures as a dictionary.");

  m.def(
      "compare",
      [](const Rows& rho1, const Rows& rho2) {
        return comparison_dict(
            entorder::compare(state_from_rows(rho1), state_from_rows(rho2)));
      },
      py::arg("rho1"), py::arg("rho2"),
      "Measure gaps and ordering verdict for a pair of states.");
  m.def("lower_bound_negativity", &entorder::lower_bound_negativity,
        py::arg("c"), "Minimum negativity attainable at concurrence c.");
  m.def(
      "classify_region",
      [](double c_ref, double n_ref, double c, double n) {
        return std::string(entorder::verdict_name(
            entorder::classify_region({c_ref, n_ref}, {c, n})));
      },
      py::arg("c_ref"), py::arg("n_ref"), py::arg("c"), py::arg("n"),
      "Verdict from plane coordinates alone.");
  m.def(
      "extremal_gaps",
      []() {
        const entorder::ExtremalGaps gaps = entorder::extremal_gaps();
        py::dict d;
        d["max_dc"] = gaps.max_dc;
        d["max_dn"] = gaps.max_dn;
        d["max_delta"] = gaps.max_delta;
        py::dict witnesses;
        witnesses["max_dc"] =
            py::make_tuple(gaps.dc_witness.label_1, gaps.dc_witness.label_2);
        witnesses["max_dn"] =
            py::make_tuple(gaps.dn_witness.label_1, gaps.dn_witness.label_2);
        witnesses["max_delta"] = py::make_tuple(gaps.delta_witness.label_1,
                                                gaps.delta_witness.label_2);
        d["witnesses"] = witnesses;
        return d;
      },
      "Closed-form maximal measure gaps with their witness labels.");
  m.def(
      "numeric_extremal_search",
      [](int grid_steps) {
        const entorder::BoundarySearch s =
            entorder::numeric_extremal_search(grid_steps);
        py::dict d;
        d["max_dc"] = optimum_dict(s.max_dc);
        d["max_dn"] = optimum_dict(s.max_dn);
        d["max_delta"] = optimum_dict(s.max_delta);
        return d;
      },
      py::arg("grid_steps") = 1000,
      "Grid-plus-golden-section search over the band boundaries.");
  m.def("delta_grid", &entorder::delta_grid, py::arg("n1"), py::arg("n2"),
        "Violation magnitude over a boundary-state parameter grid.");

  m.def(
      "sample_pairs",
      [](std::uint64_t seed, int rank, int pairs) {
        const entorder::SampleReport r =
            entorder::sample_pairs({seed, rank, pairs});
        py::dict d;
        d["pairs_tested"] = r.pairs_tested;
        d["violation_fraction"] = r.violation_fraction;
        d["max_delta_observed"] = r.max_delta_observed;
        d["band_violations"] = r.band_violations;
        return d;
      },
      py::arg("seed"), py::arg("rank") = 4, py::arg("pairs") = 1000,
      "Ordering-violation statistics over random state pairs.");
  m.def(
      "random_density",
      [](std::uint64_t seed, int rank, int count) {
        entorder::Xoshiro256pp rng(seed);
        std::vector<Rows> out;
        out.reserve(static_cast<size_t>(count));
        for (int i = 0; i < count; ++i)
          out.push_back(to_rows(entorder::random_density(rng, rank).matrix()));
        return out;
      },
      py::arg("seed"), py::arg("rank") = 4, py::arg("count") = 1,
      "Random density matrices from one seeded stream.");
  m.def(
      "random_pure",
      [](std::uint64_t seed, int count) {
        entorder::Xoshiro256pp rng(seed);
        std::vector<CVec4> out;
        out.reserve(static_cast<size_t>(count));
        for (int i = 0; i < count; ++i)
          out.push_back(entorder::random_pure(rng).amplitudes());
        return out;
      },
      py::arg("seed"), py::arg("count") = 1,
      "Random pure-state amplitude vectors from one seeded stream.");
}
