#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibthermo/fib_words.hpp"
#include "fibthermo/rauzy.hpp"
#include "fibthermo/thermo.hpp"
#include "fibthermo/verify.hpp"

namespace py = pybind11;
using namespace fibthermo;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fibonacci subshift combinatorics, return words, and freezing-transition bounds";
  m.attr("__version__") = "0.1.0";

  // ---- words -------------------------------------------------------------
  m.def("fib_number", &words::fib_number, py::arg("n"),
        "Fibonacci number with F0=1, F1=2");
  m.def("fib_word", &words::fib_word, py::arg("n"), "Finite Fibonacci word omega_n");
  m.def("fib_prefix", &words::fib_prefix, py::arg("length"),
        "Prefix of the infinite Fibonacci word");
  m.def("mirror", &words::mirror, py::arg("word"), "Full reversal of a word");
  m.def("occurrences", &words::occurrences, py::arg("pattern"), py::arg("text"),
        "Start positions of pattern in text, overlaps included");

  py::class_<words::DeltaResult>(m, "DeltaResult")
      .def_readonly("value", &words::DeltaResult::value)
      .def_readonly("saturated", &words::DeltaResult::saturated)
      .def("__repr__", [](const words::DeltaResult& d) {
        return "DeltaResult(value=" + std::to_string(d.value) +
               ", saturated=" + (d.saturated ? std::string("True") : std::string("False")) + ")";
      });

  py::class_<words::FactorOracle>(m, "FactorOracle",
                                  "Validated factor-membership window of the Fibonacci word")
      .def(py::init<std::size_t>(), py::arg("max_query_length"))
      .def_property_readonly("max_query_length", &words::FactorOracle::max_query_length)
      .def_property_readonly("window", &words::FactorOracle::window)
      .def("is_factor", &words::FactorOracle::is_factor, py::arg("word"))
      .def("delta", &words::FactorOracle::delta, py::arg("word"))
      .def("count_factors", &words::FactorOracle::count_factors, py::arg("n"))
      .def("factors_of", &words::FactorOracle::factors_of, py::arg("n"));

  // ---- rauzy -------------------------------------------------------------
  py::enum_<rauzy::SpecialKind>(m, "SpecialKind")
      .value("ordinary", rauzy::SpecialKind::ordinary)
      .value("left_special", rauzy::SpecialKind::left_special)
      .value("right_special", rauzy::SpecialKind::right_special)
      .value("bispecial", rauzy::SpecialKind::bispecial);

  py::class_<rauzy::SpecialClassification>(m, "SpecialClassification")
      .def_readonly("kind", &rauzy::SpecialClassification::kind)
      .def_readonly("left_extensions", &rauzy::SpecialClassification::left_extensions)
      .def_readonly("right_extensions", &rauzy::SpecialClassification::right_extensions);

  m.def("classify_word", &rauzy::classify_word, py::arg("word"), py::arg("oracle"));

  py::class_<rauzy::RauzyEdge>(m, "RauzyEdge")
      .def_readonly("from_word", &rauzy::RauzyEdge::from)
      .def_readonly("to_word", &rauzy::RauzyEdge::to)
      .def_readonly("appended", &rauzy::RauzyEdge::appended)
      .def_readonly("prepended", &rauzy::RauzyEdge::prepended);

  py::class_<rauzy::RauzyGraph>(m, "RauzyGraph")
      .def_readonly("order", &rauzy::RauzyGraph::order)
      .def_readonly("vertices", &rauzy::RauzyGraph::vertices)
      .def_readonly("edges", &rauzy::RauzyGraph::edges)
      .def_readonly("branch_vertex", &rauzy::RauzyGraph::branch_vertex)
      .def_readonly("merge_vertex", &rauzy::RauzyGraph::merge_vertex);

  m.def("build_rauzy", &rauzy::build_rauzy, py::arg("n"), py::arg("oracle"));

  py::class_<rauzy::SpecialWords>(m, "SpecialWords")
      .def_readonly("left", &rauzy::SpecialWords::left)
      .def_readonly("right", &rauzy::SpecialWords::right);

  m.def("special_words", &rauzy::special_words, py::arg("n"), py::arg("oracle"));

  py::class_<rauzy::BispecialLevel>(m, "BispecialLevel")
      .def_readonly("p", &rauzy::BispecialLevel::p)
      .def_readonly("w", &rauzy::BispecialLevel::w)
      .def_readonly("r1", &rauzy::BispecialLevel::r1)
      .def_readonly("r2", &rauzy::BispecialLevel::r2)
      .def("__repr__", [](const rauzy::BispecialLevel& l) {
        return "BispecialLevel(p=" + std::to_string(l.p) + ", w='" + l.w + "')";
      });

  m.def("bispecial_level", &rauzy::bispecial_level, py::arg("p"), py::arg("oracle"));
  m.def("hierarchy_level", &rauzy::hierarchy_level, py::arg("base"), py::arg("n"));
  m.def("phi_encode", &rauzy::phi_encode, py::arg("seq"));
  m.def("phi_decode", &rauzy::phi_decode, py::arg("word"), py::arg("level"));
  m.def("append_loops", &rauzy::append_loops, py::arg("level"), py::arg("seq"));

  py::class_<rauzy::LoopLanguage>(m, "LoopLanguage")
      .def_readonly("level", &rauzy::LoopLanguage::level)
      .def_readonly("n", &rauzy::LoopLanguage::n)
      .def_readonly("sequences", &rauzy::LoopLanguage::sequences);

  m.def("loop_language", &rauzy::loop_language, py::arg("level"), py::arg("n"),
        py::arg("oracle"));

  py::class_<rauzy::BicephalicSet>(m, "BicephalicSet")
      .def_readonly("words", &rauzy::BicephalicSet::words)
      .def_readonly("special_count", &rauzy::BicephalicSet::special_count)
      .def_readonly("specials", &rauzy::BicephalicSet::specials);

  m.def("bicephalic_set", &rauzy::bicephalic_set, py::arg("level"), py::arg("n"),
        py::arg("oracle"));
  m.def("xi_palindrome_prefix", &rauzy::xi_palindrome_prefix, py::arg("n"));
  m.def("export_dot", &rauzy::export_dot, py::arg("graph"));

  // ---- thermo ------------------------------------------------------------
  py::class_<thermo::PotentialParams>(m, "PotentialParams")
      .def_readonly("N", &thermo::PotentialParams::excursion_threshold)
      .def_readonly("A", &thermo::PotentialParams::free_penalty);

  m.def("validate_params", &thermo::validate_params, py::arg("N"), py::arg("A"));
  m.def("potential_value", &thermo::potential_value, py::arg("delta_value"), py::arg("params"));
  m.def("is_return_word", &thermo::is_return_word, py::arg("word"));
  m.def(
      "enumerate_return_words",
      [](std::size_t max_len) { return thermo::enumerate_return_words(max_len); },
      py::arg("max_len"), "Return words of [000] ordered by (length, lexicographic)");

  py::enum_<thermo::Zone>(m, "Zone")
      .value("Free", thermo::Zone::Free)
      .value("Excursion", thermo::Zone::Excursion);

  py::class_<thermo::Accident>(m, "Accident")
      .def_readonly("time", &thermo::Accident::time)
      .def_readonly("depth", &thermo::Accident::depth);

  py::class_<thermo::TrajectoryAnnotation>(m, "TrajectoryAnnotation")
      .def_readonly("word", &thermo::TrajectoryAnnotation::word)
      .def_readonly("deltas", &thermo::TrajectoryAnnotation::deltas)
      .def_readonly("zones", &thermo::TrajectoryAnnotation::zones)
      .def_readonly("accidents", &thermo::TrajectoryAnnotation::accidents)
      .def_readonly("fe_transitions", &thermo::TrajectoryAnnotation::fe_transitions)
      .def_readonly("ef_transitions", &thermo::TrajectoryAnnotation::ef_transitions)
      .def_readonly("entry_bispecials", &thermo::TrajectoryAnnotation::entry_bispecials)
      .def_readonly("exit_words", &thermo::TrajectoryAnnotation::exit_words);

  m.def("annotate_trajectory", &thermo::annotate_trajectory, py::arg("word"), py::arg("params"),
        py::arg("oracle"));
  m.def("birkhoff_sum",
        py::overload_cast<const Word&, const thermo::PotentialParams&,
                          const words::FactorOracle&>(&thermo::birkhoff_sum),
        py::arg("word"), py::arg("params"), py::arg("oracle"));
  m.def("birkhoff_sum",
        py::overload_cast<const thermo::TrajectoryAnnotation&, const thermo::PotentialParams&>(
            &thermo::birkhoff_sum),
        py::arg("annotation"), py::arg("params"));

  py::class_<thermo::PartitionEstimate>(m, "PartitionEstimate")
      .def_readonly("beta", &thermo::PartitionEstimate::beta)
      .def_readonly("params", &thermo::PartitionEstimate::params)
      .def_readonly("max_len", &thermo::PartitionEstimate::max_len)
      .def_readonly("partial_sum", &thermo::PartitionEstimate::partial_sum)
      .def_readonly("num_return_words", &thermo::PartitionEstimate::num_return_words)
      .def_readonly("per_length_counts", &thermo::PartitionEstimate::per_length_counts);

  m.def("lambda_truncated", &thermo::lambda_truncated, py::arg("beta"), py::arg("params"),
        py::arg("max_len"));

  py::class_<thermo::EntryExitWords>(m, "EntryExitWords")
      .def_readonly("entry", &thermo::EntryExitWords::entry)
      .def_readonly("exit", &thermo::EntryExitWords::exit);

  m.def("entry_exit_words", &thermo::entry_exit_words, py::arg("params"), py::arg("oracle"));
  m.def("classify_dw", &thermo::classify_dw, py::arg("word"), py::arg("level"),
        py::arg("params"), py::arg("oracle"));
  m.def("find_dw_member", &thermo::find_dw_member, py::arg("level"), py::arg("params"),
        py::arg("oracle"), py::arg("max_len"));
  m.def("zeta", &thermo::zeta, py::arg("beta"), py::arg("tol") = 1e-12,
        "Riemann zeta; None when the series diverges");

  py::class_<thermo::LevelsPQ>(m, "LevelsPQ")
      .def_readonly("P", &thermo::LevelsPQ::p_level)
      .def_readonly("Q", &thermo::LevelsPQ::q_level)
      .def_readonly("P_bispecial", &thermo::LevelsPQ::p_bispecial)
      .def_readonly("Q_bispecial", &thermo::LevelsPQ::q_bispecial)
      .def_readonly("consistent", &thermo::LevelsPQ::consistent);

  m.def("levels_pq", &thermo::levels_pq, py::arg("params"));

  py::class_<thermo::BoundReport>(m, "BoundReport")
      .def_readonly("beta", &thermo::BoundReport::beta)
      .def_readonly("params", &thermo::BoundReport::params)
      .def_readonly("zeta_beta", &thermo::BoundReport::zeta_beta)
      .def_readonly("zeta_beta_minus_1", &thermo::BoundReport::zeta_beta_minus_1)
      .def_readonly("t0_lower", &thermo::BoundReport::t0_lower)
      .def_readonly("tw_lower", &thermo::BoundReport::tw_lower)
      .def_readonly("tv_scale", &thermo::BoundReport::tv_scale)
      .def_readonly("P", &thermo::BoundReport::P)
      .def_readonly("Q", &thermo::BoundReport::Q)
      .def_readonly("gamma", &thermo::BoundReport::gamma)
      .def_readonly("bound", &thermo::BoundReport::bound)
      .def_readonly("vacuous", &thermo::BoundReport::vacuous);

  m.def("lower_bound", &thermo::lower_bound, py::arg("beta"), py::arg("params"));

  py::class_<thermo::ExclusionEntry>(m, "ExclusionEntry")
      .def_readonly("beta", &thermo::ExclusionEntry::beta)
      .def_readonly("bound", &thermo::ExclusionEntry::bound);

  py::class_<thermo::ExclusionReport>(m, "ExclusionReport")
      .def_readonly("params", &thermo::ExclusionReport::params)
      .def_readonly("entries", &thermo::ExclusionReport::entries)
      .def_readonly("lambda_sample_betas", &thermo::ExclusionReport::lambda_sample_betas)
      .def_readonly("lambda_sample_values", &thermo::ExclusionReport::lambda_sample_values)
      .def_readonly("lambda_monotone_decreasing",
                    &thermo::ExclusionReport::lambda_monotone_decreasing)
      .def_readonly("excluded", &thermo::ExclusionReport::excluded);

  m.def("beta_c_exclusion", &thermo::beta_c_exclusion, py::arg("params"), py::arg("betas"));
  m.def("hofbauer_beta_c", &thermo::hofbauer_beta_c, py::arg("A"));

  // ---- verify ------------------------------------------------------------
  py::class_<verify::Failure>(m, "VerifyFailure")
      .def_readonly("case_id", &verify::Failure::case_id)
      .def_readonly("expected", &verify::Failure::expected)
      .def_readonly("got", &verify::Failure::got);

  py::class_<verify::Report>(m, "VerifyReport")
      .def_readonly("suite", &verify::Report::suite)
      .def_readonly("cases_run", &verify::Report::cases_run)
      .def_readonly("failures", &verify::Report::failures)
      .def_readonly("failures_total", &verify::Report::failures_total)
      .def_readonly("elapsed_seconds", &verify::Report::elapsed_seconds)
      .def("passed", &verify::Report::passed);

  m.def("verify_suite_names", &verify::suite_names);
  m.def("run_verify_suite", &verify::run_suite, py::arg("suite"));
}
