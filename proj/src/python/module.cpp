#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "casimir/asymptotics.hpp"
#include "casimir/errors.hpp"
#include "casimir/fit.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/special_functions.hpp"
#include "casimir/thermodynamics.hpp"
#include "casimir/units.hpp"

namespace py = pybind11;
using namespace casimir;

namespace {

DimensionlessState state_of(const MaterialModel& m, double a, double T) { return make_state(m, a, T); }

asymptotics::AsymptoticInput asym_input(double eps0, double mu0, double tau, double a, double kappa_m,
                                        bool dimensionless) {
  return {eps0, mu0, tau, a, kappa_m,
          dimensionless ? asymptotics::UnitMode::dimensionless : asymptotics::UnitMode::SI};
}

template <double (*Fn)(const asymptotics::AsymptoticInput&)>
void def_asymptotic(py::module_& m, const char* name, const char* doc) {
  m.def(
      name,
      [](double eps0, double mu0, double tau, double a, double kappa_m, bool dimensionless) {
        return Fn(asym_input(eps0, mu0, tau, a, kappa_m, dimensionless));
      },
      py::arg("eps0"), py::arg("mu0"), py::arg("tau"), py::arg("a"), py::arg("kappa_m") = 0.0,
      py::arg("dimensionless") = false, doc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Casimir free energy, pressure and entropy between magnetodielectric plates";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<ModelError> model_error(m, "ModelError", PyExc_ValueError);
  static py::exception<StepUnderflow> step_underflow(m, "StepUnderflow", PyExc_ArithmeticError);
  static py::exception<DegenerateGrid> degenerate_grid(m, "DegenerateGrid", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    } catch (const ModelError& e) {
      py::set_error(model_error, e.what());
    } catch (const StepUnderflow& e) {
      py::set_error(step_underflow, e.what());
    } catch (const DegenerateGrid& e) {
      py::set_error(degenerate_grid, e.what());
    }
  });

  // special functions
  m.def("polylog", [](int n, double z) {
    if (n != 2 && n != 3) throw DomainError("polylog order must be 2 or 3");
    return polylog(static_cast<PolyOrder>(n), z);
  }, py::arg("n"), py::arg("z"));
  m.def("li2", &li2, py::arg("z"));
  m.def("li3", &li3, py::arg("z"));
  m.def("zeta3", &zeta3);

  // units
  m.attr("HBAR") = constants::hbar;
  m.attr("C") = constants::c;
  m.attr("K_B") = constants::k_B;
  m.def("tau_of", &tau_of, py::arg("a"), py::arg("T"));
  m.def("temperature_of", &temperature_of, py::arg("a"), py::arg("tau"));
  m.def("kappa_of", &kappa_of, py::arg("a"), py::arg("omega_m"));
  m.def("si_conductivity_to_gaussian", &si_conductivity_to_gaussian, py::arg("sigma_si"));
  m.def("gaussian_conductivity_to_si", &gaussian_conductivity_to_si, py::arg("sigma_gaussian"));

  // materials
  py::class_<MaterialModel>(m, "MaterialModel")
      .def_static("constant", &MaterialModel::constant, py::arg("eps0"), py::arg("mu0"))
      .def_static("debye", &MaterialModel::debye, py::arg("eps0"), py::arg("mu0"), py::arg("omega_m"))
      .def(
          "with_dc",
          [](const MaterialModel& self, double sigma_ref, double b) { return self.with_dc({sigma_ref, b}); },
          py::arg("sigma_ref"), py::arg("b"), "Add a dc conductivity sigma_ref exp(-b/T), Gaussian units (1/s)")
      .def("without_dc", &MaterialModel::without_dc)
      .def("swapped", &MaterialModel::swapped)
      .def_property_readonly("eps0", &MaterialModel::eps0)
      .def_property_readonly("mu0", &MaterialModel::mu0)
      .def_property_readonly("omega_m", [](const MaterialModel& self) { return self.omega_m(); })
      .def_property_readonly("conducting", &MaterialModel::conducting)
      .def_property_readonly("is_debye", &MaterialModel::is_debye)
      .def("__repr__", &MaterialModel::describe);
  m.def("beta_dc", &beta_dc, py::arg("model"), py::arg("T"));
  m.def("sigma_ref_for_beta", &sigma_ref_for_beta, py::arg("beta"), py::arg("T_ref"), py::arg("b"));
  m.def("validity_ratio", &validity_ratio, py::arg("model"), py::arg("l"), py::arg("T"));

  // engine
  py::class_<EngineSettings>(m, "EngineSettings")
      .def(py::init<>())
      .def_readwrite("quad_rel_tol", &EngineSettings::quad_rel_tol)
      .def_readwrite("panel_width", &EngineSettings::panel_width)
      .def_readwrite("y_cutoff_offset", &EngineSettings::y_cutoff_offset)
      .def_readwrite("matsubara_rel_tol", &EngineSettings::matsubara_rel_tol)
      .def_readwrite("matsubara_consecutive", &EngineSettings::matsubara_consecutive)
      .def_readwrite("l_max_cap", &EngineSettings::l_max_cap)
      .def_readwrite("fixed_l_count", &EngineSettings::fixed_l_count)
      .def_readwrite("gauss_points", &EngineSettings::gauss_points);
  py::class_<DiffSettings>(m, "DiffSettings")
      .def(py::init<>())
      .def_readwrite("rel_step", &DiffSettings::rel_step)
      .def_readwrite("richardson_levels", &DiffSettings::richardson_levels)
      .def_readwrite("min_abs_step", &DiffSettings::min_abs_step);
  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("l_used", &ConvergenceReport::l_used)
      .def_readonly("truncation_estimate", &ConvergenceReport::truncation_estimate)
      .def_readonly("quad_error_estimate", &ConvergenceReport::quad_error_estimate)
      .def_readonly("hit_cap", &ConvergenceReport::hit_cap)
      .def_readonly("diagnostics", &ConvergenceReport::diagnostics);
  py::class_<EngineResult>(m, "EngineResult")
      .def_readonly("value", &EngineResult::value)
      .def_readonly("report", &EngineResult::report)
      .def("__float__", [](const EngineResult& r) { return r.value; });
  py::class_<EntropyResult>(m, "EntropyResult")
      .def_readonly("value", &EntropyResult::value)
      .def_readonly("error_estimate", &EntropyResult::error_estimate)
      .def_readonly("report", &EntropyResult::report)
      .def("__float__", [](const EntropyResult& r) { return r.value; });
  py::class_<DcEntropyDecomposition>(m, "DcEntropyDecomposition")
      .def_readonly("S_plain", &DcEntropyDecomposition::S_plain)
      .def_readonly("jump_term", &DcEntropyDecomposition::jump_term)
      .def_readonly("dQ_dT", &DcEntropyDecomposition::dQ_dT)
      .def_readonly("total", &DcEntropyDecomposition::total);

  const EngineSettings defaults;
  const DiffSettings diff_defaults;
  m.def("reflection_tm", &reflection_tm, py::arg("eps"), py::arg("mu"), py::arg("zeta"), py::arg("y"));
  m.def("reflection_te", &reflection_te, py::arg("eps"), py::arg("mu"), py::arg("zeta"), py::arg("y"));
  m.def(
      "free_energy",
      [](const MaterialModel& model, double a, double T, const EngineSettings& s) {
        return free_energy(model, state_of(model, a, T), s);
      },
      py::arg("model"), py::arg("a"), py::arg("T"), py::arg("settings") = defaults,
      "Free energy per unit area (J/m^2)");
  m.def(
      "pressure",
      [](const MaterialModel& model, double a, double T, const EngineSettings& s) {
        return pressure(model, state_of(model, a, T), s);
      },
      py::arg("model"), py::arg("a"), py::arg("T"), py::arg("settings") = defaults, "Pressure (Pa)");
  m.def("zero_point_energy", &zero_point_energy, py::arg("model"), py::arg("a"), py::arg("settings") = defaults);
  m.def("zero_T_pressure", &zero_T_pressure, py::arg("model"), py::arg("a"), py::arg("settings") = defaults);
  m.def(
      "free_energy_l0",
      [](const MaterialModel& model, double a, double T) { return free_energy_l0(model, state_of(model, a, T)); },
      py::arg("model"), py::arg("a"), py::arg("T"));
  m.def(
      "thermal_correction",
      [](const MaterialModel& model, double a, double T, const EngineSettings& s) {
        return thermal_correction(model, state_of(model, a, T), s);
      },
      py::arg("model"), py::arg("a"), py::arg("T"), py::arg("settings") = defaults);
  m.def(
      "q_difference",
      [](const MaterialModel& dc, const MaterialModel& plain, double a, double T, const EngineSettings& s) {
        return q_difference(dc, plain, state_of(plain, a, T), s);
      },
      py::arg("model_dc"), py::arg("model_plain"), py::arg("a"), py::arg("T"), py::arg("settings") = defaults);

  // thermodynamics
  m.def("entropy", &entropy, py::arg("model"), py::arg("a"), py::arg("T"), py::arg("settings") = defaults,
        py::arg("diff") = diff_defaults, "Entropy per unit area (J/(K m^2))");
  m.def("pressure_consistency", &pressure_consistency, py::arg("model"), py::arg("a"), py::arg("T"),
        py::arg("settings") = defaults, py::arg("diff") = diff_defaults);
  m.def("nernst_limit_dc", &nernst_limit_dc, py::arg("a"), py::arg("eps0"));
  m.def("entropy_dc_decomposition", &entropy_dc_decomposition, py::arg("model_dc"), py::arg("model_plain"),
        py::arg("a"), py::arg("T"), py::arg("settings") = defaults, py::arg("diff") = diff_defaults);

  // fits
  m.def(
      "fit_leading_coefficient",
      [](const std::vector<double>& x, const std::vector<double>& y, int power, int corrections) {
        return fit_leading_coefficient(x, y, power, corrections).coefficient;
      },
      py::arg("x"), py::arg("y"), py::arg("power"), py::arg("correction_terms") = 1);

  auto as = m.def_submodule("asymptotics", "Low-temperature closed forms");
  def_asymptotic<&asymptotics::delta_f_leading>(as, "delta_f_leading", "Leading thermal free-energy correction");
  def_asymptotic<&asymptotics::entropy_leading>(as, "entropy_leading", "Leading T^2 entropy");
  def_asymptotic<&asymptotics::delta_p_leading>(as, "delta_p_leading", "Leading thermal pressure correction");
  def_asymptotic<&asymptotics::delta_f_nlo>(as, "delta_f_nlo", "Free-energy correction to next order");
  def_asymptotic<&asymptotics::entropy_nlo>(as, "entropy_nlo", "Entropy to next order");
  def_asymptotic<&asymptotics::delta_f_debye>(as, "delta_f_debye", "Debye-permeability free-energy correction");
  def_asymptotic<&asymptotics::delta_p_debye>(as, "delta_p_debye", "Debye-permeability pressure correction");
  def_asymptotic<&asymptotics::entropy_debye>(as, "entropy_debye", "Debye-permeability entropy");
  as.def("entropy_leading_coefficient", &asymptotics::entropy_leading_coefficient, py::arg("eps0"), py::arg("mu0"));
  as.def("entropy_debye_coefficient", &asymptotics::entropy_debye_coefficient, py::arg("mu0"), py::arg("omega_m"),
         py::arg("a"));
}
