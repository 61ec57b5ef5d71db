#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <utility>

#include "fsusy/errors.hpp"
#include "fsusy/fractional_system.hpp"
#include "fsusy/graded_rep.hpp"
#include "fsusy/report.hpp"
#include "fsusy/spectra.hpp"
#include "fsusy/structure_functions.hpp"

namespace py = pybind11;
using namespace fsusy;

namespace {

// numpy has no portable extended-precision complex type; hand out complex128.
Eigen::MatrixXcd to_numpy(const Matrix& m) { return m.cast<std::complex<double>>(); }

std::vector<double> to_double(const RealVector& v) { return {v.begin(), v.end()}; }

py::dict record_dict(const Record& r) {
  py::dict d;
  d["name"] = r.name;
  d["identity"] = r.identity;
  d["residual"] = r.residual;
  d["tolerance"] = r.tolerance;
  d["pass"] = r.pass;
  d["subspace"] = to_string(r.subspace);
  return d;
}

py::list records_list(const Fragment& records) {
  py::list out;
  for (const auto& r : records) out.append(record_dict(r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_fsusy, m) {
  m.doc() = "Fractional supersymmetric quantum mechanics on truncated Z_k-graded Fock spaces.";

  auto config_error = py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  auto construction_error = py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);
  py::register_exception<RepresentationInvalid>(m, "RepresentationInvalid", construction_error.ptr());
  py::register_exception<FactorizationBroken>(m, "FactorizationBroken", construction_error.ptr());
  py::register_exception<ProjectorDegenerate>(m, "ProjectorDegenerate", construction_error.ptr());
  (void)config_error;

  py::class_<StructureFunctionSet>(m, "StructureFunctionSet")
      .def_static("affine", [](int k, double a, double b) { return StructureFunctionSet::affine(k, a, b); },
                  py::arg("k"), py::arg("a"), py::arg("b"))
      .def_static("cyclic",
                  [](const std::vector<double>& c) {
                    return StructureFunctionSet::cyclic(std::vector<Real>(c.begin(), c.end()));
                  },
                  py::arg("constants"))
      .def_static("table",
                  [](int k, const std::map<std::pair<int, long>, double>& values) {
                    std::map<std::pair<int, long>, Real> converted(values.begin(), values.end());
                    return StructureFunctionSet::table(k, std::move(converted));
                  },
                  py::arg("k"), py::arg("values"))
      .def_static("load_table",
                  [](const std::string& path, int k) { return load_table(std::filesystem::path(path), k); },
                  py::arg("path"), py::arg("k"))
      .def_property_readonly("k", &StructureFunctionSet::k)
      .def("__call__", [](const StructureFunctionSet& f, int s, long n) { return static_cast<double>(f(s, n)); })
      .def("__repr__", &StructureFunctionSet::describe);

  m.def("grade_of", &grade_of, py::arg("n"), py::arg("k"));
  m.def("build_ladder_profile",
        [](const StructureFunctionSet& f, std::size_t dim) { return to_double(build_ladder_profile(f, dim)); },
        py::arg("f"), py::arg("D"));

  py::class_<GradedRep>(m, "GradedRep")
      .def_readonly("k", &GradedRep::k)
      .def_readonly("dim", &GradedRep::dim)
      .def_readonly("interior", &GradedRep::interior)
      .def_property_readonly("q", [](const GradedRep& r) { return std::complex<double>(r.q); })
      .def_property_readonly("x_minus", [](const GradedRep& r) { return to_numpy(r.x_minus); })
      .def_property_readonly("x_plus", [](const GradedRep& r) { return to_numpy(r.x_plus); })
      .def_property_readonly("number", [](const GradedRep& r) { return to_numpy(r.number); })
      .def_property_readonly("grading", [](const GradedRep& r) { return to_numpy(r.grading); })
      .def_property_readonly("projectors",
                             [](const GradedRep& r) {
                               std::vector<Eigen::MatrixXcd> out;
                               for (const auto& p : r.projectors) out.push_back(to_numpy(p));
                               return out;
                             })
      .def_property_readonly("ladder", [](const GradedRep& r) { return to_double(r.ladder); });

  m.def("build_rep", &build_rep, py::arg("f"), py::arg("D"));
  m.def("verify_wk_relations",
        [](const GradedRep& rep, const StructureFunctionSet& f, double tol) {
          return records_list(verify_wk_relations(rep, f, tol));
        },
        py::arg("rep"), py::arg("f"), py::arg("tol") = kDefaultTolerance);

  py::class_<FractionalSystem>(m, "FractionalSystem")
      .def_readonly("rep", &FractionalSystem::rep)
      .def_property_readonly("k", &FractionalSystem::k)
      .def_property_readonly("q_minus", [](const FractionalSystem& s) { return to_numpy(s.q_minus); })
      .def_property_readonly("q_plus", [](const FractionalSystem& s) { return to_numpy(s.q_plus); })
      .def_property_readonly("hamiltonian", [](const FractionalSystem& s) { return to_numpy(s.hamiltonian); })
      .def("partner", [](const FractionalSystem& s, int label) { return to_numpy(s.partner(label)); },
           py::arg("s"));

  py::class_<Subsystem>(m, "Subsystem")
      .def_readonly("s", &Subsystem::s)
      .def_property_readonly("x_minus", [](const Subsystem& s) { return to_numpy(s.x_minus); })
      .def_property_readonly("x_plus", [](const Subsystem& s) { return to_numpy(s.x_plus); })
      .def_property_readonly("q_minus", [](const Subsystem& s) { return to_numpy(s.q_minus); })
      .def_property_readonly("q_plus", [](const Subsystem& s) { return to_numpy(s.q_plus); })
      .def_property_readonly("h", [](const Subsystem& s) { return to_numpy(s.h); });

  m.def("build_system", py::overload_cast<const StructureFunctionSet&, std::size_t>(&build_system), py::arg("f"),
        py::arg("D"));
  m.def("build_subsystem", &build_subsystem, py::arg("system"), py::arg("s"));
  m.def("build_subsystems", &build_subsystems, py::arg("system"));
  m.def("verify_fractional_relations",
        [](const FractionalSystem& sys, double tol) { return records_list(verify_fractional_relations(sys, tol)); },
        py::arg("system"), py::arg("tol") = kDefaultTolerance);
  m.def("verify_superposition",
        [](const FractionalSystem& sys, double tol) {
          const auto subs = build_subsystems(sys);
          Fragment all;
          for (const auto& sub : subs) extend(all, verify_subsystem(sys, sub, tol));
          extend(all, verify_superposition(sys, subs, tol));
          return records_list(all);
        },
        py::arg("system"), py::arg("tol") = kDefaultTolerance);

  m.def("classify", [](const StructureFunctionSet& f) {
    const AlgebraClass cls = classify(f);
    py::dict d;
    d["tag"] = to_string(cls.tag);
    d["potential"] = cls.potential;
    d["family"] = cls.family;
    if (cls.params) {
      d["affine"] = py::make_tuple(static_cast<double>(cls.params->a), static_cast<double>(cls.params->b));
    } else {
      d["affine"] = py::none();
    }
    return d;
  });

  m.def("_verify_json",
        [](int k, std::size_t dim, const std::string& family, const std::vector<double>& params,
           const std::string& table, double tol) {
          RunConfig c;
          c.k = k;
          c.dim = dim;
          c.family = family == "cyclic" ? FamilyKind::Cyclic
                     : family == "table" ? FamilyKind::Table
                                         : FamilyKind::Affine;
          if (family != "affine" && family != "cyclic" && family != "table") {
            throw ConfigError("unknown family '" + family + "'");
          }
          c.params = params;
          c.table_path = table;
          c.tolerance = tol;
          return nlohmann::json(run_verify(c)).dump();
        });
}
