#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "symspec/cayley.hpp"
#include "symspec/cli.hpp"
#include "symspec/families.hpp"
#include "symspec/io.hpp"
#include "symspec/numeric.hpp"
#include "symspec/structure.hpp"
#include "symspec/verify.hpp"

namespace py = pybind11;
using namespace symspec;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string dump(const nlohmann::json& j) { return j.dump(); }

py::array_t<double> to_numpy(const GroupFunction& f) {
  // Shape + pointer without a base handle copies the data.
  return py::array_t<double>(std::vector<py::ssize_t>{static_cast<py::ssize_t>(f.size())}, f.values().data());
}

GroupFunction from_numpy(int degree, py::array_t<double, py::array::c_style | py::array::forcecast> values) {
  require(values.ndim() == 1, "values must be one-dimensional");
  std::vector<double> v(values.data(), values.data() + values.size());
  return GroupFunction(degree, std::move(v));
}

py::array_t<double> matrix_to_numpy(const Eigen::MatrixXd& m) {
  py::array_t<double> out({m.rows(), m.cols()});
  auto r = out.mutable_unchecked<2>();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return out;
}

DensityConvention convention(const std::string& text) { return parse_convention(text); }

}  // namespace

PYBIND11_MODULE(_symspec, m) {
  m.doc() = "Native core of symspec";
  py::register_exception<Error>(m, "SymspecError", PyExc_ValueError);
  py::register_exception<cli::UsageError>(m, "UsageError", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::vector<int>& one_based) {
             std::vector<int> images;
             for (int v : one_based) images.push_back(v - 1);
             return Permutation::from_images(images);
           }),
           py::arg("images"), "From 1-based one-line notation.")
      .def_static("parse", &parse_permutation, py::arg("text"), py::arg("degree") = 0)
      .def_static("identity", &Permutation::identity)
      .def_static("unrank", &unrank, py::arg("rank"), py::arg("degree"))
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images",
                             [](const Permutation& p) {
                               std::vector<int> out;
                               for (auto v : p.images()) out.push_back(v + 1);
                               return out;
                             })
      .def("rank", [](const Permutation& p) { return rank(p); })
      .def("sign", [](const Permutation& p) { return sign(p); })
      .def("inverse", &Permutation::inverse)
      .def("cycle_type", &Permutation::cycle_type)
      .def("__mul__", [](const Permutation& a, const Permutation& b) { return compose(a, b); })
      .def("__call__", [](const Permutation& p, int x) { return p(x - 1) + 1; })
      .def("__eq__", &Permutation::operator==)
      .def("__hash__", [](const Permutation& p) { return static_cast<std::size_t>(rank(p)) ^ (p.degree() << 24); })
      .def("__str__", [](const Permutation& p) { return to_string(p); })
      .def("__repr__", [](const Permutation& p) { return "Permutation(\"" + to_string(p) + "\")"; });

  py::class_<GroupFunction>(m, "GroupFunction")
      .def(py::init(&from_numpy), py::arg("degree"), py::arg("values"))
      .def_static("dictator",
                  [](int n, int i, int j) { return GroupFunction::dictator(n, i - 1, j - 1); })
      .def_static("read", &read_function_file)
      .def_static("parse", &parse_function_text)
      .def_property_readonly("degree", &GroupFunction::degree)
      .def_property_readonly("values", &to_numpy)
      .def("__len__", &GroupFunction::size)
      .def("format", &format_function);

  py::class_<SetFamily>(m, "SetFamily")
      .def(py::init([](int n, const std::vector<Rank>& ranks, const std::string& conv) {
             return SetFamily(n, ranks, convention(conv));
           }),
           py::arg("degree"), py::arg("ranks"), py::arg("convention") = "Sn")
      .def_static("read", &read_set_file)
      .def_static("parse", &parse_set_text)
      .def_property_readonly("degree", &SetFamily::degree)
      .def_property_readonly("convention", [](const SetFamily& s) { return to_string(s.convention()); })
      .def_property_readonly("ranks", &SetFamily::members)
      .def("permutations", &SetFamily::permutations)
      .def("measure", [](const SetFamily& s) { return s.measure(); })
      .def("measure_in", [](const SetFamily& s, const std::string& c) { return s.measure(convention(c)); })
      .def("indicator", &SetFamily::indicator)
      .def("inverse", &SetFamily::inverse)
      .def("__len__", &SetFamily::size)
      .def("__contains__", [](const SetFamily& s, const Permutation& p) { return s.contains(p); })
      .def("format", &format_set);

  m.def("normalized_form", [](const GroupFunction& f) { return matrix_to_numpy(normalized_form(f).a); });
  m.def("level_project", [](const GroupFunction& f, int d) { return level_project(f, d); }, py::arg("f"),
        py::arg("d"));
  m.def("isotypic_report_json", [](const GroupFunction& f) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : isotypic_report(f))
      rows.push_back({{"lambda", r.lambda.parts}, {"transpose", r.transpose.parts}, {"level", r.level},
                      {"reduced_level", r.reduced_level}, {"dim", r.dim}, {"weight", r.weight}});
    return dump(rows);
  });
  m.def("spectral_report_json", [](const GroupFunction& f, int d) { return dump(to_json(spectral_report(f, d))); },
        py::arg("f"), py::arg("max_level") = 1);
  m.def("globalness_json", [](const SetFamily& a, int t) { return dump(to_json(globalness(a, t))); }, py::arg("a"),
        py::arg("t") = 1);
  m.def("build_family", [](const std::string& spec, int n) { return build_family(parse_family_spec(spec, n)); },
        py::arg("spec"), py::arg("n"));
  m.def("measure_family_json",
        [](const std::string& spec, int n) { return dump(to_json(measure_family(parse_family_spec(spec, n)))); },
        py::arg("spec"), py::arg("n"));
  m.def("is_product_free_json",
        [](const SetFamily& a, const SetFamily& b, const SetFamily& c) { return dump(to_json(is_product_free(a, b, c))); });
  m.def(
      "max_product_free_json",
      [](int n, const std::string& mode, std::uint64_t seed, std::uint64_t budget) {
        MaxPFOptions opt;
        opt.mode = mode == "heuristic" ? SearchMode::heuristic : SearchMode::exact;
        require(mode == "exact" || mode == "heuristic", "mode must be exact or heuristic");
        opt.seed = seed;
        opt.budget = budget;
        return dump(to_json(max_product_free(n, opt)));
      },
      py::arg("n"), py::arg("mode") = "exact", py::arg("seed") = cli::kDefaultSeed, py::arg("budget") = 0);
  m.def(
      "verify_json",
      [](int n, const std::string& suite, std::uint64_t seed) {
        VerifyOptions opt;
        opt.degree = n;
        opt.suite = suite;
        opt.seed = seed;
        return dump(to_json(run_verify(opt)));
      },
      py::arg("n") = 5, py::arg("suite") = "core", py::arg("seed") = cli::kDefaultSeed);
  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"symspec"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end in-process; returns (exit_code, stdout, stderr).");
  m.def("set_thread_budget", &set_thread_budget);
  m.def("thread_budget", &thread_budget);
}
