#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cauchywell/cauchy_operator.hpp"
#include "cauchywell/eigensolver.hpp"
#include "cauchywell/error.hpp"
#include "cauchywell/galerkin.hpp"
#include "cauchywell/pipeline.hpp"
#include "cauchywell/specfun.hpp"
#include "cauchywell/spectrum.hpp"

namespace py = pybind11;
using namespace cauchywell;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

ElementMethod parse_method(const std::string& m) {
  if (m == "analytic") return ElementMethod::Analytic;
  if (m == "quadrature") return ElementMethod::Quadrature;
  throw ConfigError("method must be 'analytic' or 'quadrature'");
}

TrigCandidate parse_candidate(const std::string& w) {
  if (w == "cos-half") return TrigCandidate::CosHalf;
  if (w == "sin-pi") return TrigCandidate::SinPi;
  throw ConfigError("candidate must be 'cos-half' or 'sin-pi'");
}

Array to_array(const Matrix& m) {
  const auto n = static_cast<py::ssize_t>(m.size());
  Array out({n, n});
  std::copy(m.row(0), m.row(0) + n * n, out.mutable_data());
  return out;
}

Array to_array(const std::vector<double>& v) {
  Array out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(v.size())});
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

Matrix from_array(const Array& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw ConfigError("expected a square matrix");
  Matrix m(static_cast<std::size_t>(a.shape(0)));
  std::copy(a.data(), a.data() + a.size(), m.row(0));
  return m;
}

template <class F>
py::object vectorize(F f, const py::object& x) {
  if (py::isinstance<py::float_>(x) || py::isinstance<py::int_>(x)) return py::float_(f(x.cast<double>()));
  const Array in = x.cast<Array>();
  Array out(std::vector<py::ssize_t>(in.shape(), in.shape() + in.ndim()));
  for (py::ssize_t i = 0; i < in.size(); ++i) out.mutable_data()[i] = f(in.data()[i]);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Galerkin spectrum of the Cauchy operator in the interval (-1, 1)";
  m.attr("__version__") = "1.0.0";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);
  py::register_exception<EigenError>(m, "EigenError", PyExc_ArithmeticError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_RuntimeError);

  m.def("si", [](const py::object& x) { return vectorize([](double v) { return specfun::si(v); }, x); },
        py::arg("x"), "Sine integral Si(x).");
  m.def("ci", [](const py::object& x) { return vectorize([](double v) { return specfun::ci(v); }, x); },
        py::arg("x"), "Cosine integral Ci(x), x > 0.");
  m.def("cin", [](const py::object& x) { return vectorize([](double v) { return specfun::cin(v); }, x); },
        py::arg("x"), "Entire cosine integral Cin(x).");

  m.def("apply_even_basis",
        [](int k, const py::object& x) {
          return vectorize([k](double v) { return apply_even_basis(k, v); }, x);
        },
        py::arg("k"), py::arg("x"), "A cos((2k+1) pi x/2) for |x| < 1.");
  m.def("apply_odd_basis",
        [](int k, const py::object& x) {
          return vectorize([k](double v) { return apply_odd_basis(k, v); }, x);
        },
        py::arg("k"), py::arg("x"), "A sin(k pi x) for |x| < 1, k >= 1.");

  m.def("element",
        [](const std::string& parity, int k, int i) { return element(parse_parity(parity), k, i); },
        py::arg("parity"), py::arg("k"), py::arg("i"),
        "Galerkin element by quadrature (analytic on the diagonal).");
  m.def("element_analytic",
        [](const std::string& parity, int k, int i) {
          return element_analytic(parse_parity(parity), k, i);
        },
        py::arg("parity"), py::arg("k"), py::arg("i"));

  m.def("assemble",
        [](const std::string& parity, std::size_t n, const std::string& method, unsigned threads) {
          AssemblyOptions opts;
          opts.method = parse_method(method);
          opts.threads = threads;
          Matrix mat;
          {
            py::gil_scoped_release release;
            mat = assemble(parse_parity(parity), n, opts).to_matrix();
          }
          return to_array(mat);
        },
        py::arg("parity"), py::arg("n"), py::arg("method") = "analytic", py::arg("threads") = 0,
        "n x n Galerkin block of one parity as a numpy array.");

  m.def("eigh",
        [](const Array& a) {
          const Matrix mat = from_array(a);
          Decomposition d;
          {
            py::gil_scoped_release release;
            d = eigh_dense(mat);
          }
          return py::make_tuple(to_array(d.values),
                                to_array(d.vectors));
        },
        py::arg("a"), "Ascending eigenvalues and eigenvectors (rows) of a symmetric matrix.");

  m.def("solve_parity",
        [](const std::string& parity, std::size_t size, std::size_t count) {
          std::vector<EigenPair> pairs;
          {
            py::gil_scoped_release release;
            pairs = solve_parity(parse_parity(parity), size, count, false);
          }
          std::vector<double> v;
          for (const auto& p : pairs) v.push_back(p.value);
          return to_array(v);
        },
        py::arg("parity"), py::arg("size"), py::arg("count"));

  m.def("spectrum",
        [](std::size_t size, std::size_t levels) {
          SpectrumReport r;
          {
            py::gil_scoped_release release;
            r = solve_spectrum(size, levels);
          }
          py::list out;
          for (std::size_t i = 0; i < r.levels.size(); ++i) {
            const auto& l = r.levels[i];
            py::dict d;
            d["n"] = l.n;
            d["energy"] = l.energy;
            d["parity"] = std::string(to_string(l.parity));
            d["block_size"] = l.block_size;
            d["converged"] = l.converged;
            d["asymptotic"] = r.asymptotic[i].asymptotic;
            d["rel_error"] = r.asymptotic[i].rel_error;
            out.append(d);
          }
          return out;
        },
        py::arg("size"), py::arg("levels"), "Merged lowest levels of both parities.");

  m.def("eigenfunction",
        [](std::size_t size, int level, std::size_t points) {
          SampledFunction f;
          {
            py::gil_scoped_release release;
            f = synthesize(eigenpair_for_level(size, level), uniform_grid(points), level);
          }
          return py::make_tuple(to_array(f.grid),
                                to_array(f.values));
        },
        py::arg("size"), py::arg("level"), py::arg("points") = 2001,
        "(x, psi) of merged level `level` on a uniform grid over [-1, 1].");

  m.def("ground_state_approximant",
        [](const py::object& x) { return vectorize(ground_state_approximant, x); }, py::arg("x"));

  m.def("disprove",
        [](const std::string& which, const std::vector<double>& grid) {
          const auto r = trig_disproof_residual(parse_candidate(which), grid);
          return py::make_tuple(r.best_fit_energy,
                                to_array(r.residuals));
        },
        py::arg("which"), py::arg("grid"),
        "(best-fit energy, residuals) of cos(pi x/2) or sin(pi x) as a would-be eigenfunction.");
}
