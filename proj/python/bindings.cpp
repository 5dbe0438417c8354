#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lqu/analytic.hpp"
#include "lqu/cli.hpp"
#include "lqu/density_io.hpp"
#include "lqu/errors.hpp"
#include "lqu/linalg.hpp"
#include "lqu/lqu.hpp"
#include "lqu/states.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using CArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

lqu::ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
    throw std::invalid_argument("expected a square 2-d array");
  }
  const auto n = static_cast<std::size_t>(a.shape(0));
  return lqu::ComplexMatrix(n, std::vector<lqu::Complex>(a.data(), a.data() + n * n));
}

CArray to_array(const lqu::ComplexMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  CArray out({n, n});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

CArray to_vector(const std::vector<lqu::Complex>& v) {
  CArray out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

lqu::DensityMatrix to_density(const CArray& a) { return lqu::DensityMatrix::from_matrix(to_matrix(a)); }

lqu::PureState to_pure(const CArray& a) {
  if (a.ndim() != 1) throw std::invalid_argument("expected a 1-d amplitude vector");
  const auto n = static_cast<std::size_t>(a.shape(0));
  int qubits = 0;
  while ((std::size_t{1} << qubits) < n) ++qubits;
  return lqu::PureState(qubits, std::vector<lqu::Complex>(a.data(), a.data() + n));
}

py::array_t<double> m_to_array(const lqu::CorrelationMatrix3& m) {
  py::array_t<double> out({3, 3});
  auto r = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < 3; ++i) {
    for (py::ssize_t j = 0; j < 3; ++j) r(i, j) = m.entries[i][j];
  }
  return out;
}

lqu::Pauli parse_pauli(const py::object& p) {
  if (py::isinstance<py::str>(p)) {
    const auto s = p.cast<std::string>();
    if (s == "x" || s == "X") return lqu::Pauli::X;
    if (s == "y" || s == "Y") return lqu::Pauli::Y;
    if (s == "z" || s == "Z") return lqu::Pauli::Z;
    throw lqu::Error(lqu::ErrorKind::IndexOutOfRange, "pauli '" + s + "'");
  }
  const int idx = p.cast<int>();
  if (idx < 1 || idx > 3) throw lqu::Error(lqu::ErrorKind::IndexOutOfRange, "pauli index " + std::to_string(idx));
  return static_cast<lqu::Pauli>(idx);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Local quantum uncertainty for N-qubit density matrices";

  py::register_exception<lqu::Error>(m, "LquError", PyExc_ValueError);

  // linear algebra
  m.def(
      "hermitian_eig",
      [](const CArray& a, double tol) {
        const auto eig = lqu::hermitian_eig(to_matrix(a), tol);
        return py::make_tuple(py::array_t<double>(eig.values.size(), eig.values.data()), to_array(eig.vectors));
      },
      "m"_a, "tol"_a = lqu::kDefaultHermitianTol,
      "Ascending eigenvalues and eigenvector columns of a Hermitian matrix.");
  m.def(
      "matrix_sqrt_psd", [](const CArray& a, double neg_tol) { return to_array(lqu::matrix_sqrt_psd(to_matrix(a), neg_tol)); },
      "m"_a, "neg_tol"_a = lqu::kDefaultNegTol);
  m.def("kron", [](const CArray& a, const CArray& b) { return to_array(lqu::kron(to_matrix(a), to_matrix(b))); });
  m.def("trace_product", [](const CArray& a, const CArray& b, const CArray& c, const CArray& d) {
    return lqu::trace_product(to_matrix(a), to_matrix(b), to_matrix(c), to_matrix(d));
  });

  // states
  m.def("families", [] {
    std::vector<std::string> names;
    for (auto f : {lqu::Family::Ghz3, lqu::Family::W3, lqu::Family::Kay, lqu::Family::Ghz4, lqu::Family::W4,
                   lqu::Family::Dicke24, lqu::Family::Singlet4, lqu::Family::Cluster4, lqu::Family::Chi4,
                   lqu::Family::Random}) {
      names.emplace_back(lqu::family_name(f));
    }
    return names;
  });
  m.def(
      "pure_state", [](const std::string& family) { return to_vector(lqu::pure_state(lqu::parse_family(family)).amplitudes()); },
      "family"_a, "Normalized amplitudes; qubit 0 is the most significant bit.");
  m.def(
      "mix_white_noise",
      [](const CArray& psi, double noise) { return to_array(lqu::mix_white_noise(to_pure(psi), noise).matrix()); },
      "psi"_a, "noise"_a);
  m.def("kay_state", [](double gamma) { return to_array(lqu::kay_state(gamma).matrix()); }, "gamma"_a);
  m.def(
      "random_pure", [](int n, std::uint64_t seed) { return to_vector(lqu::random_pure(n, seed).amplitudes()); },
      "n_qubits"_a, "seed"_a);
  m.def(
      "make_state",
      [](const std::string& family, double param, int n_qubits, std::uint64_t seed) {
        return to_array(lqu::make_state({lqu::parse_family(family), param, n_qubits, seed}).matrix());
      },
      "family"_a, "param"_a, "n_qubits"_a = 3, "seed"_a = 0);
  m.def(
      "validate",
      [](const CArray& a) {
        std::vector<std::string> out;
        for (const auto& v : lqu::validate(to_matrix(a))) out.push_back(v.describe());
        return out;
      },
      "m"_a, "Violation descriptions; empty for a valid density matrix.");
  m.def("parse_density_matrix", [](const std::string& text) { return to_array(lqu::io::parse_density_matrix(text).matrix()); });
  m.def("format_density_matrix", [](const CArray& a) { return lqu::io::format_density_matrix(to_density(a)); });

  // local quantum uncertainty
  py::class_<lqu::CorrelationMatrix3>(m, "CorrelationMatrix3")
      .def_readonly("measured_qubit", &lqu::CorrelationMatrix3::measured_qubit)
      .def_property_readonly("entries", &m_to_array)
      .def("eigenvalues", &lqu::CorrelationMatrix3::eigenvalues);

  py::class_<lqu::LquReport>(m, "LquReport")
      .def_readonly("per_bipartition", &lqu::LquReport::per_bipartition)
      .def_readonly("mean", &lqu::LquReport::mean)
      .def_property_readonly("min", &lqu::LquReport::min)
      .def_property_readonly("max", &lqu::LquReport::max)
      .def("__repr__", [](const lqu::LquReport& r) {
        std::string s = "LquReport(per_bipartition=[";
        for (std::size_t i = 0; i < r.per_bipartition.size(); ++i) {
          s += (i ? ", " : "") + lqu::cli::format_number(r.per_bipartition[i]);
        }
        return s + "], mean=" + lqu::cli::format_number(r.mean) + ")";
      });

  m.def(
      "local_observable",
      [](int n, int qubit, const py::object& pauli) { return to_array(lqu::local_observable(n, qubit, parse_pauli(pauli))); },
      "n_qubits"_a, "qubit"_a, "pauli"_a);
  m.def(
      "skew_information", [](const CArray& rho, const CArray& k) { return lqu::skew_information(to_density(rho), to_matrix(k)); },
      "rho"_a, "k"_a);
  m.def("m_matrix", [](const CArray& rho, int qubit) { return lqu::m_matrix(to_density(rho), qubit); }, "rho"_a, "qubit"_a);
  m.def(
      "lqu_bipartition", [](const CArray& rho, int qubit) { return lqu::lqu_bipartition(to_density(rho), qubit); }, "rho"_a,
      "qubit"_a);
  m.def("lqu_all", [](const CArray& rho) { return lqu::lqu_all(to_density(rho)); }, "rho"_a);
  m.def(
      "lqu_variational",
      [](const CArray& rho, int qubit, int n_samples, std::uint64_t seed) {
        return lqu::lqu_variational(to_density(rho), qubit, n_samples, seed);
      },
      "rho"_a, "qubit"_a, "n_samples"_a, "seed"_a);

  m.def(
      "sweep_csv",
      [](const std::string& family, double from, double to, int steps, int n_qubits, std::uint64_t seed) {
        lqu::cli::SweepConfig config;
        config.spec = {lqu::parse_family(family), 0.0, n_qubits, seed};
        config.param_from = from;
        config.param_to = to;
        config.steps = steps;
        return lqu::cli::sweep_csv(config);
      },
      "family"_a, "param_from"_a, "param_to"_a, "steps"_a, "n_qubits"_a = 3, "seed"_a = 0);

  auto an = m.def_submodule("analytic", "Closed-form LQU of the built-in families");
  an.def("lqu_ghz3", &lqu::analytic::lqu_ghz3, "alpha"_a);
  an.def("lqu_w3", &lqu::analytic::lqu_w3, "beta"_a);
  an.def("lqu_kay", &lqu::analytic::lqu_kay, "gamma"_a);
  an.def("lqu_ghz4_class", &lqu::analytic::lqu_ghz4_class, "eta"_a);
  an.def("lqu_w4", &lqu::analytic::lqu_w4, "eta"_a);
  an.def("w3_eigenvalues", [](double beta) {
    const auto s = lqu::analytic::w3_eigenvalues(beta);
    return py::make_tuple(s.w1, s.w3);
  });
  an.def("kay_eigenvalues", [](double gamma) {
    const auto s = lqu::analytic::kay_eigenvalues(gamma);
    return py::make_tuple(s.k1, s.k3);
  });
}
