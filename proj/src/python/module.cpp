// Copyright 2026 The qrnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qrnet/dfs.hpp"
#include "qrnet/dynamics.hpp"
#include "qrnet/experiments.hpp"
#include "qrnet/readout.hpp"

namespace py = pybind11;
using namespace qrnet;

namespace {

SpaceShape shape_from_list(const std::vector<Index>& dims) {
  return SpaceShape(dims);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "six-qubit quantum reservoir network with a singlet-subspace readout";

  // tensor
  m.def("kron", &kron, py::arg("a"), py::arg("b"));
  m.def(
      "partial_trace",
      [](const Matrix& rho, const std::vector<Index>& dims,
         const std::vector<int>& keep) {
        return partial_trace(rho, shape_from_list(dims), keep);
      },
      py::arg("rho"), py::arg("dims"), py::arg("keep"));
  m.def(
      "partial_transpose",
      [](const Matrix& rho, const std::vector<Index>& dims, int subsystem) {
        return partial_transpose(rho, shape_from_list(dims), subsystem);
      },
      py::arg("rho"), py::arg("dims"), py::arg("subsystem"));
  m.def("expm", &expm, py::arg("a"));
  m.def("trace_norm", &trace_norm, py::arg("a"));
  m.def(
      "herm_eig",
      [](const Matrix& a) {
        const EigResult r = herm_eig(a);
        return py::make_tuple(r.eigenvalues, r.eigenvectors);
      },
      py::arg("a"));

  // hilbert
  m.def("lowering_op", &lowering_op, py::arg("d"));
  m.def(
      "total_spin",
      [](int n_qubits, const std::string& component) {
        SpinComponent c;
        if (component == "plus") c = SpinComponent::plus;
        else if (component == "minus") c = SpinComponent::minus;
        else if (component == "z") c = SpinComponent::z;
        else throw std::invalid_argument("component must be plus|minus|z");
        return total_spin(CompositeSpace::qubits(n_qubits), c);
      },
      py::arg("n_qubits"), py::arg("component"));
  m.def(
      "total_spin_squared",
      [](int n_qubits) { return total_spin_squared(CompositeSpace::qubits(n_qubits)); },
      py::arg("n_qubits"));

  // dfs
  m.def("singlet_count", &singlet_count, py::arg("n_qubits"));
  m.def(
      "singlet_basis",
      [](int n_qubits) { return build_singlet_basis(n_qubits).vectors; },
      py::arg("n_qubits"));
  m.def(
      "singlet_projectors",
      [](int n_qubits) { return singlet_projectors(build_singlet_basis(n_qubits)); },
      py::arg("n_qubits"));

  // states
  m.def(
      "log_negativity",
      [](const Matrix& rho, const std::vector<Index>& dims, bool literal) {
        return log_negativity(rho, shape_from_list(dims),
                              literal ? LognegFormula::literal
                                      : LognegFormula::trace_norm);
      },
      py::arg("rho"), py::arg("dims"), py::arg("literal") = false);
  m.def("thermal_two_mode", &thermal_two_mode, py::arg("beta"), py::arg("n_fock"));
  m.def(
      "mean_occupation",
      [](double s, double phi) {
        const auto [n_bar, beta] = mean_occupation(s, phi);
        return py::make_tuple(n_bar, beta);
      },
      py::arg("s"), py::arg("phi"));
  m.def("squeeze_operator", &squeeze_operator, py::arg("alpha"), py::arg("n_fock"));
  m.def(
      "squeezed_thermal_state",
      [](double s, double phi, double theta, Index n_fock) {
        return squeezed_thermal_state({s, phi, theta}, n_fock);
      },
      py::arg("s"), py::arg("phi"), py::arg("theta"), py::arg("n_fock"));
  m.def(
      "random_teacher",
      [](uint64_t seed, const std::string& method, bool entangled, Index n_fock,
         double nu_min) {
        Rng rng(seed, 0);
        TeacherState st;
        if (method == "two_qubit")
          st = entangled ? random_entangled_two_qubit(rng, nu_min)
                         : random_product_two_qubit(rng);
        else if (method == "fock")
          st = entangled ? random_squeezed_thermal(rng, n_fock, nu_min)
                         : random_product_fock(rng, n_fock);
        else
          throw std::invalid_argument("method must be two_qubit|fock");
        return py::make_tuple(st.rho, static_cast<int>(st.label), st.logneg);
      },
      py::arg("seed"), py::arg("method"), py::arg("entangled"),
      py::arg("n_fock") = 4, py::arg("nu_min") = kDefaultNuMin);

  // dynamics
  m.def(
      "lindblad_rhs",
      [](const Matrix& rho, const Matrix& h,
         const std::vector<std::pair<Matrix, double>>& collapse) {
        std::vector<Collapse> ops;
        for (const auto& [op, rate] : collapse) ops.push_back({op, rate});
        return lindblad_rhs(rho, h, ops);
      },
      py::arg("rho"), py::arg("h"), py::arg("collapse"));
  m.def(
      "propagate",
      [](const Matrix& rho, const Matrix& h,
         const std::vector<std::pair<Matrix, double>>& collapse, double t,
         double dt_safety) {
        std::vector<Collapse> ops;
        for (const auto& [op, rate] : collapse) ops.push_back({op, rate});
        return LindbladPropagator(h, ops, dt_safety).propagate(rho, t);
      },
      py::arg("rho"), py::arg("h"), py::arg("collapse"), py::arg("t"),
      py::arg("dt_safety") = 0.05);

  // readout
  m.def(
      "fit_linear_readout",
      [](const RealMatrix& features, const std::vector<int>& labels, double ridge,
         bool intercept) {
        std::vector<FeatureVector> fv;
        for (Index i = 0; i < features.rows(); ++i)
          fv.push_back({features.row(i).transpose(), BasisKind::singlet});
        const ReadoutModel model = fit(fv, labels, ridge, intercept);
        return py::make_tuple(model.weights, model.bias);
      },
      py::arg("features"), py::arg("labels"), py::arg("ridge") = 0.0,
      py::arg("intercept") = true);
}
