// Copyright 2026 The anyonint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anyonint/interferometry.hpp"
#include "anyonint/model.hpp"
#include "anyonint/model_io.hpp"
#include "anyonint/oracle.hpp"
#include "anyonint/verify.hpp"

namespace py = pybind11;
using namespace anyonint;

namespace {

// python keeps only const access, so unconst-ing the shared handle is safe
std::shared_ptr<AnyonModel> unconst(ModelPtr p) {
  return std::const_pointer_cast<AnyonModel>(std::move(p));
}

using ChannelTuple = std::tuple<std::string, std::string, std::string, int, int>;

ChannelTuple key_tuple(const AnyonModel& m, const ChannelKey& k) {
  return {m.charge_name(k.a), m.charge_name(k.a_prime), m.charge_name(k.e),
          k.alpha, k.beta};
}

ProbeSpec probe_from_dict(
    const std::shared_ptr<AnyonModel>& model,
    const std::map<std::string, std::pair<Complex, Complex>>& amplitudes,
    bool normalize, double tol) {
  std::vector<std::array<Complex, 2>> amps(
      model->charge_count(), {Complex{0.0, 0.0}, Complex{0.0, 0.0}});
  for (const auto& [name, hv] : amplitudes) {
    const int b = model->charge_id(name);
    amps[b][0] = hv.first;
    amps[b][1] = hv.second;
  }
  if (normalize) {
    double norm = 0.0;
    for (const auto& a : amps) norm += std::norm(a[0]) + std::norm(a[1]);
    if (norm <= 0.0) throw DomainError("cannot normalize a zero probe");
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& a : amps) {
      a[0] *= scale;
      a[1] *= scale;
    }
  }
  return ProbeSpec(model, std::move(amps), tol);
}

std::vector<ProbeSpec> as_probe_vector(const py::object& probes) {
  if (py::isinstance<ProbeSpec>(probes))
    return {probes.cast<ProbeSpec>()};
  return probes.cast<std::vector<ProbeSpec>>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "anyonic-charge interferometric decoherence toolkit";

  const auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<ModelError>(m, "ModelError", base);
  py::register_exception<DomainError>(m, "DomainError", base);

  py::enum_<Direction>(m, "Direction")
      .value("horizontal", Direction::horizontal)
      .value("vertical", Direction::vertical);
  py::enum_<Placement>(m, "Placement")
      .value("below", Placement::below)
      .value("above", Placement::above);
  py::enum_<ChannelStatus>(m, "ChannelStatus")
      .value("preserved", ChannelStatus::preserved)
      .value("decayed", ChannelStatus::decayed)
      .value("non_convergent", ChannelStatus::non_convergent);

  py::class_<PairBlock>(m, "PairBlock")
      .def_readonly("rows", &PairBlock::rows)
      .def_readonly("cols", &PairBlock::cols)
      .def_property_readonly("matrix",
                             [](const PairBlock& b) { return b.mat; });

  py::class_<BasisLabel>(m, "BasisLabel")
      .def_readonly("charge", &BasisLabel::charge)
      .def_readonly("v1", &BasisLabel::v1)
      .def_readonly("v2", &BasisLabel::v2)
      .def("__repr__", [](const BasisLabel& l) {
        return "BasisLabel(charge=" + std::to_string(l.charge) +
               ", v1=" + std::to_string(l.v1) + ", v2=" + std::to_string(l.v2) +
               ")";
      });

  py::class_<AnyonModel, std::shared_ptr<AnyonModel>>(m, "AnyonModel")
      .def_property_readonly("name", &AnyonModel::name)
      .def_property_readonly("charge_count", &AnyonModel::charge_count)
      .def_property_readonly("charges",
                             [](const AnyonModel& mm) {
                               std::vector<std::string> out;
                               for (int a = 0; a < mm.charge_count(); ++a)
                                 out.push_back(mm.charge_name(a));
                               return out;
                             })
      .def("charge_id", [](const AnyonModel& mm, const std::string& name) {
        return mm.charge_id(name);
      })
      .def("charge_name", &AnyonModel::charge_name)
      .def("dual",
           [](const AnyonModel& mm, const std::string& a) {
             return mm.charge_name(mm.dual(mm.charge_id(a)));
           })
      .def("qdim",
           [](const AnyonModel& mm, const std::string& a) {
             return mm.qdim(mm.charge_id(a));
           })
      .def_property_readonly("total_qdim", &AnyonModel::total_qdim)
      .def("fusion",
           [](const AnyonModel& mm, const std::string& a, const std::string& b,
              const std::string& c) {
             return mm.fusion(mm.charge_id(a), mm.charge_id(b), mm.charge_id(c));
           })
      .def("fusion_products",
           [](const AnyonModel& mm, const std::string& a, const std::string& b) {
             std::vector<std::string> out;
             for (int c : mm.fusion_products(mm.charge_id(a), mm.charge_id(b)))
               out.push_back(mm.charge_name(c));
             return out;
           })
      .def_property_readonly("s_matrix", &AnyonModel::s_matrix)
      .def("monodromy",
           [](const AnyonModel& mm, const std::string& a, const std::string& b) {
             return mm.monodromy(mm.charge_id(a), mm.charge_id(b));
           })
      .def("difference_channels",
           [](const AnyonModel& mm, const std::string& a, const std::string& ap) {
             std::vector<std::pair<std::string, int>> out;
             for (const auto& [e, mult] :
                  mm.difference_channels(mm.charge_id(a), mm.charge_id(ap)))
               out.emplace_back(mm.charge_name(e), mult);
             return out;
           })
      .def("pair_block",
           [](const AnyonModel& mm, const std::string& a, const std::string& ap) {
             return mm.pair_block(mm.charge_id(a), mm.charge_id(ap));
           })
      .def("__repr__", [](const AnyonModel& mm) {
        return "AnyonModel('" + mm.name() + "', " +
               std::to_string(mm.charge_count()) + " charges)";
      });

  m.def("builtin_model",
        [](const std::string& name) { return unconst(builtin_model(name)); });
  m.def("builtin_model_names", []() { return builtin_model_names(); });
  m.def("load_model",
        [](const std::string& text) { return unconst(load_model(text)); });
  m.def("load_model_file",
        [](const std::string& path) { return unconst(load_model_file(path)); });
  m.def("serialize_model",
        [](const std::shared_ptr<AnyonModel>& mm) { return serialize_model(*mm); });
  m.def(
      "models_equal",
      [](const std::shared_ptr<AnyonModel>& a,
         const std::shared_ptr<AnyonModel>& b,
         double tol) { return models_equal(*a, *b, tol); },
      py::arg("a"), py::arg("b"), py::arg("tol") = 1e-15);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("max_deviation", &CheckResult::max_deviation)
      .def_readonly("detail", &CheckResult::detail);
  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("model_name", &VerificationReport::model_name)
      .def_readonly("tolerance", &VerificationReport::tolerance)
      .def_readonly("checks", &VerificationReport::checks)
      .def("all_passed", &VerificationReport::all_passed)
      .def("max_deviation", &VerificationReport::max_deviation)
      .def("to_text", &VerificationReport::to_text)
      .def("__repr__", &VerificationReport::to_text);
  m.def(
      "verify_model",
      [](const std::shared_ptr<AnyonModel>& mm, double tol) {
        return verify_model(*mm, tol);
      },
      py::arg("model"), py::arg("tol") = kDefaultTol);

  py::class_<TargetState>(m, "TargetState")
      .def(py::init([](const std::shared_ptr<AnyonModel>& model,
                       const std::map<std::string, Complex>& amplitudes,
                       bool normalize, double tol) {
             return TargetState::from_map(model, amplitudes, normalize, tol);
           }),
           py::arg("model"), py::arg("amplitudes"), py::arg("normalize") = false,
           py::arg("tol") = kDefaultTol)
      .def_property_readonly("amplitudes", &TargetState::amplitudes)
      .def("amplitude", [](const TargetState& t, const std::string& a) {
        return t.amplitude(t.model()->charge_id(a));
      });

  py::class_<ProbeSpec>(m, "ProbeSpec")
      .def(py::init(&probe_from_dict), py::arg("model"), py::arg("amplitudes"),
           py::arg("normalize") = false, py::arg("tol") = kDefaultTol,
           "amplitudes: {charge: (horizontal, vertical)}")
      .def_static(
          "definite",
          [](const std::shared_ptr<AnyonModel>& model, const std::string& b) {
            return ProbeSpec::definite(model, b);
          },
          py::arg("model"), py::arg("charge"))
      .def_property_readonly("amplitudes", &ProbeSpec::amplitudes);

  py::class_<BeamSplitter>(m, "BeamSplitter")
      .def(py::init<Complex, Complex, double>(), py::arg("t"), py::arg("r"),
           py::arg("tol") = kDefaultTol)
      .def_readonly("t", &BeamSplitter::t)
      .def_readonly("r", &BeamSplitter::r);

  py::class_<InterferometerConfig>(m, "InterferometerConfig")
      .def(py::init([](const BeamSplitter& t1, std::optional<BeamSplitter> t2,
                       double theta_1, double theta_2, Placement placement) {
             InterferometerConfig cfg;
             cfg.t1 = t1;
             if (t2) cfg.t2 = *t2;
             cfg.theta_1 = theta_1;
             cfg.theta_2 = theta_2;
             cfg.placement = placement;
             return cfg;
           }),
           py::arg("t1"), py::arg("t2") = std::nullopt, py::arg("theta_1") = 0.0,
           py::arg("theta_2") = 0.0, py::arg("placement") = Placement::below)
      .def_readonly("t1", &InterferometerConfig::t1)
      .def_readonly("t2", &InterferometerConfig::t2)
      .def_readonly("theta_1", &InterferometerConfig::theta_1)
      .def_readonly("theta_2", &InterferometerConfig::theta_2)
      .def_readonly("placement", &InterferometerConfig::placement);

  py::class_<DifferenceChannelMatrix>(m, "DifferenceChannelMatrix")
      .def("entries", [](const DifferenceChannelMatrix& d) {
        std::map<ChannelTuple, Complex> out;
        for (const auto& [key, value] : d.entries())
          out[key_tuple(*d.model(), key)] = value;
        return out;
      });

  py::class_<PairBasisMatrix>(m, "PairBasisMatrix")
      .def_property_readonly("basis",
                             [](const PairBasisMatrix& p) {
                               std::vector<std::tuple<std::string, std::string, int>> out;
                               for (const PairIndex& idx : p.basis())
                                 out.emplace_back(
                                     p.model()->charge_name(idx.a),
                                     p.model()->charge_name(idx.f), idx.mu);
                               return out;
                             })
      .def_property_readonly("matrix", &PairBasisMatrix::matrix)
      .def("trace", &PairBasisMatrix::trace)
      .def("entry",
           [](const PairBasisMatrix& p, const std::string& a,
              const std::string& f, int mu, const std::string& ap, int nu) {
             const AnyonModel& mm = *p.model();
             return p.entry({mm.charge_id(a), mm.charge_id(f), mu},
                            {mm.charge_id(ap), mm.charge_id(f), nu});
           },
           py::arg("a"), py::arg("f"), py::arg("mu"), py::arg("a_prime"),
           py::arg("nu"));

  py::class_<ChannelConvergence>(m, "ChannelConvergence")
      .def_property_readonly("key",
                             [](const ChannelConvergence& c) { return c.key; })
      .def_readonly("factor", &ChannelConvergence::factor)
      .def_readonly("status", &ChannelConvergence::status);
  py::class_<ChannelKey>(m, "ChannelKey")
      .def_readonly("a", &ChannelKey::a)
      .def_readonly("a_prime", &ChannelKey::a_prime)
      .def_readonly("e", &ChannelKey::e)
      .def_readonly("alpha", &ChannelKey::alpha)
      .def_readonly("beta", &ChannelKey::beta);
  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("channels", &ConvergenceReport::channels)
      .def("fully_convergent", &ConvergenceReport::fully_convergent)
      .def("to_text", &ConvergenceReport::to_text);

  m.def("decompose_initial", &decompose_initial);
  m.def(
      "channel_factor",
      [](const std::shared_ptr<AnyonModel>& model, const std::string& e,
         const py::object& probes, const InterferometerConfig& config, int n) {
        const std::vector<ProbeSpec> v = as_probe_vector(probes);
        return channel_factor(*model, model->charge_id(e), std::span(v), config,
                              n);
      },
      py::arg("model"), py::arg("e"), py::arg("probes"), py::arg("config"),
      py::arg("n_probes"));
  m.def(
      "evolve",
      [](const TargetState& target, const py::object& probes,
         const InterferometerConfig& config, int n) {
        const std::vector<ProbeSpec> v = as_probe_vector(probes);
        return evolve(target, std::span(v), config, n);
      },
      py::arg("target"), py::arg("probes"), py::arg("config"),
      py::arg("n_probes"));
  m.def(
      "asymptotic",
      [](const TargetState& target, const ProbeSpec& probe,
         const InterferometerConfig& config, double tol) {
        AsymptoticResult res = asymptotic(target, probe, config, tol);
        return py::make_tuple(std::move(res.rho), std::move(res.report));
      },
      py::arg("target"), py::arg("probe"), py::arg("config"),
      py::arg("tol") = kDefaultTol);
  m.def("stray_anyon_pass", &stray_anyon_pass, py::arg("target"),
        py::arg("probe"), py::arg("passes"));

  // oracle
  py::class_<BlockWeight>(m, "BlockWeight")
      .def_readonly("a", &BlockWeight::a)
      .def_readonly("weight", &BlockWeight::weight)
      .def_readonly("deviation", &BlockWeight::deviation);
  py::class_<DensityMatrixReport>(m, "DensityMatrixReport")
      .def_readonly("hermiticity_deviation",
                    &DensityMatrixReport::hermiticity_deviation)
      .def_readonly("trace_deviation", &DensityMatrixReport::trace_deviation)
      .def_readonly("min_eigenvalue", &DensityMatrixReport::min_eigenvalue)
      .def_readonly("block_weights", &DensityMatrixReport::block_weights)
      .def("passed", &DensityMatrixReport::pass, py::arg("tol") = kDefaultTol)
      .def("to_text", &DensityMatrixReport::to_text);
  py::class_<ComparisonReport>(m, "ComparisonReport")
      .def_readonly("max_deviation", &ComparisonReport::max_deviation)
      .def_readonly("threshold", &ComparisonReport::threshold)
      .def_readonly("passed", &ComparisonReport::pass)
      .def("to_text", &ComparisonReport::to_text);

  m.def(
      "binomial_channel_factor",
      [](const std::shared_ptr<AnyonModel>& model, const std::string& e,
         const std::string& b, const BeamSplitter& t1, int n) {
        return binomial_channel_factor(*model, model->charge_id(e),
                                       model->charge_id(b), t1, n);
      },
      py::arg("model"), py::arg("e"), py::arg("b"), py::arg("t1"),
      py::arg("n_probes"));
  m.def(
      "path_enumeration_factor",
      [](const std::shared_ptr<AnyonModel>& model, const std::string& e,
         const py::object& probes, const BeamSplitter& t1, int n) {
        const std::vector<ProbeSpec> v = as_probe_vector(probes);
        return path_enumeration_factor(*model, model->charge_id(e), std::span(v),
                                       t1, n);
      },
      py::arg("model"), py::arg("e"), py::arg("probes"), py::arg("t1"),
      py::arg("n_probes"));
  m.def(
      "check_density_matrix",
      [](const PairBasisMatrix& rho, std::optional<TargetState> reference) {
        return check_density_matrix(rho, reference ? &*reference : nullptr);
      },
      py::arg("rho"), py::arg("reference") = std::nullopt);
  m.def(
      "closed_form_vs_oracle",
      [](const TargetState& target, const py::object& probes,
         const InterferometerConfig& config, int n, double threshold) {
        Scenario scenario{target, as_probe_vector(probes), config, n};
        return closed_form_vs_oracle(scenario, threshold);
      },
      py::arg("target"), py::arg("probes"), py::arg("config"),
      py::arg("n_probes"), py::arg("threshold") = 1e-10);

  m.attr("DEFAULT_TOL") = kDefaultTol;
  m.attr("__version__") = "0.1.0";
}
