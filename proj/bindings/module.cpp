// Python surface over the core: exact probability evaluators, design
// certification, the simulation pipeline, and the two-qubit discord tools.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <stdexcept>
#include <vector>

#include "qlls/analytics.hpp"
#include "qlls/designs.hpp"
#include "qlls/measures.hpp"
#include "qlls/protocol.hpp"
#include "qlls/quadrature.hpp"
#include "qlls/two_qubit.hpp"

namespace py = pybind11;
using namespace qlls;

namespace {

const DesignSet& design_from_name(const std::string& name) {
    if (name == "clifford") return clifford_design();
    if (name == "icosahedral") return icosahedral_design();
    throw std::invalid_argument("unknown design '" + name + "' (clifford, icosahedral)");
}

const DesignSet& design_for(int n, const std::string& name) {
    if (name != "auto") return design_from_name(name);
    if (n + 1 <= clifford_design().declared_t) return clifford_design();
    if (n + 1 <= icosahedral_design().declared_t) return icosahedral_design();
    throw std::invalid_argument("no built-in design of order >= " + std::to_string(n + 1));
}

using Matrix4 = std::vector<std::vector<std::complex<double>>>;

Matrix4 to_nested(const Complex4x4& rho) {
    Matrix4 out(4, std::vector<std::complex<double>>(4));
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) out[r][c] = rho.at(r, c);
    }
    return out;
}

Complex4x4 from_nested(const Matrix4& rho) {
    if (rho.size() != 4) throw std::invalid_argument("expected a 4x4 matrix");
    Complex4x4 out;
    for (int r = 0; r < 4; ++r) {
        if (rho[r].size() != 4) throw std::invalid_argument("expected a 4x4 matrix");
        for (int c = 0; c < 4; ++c) out.at(r, c) = rho[r][c];
    }
    return out;
}

py::dict entry_dict(int k, const ValidationEntry& e) {
    py::dict d;
    d["k"] = k;
    d["reference"] = e.reference;
    d["mean"] = e.mean;
    d["variance"] = e.variance;
    d["mse"] = e.mse;
    d["se_mean"] = e.se_mean;
    d["mse_mean"] = e.mse_mean;
    d["successes"] = e.successes;
    d["failed"] = e.failed;
    return d;
}

RunConfig make_config(int n, long long M, int K, const std::string& measure,
                      const std::string& estimator, int N, const std::string& design,
                      std::uint64_t master_seed) {
    RunConfig config;
    config.n = n;
    config.N = N;
    config.M = M;
    config.K = K;
    config.measure = MeasureSpec::from_name(measure);
    config.design = &design_for(n, design);
    config.estimator = estimator_from_name(estimator);
    config.master_seed = master_seed;
    config.validate();
    return config;
}

}  // namespace

PYBIND11_MODULE(_qlls, m) {
    m.doc() = "Conditional success probabilities for repeated binary quantum measurements";

    m.def("p_classical", &p_classical, py::arg("n"), py::arg("k"),
          "(k+1)/(n+2)");
    m.def("p_classical_beta", &p_classical_beta, py::arg("n"), py::arg("k"),
          "Classical probability through the Beta-integral route");
    m.def(
        "p_qlls",
        [](const std::string& measure, int n, int k) {
            return p_qlls(MeasureSpec::from_name(measure), n, k);
        },
        py::arg("measure"), py::arg("n"), py::arg("k"),
        "Exact conditional probability for 'classical', 'flat', or 'bures'");
    m.def(
        "normalization_integral",
        [](const std::string& measure, int n, int k) {
            return I_value(MeasureSpec::from_name(measure), n, k);
        },
        py::arg("measure"), py::arg("n"), py::arg("k"));
    m.def(
        "p_design_exact",
        [](const std::string& measure, int n, int k, const std::string& design) {
            return p_design_exact(MeasureSpec::from_name(measure), n, k,
                                  design_for(n, design), default_quadrature());
        },
        py::arg("measure"), py::arg("n"), py::arg("k"), py::arg("design") = "auto");
    m.def(
        "p_discretized",
        [](const std::string& measure, int n, int k, const std::string& design, int N) {
            return p_discretized(MeasureSpec::from_name(measure), n, k, design_for(n, design), N);
        },
        py::arg("measure"), py::arg("n"), py::arg("k"), py::arg("design") = "auto",
        py::arg("N") = 50);

    m.def(
        "design_size",
        [](const std::string& design) { return design_from_name(design).elements.size(); },
        py::arg("design"));
    m.def(
        "design_order",
        [](const std::string& design) { return design_from_name(design).declared_t; },
        py::arg("design"));
    m.def(
        "frame_potential",
        [](const std::string& design, int t) { return frame_potential(design_from_name(design), t); },
        py::arg("design"), py::arg("t"));
    m.def("haar_frame_potential", &haar_frame_potential, py::arg("t"),
          "Catalan number C_t, the Haar value of the frame potential");
    m.def(
        "verify_design",
        [](const std::string& design, int t, double tol) {
            return verify_design(design_from_name(design), t, tol);
        },
        py::arg("design"), py::arg("t"), py::arg("tol") = 1e-6);

    m.def(
        "discrete_weights",
        [](const std::string& measure, int N) {
            const DiscreteWeights grid = discrete_weights(MeasureSpec::from_name(measure), N);
            py::dict d;
            d["delta"] = grid.delta;
            d["omega"] = grid.omega;
            d["w0"] = grid.w0;
            return d;
        },
        py::arg("measure"), py::arg("N"));

    m.def(
        "run_experiment",
        [](int n, long long M, int K, const std::string& measure, const std::string& estimator,
           int N, const std::string& design, std::uint64_t master_seed,
           const std::string& reference) {
            const RunConfig config = make_config(n, M, K, measure, estimator, N, design, master_seed);
            const RunResult result = run_experiment(config, reference_from_name(reference));
            py::list entries;
            for (int k = 0; k <= n; ++k) entries.append(entry_dict(k, result.per_k[k]));
            return entries;
        },
        py::arg("n"), py::arg("M"), py::arg("K"), py::arg("measure"),
        py::arg("estimator") = "est1", py::arg("N") = 50, py::arg("design") = "auto",
        py::arg("master_seed") = 1, py::arg("reference") = "analytic",
        "K seeded acquisition-and-estimation runs; one statistics dict per k");
    m.def("loglog_slope", &loglog_slope, py::arg("x"), py::arg("y"),
          "Least-squares slope of log10(y) against log10(x)");

    m.def(
        "two_copy_average",
        [](const std::string& measure, const std::string& design) {
            return to_nested(two_copy_average(MeasureSpec::from_name(measure),
                                              design_from_name(design), default_quadrature()));
        },
        py::arg("measure") = "flat", py::arg("design") = "clifford",
        "Measure-averaged two-copy density matrix as a nested 4x4 list");
    m.def(
        "pauli_correlations",
        [](const Matrix4& rho) {
            const PauliCorrelations c = pauli_correlations(from_nested(rho));
            return py::make_tuple(c.xx, c.yy, c.zz);
        },
        py::arg("rho"));
    m.def(
        "measurement_discord",
        [](const Matrix4& rho) { return measurement_discord(from_nested(rho)).value_bits; },
        py::arg("rho"), "Discord over product projective measurements, in bits");
    m.def("bell_diagonal_discord_bits", &bell_diagonal_discord_bits, py::arg("cx"), py::arg("cy"),
          py::arg("cz"));
}
