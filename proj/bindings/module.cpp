#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fou/asymptotics.hpp"
#include "fou/estimator.hpp"
#include "fou/fbm.hpp"
#include "fou/mc.hpp"
#include "fou/model.hpp"
#include "fou/periodic_basis.hpp"
#include "fou/types.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<double>> matrix_to_rows(const fou::Matrix& m) {
    std::vector<std::vector<double>> rows(m.rows, std::vector<double>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            rows[i][j] = m(i, j);
        }
    }
    return rows;
}

fou::ModelParams make_params(double hurst, double alpha, double sigma, double x0,
                             const fou::PeriodicBasis& basis,
                             const std::vector<double>& mu) {
    fou::ModelParams params;
    params.hurst = hurst;
    params.alpha = alpha;
    params.sigma = sigma;
    params.x0 = x0;
    params.drift.basis = basis;
    params.drift.mu = mu;
    return params;
}

}  // namespace

PYBIND11_MODULE(_fou, m) {
    m.doc() = "Fractional Ornstein-Uhlenbeck simulation and inference";

    py::class_<fou::SamplePath>(m, "SamplePath")
        .def(py::init<>())
        .def_readwrite("t0", &fou::SamplePath::t0)
        .def_readwrite("dt", &fou::SamplePath::dt)
        .def_readwrite("values", &fou::SamplePath::values)
        .def("time", &fou::SamplePath::time)
        .def("duration", &fou::SamplePath::duration)
        .def("__len__", [](const fou::SamplePath& p) { return p.n_nodes(); });

    py::class_<fou::PeriodicBasis>(m, "PeriodicBasis")
        .def_static("fourier", &fou::PeriodicBasis::fourier, py::arg("order"))
        .def_static("custom", &fou::PeriodicBasis::custom, py::arg("tabulated"))
        .def("size", &fou::PeriodicBasis::size)
        .def("is_fourier", &fou::PeriodicBasis::is_fourier)
        .def("eval", &fou::PeriodicBasis::eval, py::arg("i"), py::arg("t"))
        .def("eval_derivative", &fou::PeriodicBasis::eval_derivative, py::arg("i"),
             py::arg("t"))
        .def("unit_integrals", &fou::PeriodicBasis::unit_integrals)
        .def("gram_deviation", &fou::PeriodicBasis::gram_deviation);

    py::class_<fou::ModelParams>(m, "ModelParams")
        .def(py::init(&make_params), py::arg("hurst"), py::arg("alpha"),
             py::arg("sigma"), py::arg("x0"), py::arg("basis"), py::arg("mu"))
        .def_readwrite("hurst", &fou::ModelParams::hurst)
        .def_readwrite("alpha", &fou::ModelParams::alpha)
        .def_readwrite("sigma", &fou::ModelParams::sigma)
        .def_readwrite("x0", &fou::ModelParams::x0)
        .def_property_readonly(
            "mu", [](const fou::ModelParams& p) { return p.drift.mu; });

    py::class_<fou::SimulatedPair>(m, "SimulatedPair")
        .def_readonly("X", &fou::SimulatedPair::X)
        .def_readonly("B", &fou::SimulatedPair::B);

    py::class_<fou::EstimateResult>(m, "EstimateResult")
        .def_readonly("theta_hat", &fou::EstimateResult::theta_hat)
        .def_readonly("D", &fou::EstimateResult::D)
        .def_readonly("gamma", &fou::EstimateResult::gamma)
        .def_readonly("Lambda", &fou::EstimateResult::Lambda)
        .def_readonly("n", &fou::EstimateResult::n)
        .def_readonly("condition_proxy", &fou::EstimateResult::condition_proxy);

    py::class_<fou::MeanVar>(m, "MeanVar")
        .def_readonly("mean", &fou::MeanVar::mean)
        .def_readonly("var", &fou::MeanVar::var);

    py::class_<fou::RatioLimit>(m, "RatioLimit")
        .def_readonly("alpha", &fou::RatioLimit::alpha)
        .def_readonly("m", &fou::RatioLimit::m);

    py::class_<fou::ZeroIntegralVariance>(m, "ZeroIntegralVariance")
        .def_readonly("by_series", &fou::ZeroIntegralVariance::by_series)
        .def_readonly("by_integral", &fou::ZeroIntegralVariance::by_integral)
        .def_readonly("by_oracle", &fou::ZeroIntegralVariance::by_oracle)
        .def_readonly("convention_factor",
                      &fou::ZeroIntegralVariance::convention_factor)
        .def("resolved_series", &fou::ZeroIntegralVariance::resolved_series)
        .def("resolved_integral", &fou::ZeroIntegralVariance::resolved_integral)
        .def("max_rel_dev", &fou::ZeroIntegralVariance::max_rel_dev);

    m.def("fbm_covariance", &fou::fbm_covariance, py::arg("t"), py::arg("s"),
          py::arg("hurst"));
    m.def(
        "fgn_spectrum",
        [](std::size_t n, double dt, double hurst) {
            return fou::fgn_spectrum(n, dt, hurst);
        },
        py::arg("n"), py::arg("dt"), py::arg("hurst"));
    m.def(
        "sample_fbm",
        [](std::size_t n_steps, double dt, double hurst, std::uint64_t master,
           std::uint64_t stream) {
            return fou::sample_fbm(n_steps, dt, hurst, fou::Seed{master, stream});
        },
        py::arg("n_steps"), py::arg("dt"), py::arg("hurst"), py::arg("master"),
        py::arg("stream") = 0);
    m.def(
        "simulate",
        [](const fou::ModelParams& params, double T, std::size_t n_steps,
           std::uint64_t master, std::uint64_t stream) {
            const std::size_t n = n_steps > 0 ? n_steps : fou::default_n_steps(T);
            return fou::simulate(params, T, n, fou::Seed{master, stream});
        },
        py::arg("params"), py::arg("T"), py::arg("n_steps") = 0, py::arg("master") = 0,
        py::arg("stream") = 0);
    m.def(
        "estimate",
        [](const fou::SimulatedPair& pair, const fou::PeriodicBasis& basis) {
            return fou::estimate(pair, basis);
        },
        py::arg("pair"), py::arg("basis"));
    m.def(
        "estimate_path",
        [](const fou::SamplePath& path, const fou::PeriodicBasis& basis) {
            return fou::estimate(path, basis);
        },
        py::arg("path"), py::arg("basis"));
    m.def(
        "laplace_unit_integral",
        [](const fou::PeriodicBasis& basis, const std::vector<double>& mu,
           double alpha) {
            return fou::laplace_unit_integral(fou::DriftFunction{basis, mu}, alpha);
        },
        py::arg("basis"), py::arg("mu"), py::arg("alpha"));
    m.def("xi_infty_mean_var", &fou::xi_infty_mean_var, py::arg("params"));
    m.def("ratio_limit_params", &fou::ratio_limit_params, py::arg("params"));
    m.def("ratio_cdf", &fou::ratio_cdf, py::arg("law"), py::arg("z"));
    m.def("ratio_quantile", &fou::ratio_quantile, py::arg("law"), py::arg("prob"));
    m.def("variance_convention_factor", &fou::variance_convention_factor,
          py::arg("hurst"));
    m.def("zero_integral_variance", &fou::zero_integral_variance, py::arg("basis"),
          py::arg("k"), py::arg("hurst"), py::arg("l_max") = 40,
          py::arg("oracle_n") = 128);
    m.def(
        "limit_cov_matrix",
        [](const fou::PeriodicBasis& basis, double sigma) {
            const fou::GaussianLimit limit = fou::limit_cov_matrix(basis, sigma);
            return matrix_to_rows(limit.cov);
        },
        py::arg("basis"), py::arg("sigma"));
}
