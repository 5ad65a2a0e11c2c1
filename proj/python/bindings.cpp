#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nbgauss/cli.hpp"
#include "nbgauss/correction.hpp"
#include "nbgauss/exactdist.hpp"
#include "nbgauss/fit.hpp"
#include "nbgauss/llt.hpp"
#include "nbgauss/median.hpp"
#include "nbgauss/montecarlo.hpp"
#include "nbgauss/tvdist.hpp"

namespace py = pybind11;
using namespace nbgauss;

namespace {

py::dict expansion_dict(const ExpansionResult& e) {
    py::dict d;
    d["value"] = e.value;
    d["term_half"] = e.term_half;
    d["term_one"] = e.term_one;
    d["remainder_scale"] = e.remainder_scale;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Negative binomial: exact laws, local expansions, corrected CDFs, "
              "jittered medians, estimators and total variation.";

    py::register_exception<DegenerateSample>(m, "DegenerateSample", PyExc_ValueError);

    py::class_<NBParams>(m, "NBParams")
        .def(py::init<double, double>(), py::arg("r"), py::arg("p"))
        .def_property_readonly("r", &NBParams::r)
        .def_property_readonly("p", &NBParams::p)
        .def_property_readonly("q", &NBParams::q)
        .def_property_readonly("mean", &NBParams::mean)
        .def_property_readonly("variance", &NBParams::variance)
        .def_property_readonly("sd", &NBParams::sd)
        .def("__repr__", [](const NBParams& s) {
            std::ostringstream os;
            os << "NBParams(r=" << s.r() << ", p=" << s.p() << ")";
            return os.str();
        });

    py::class_<PoissonParams>(m, "PoissonParams")
        .def(py::init<double>(), py::arg("lam"))
        .def_property_readonly("lam", &PoissonParams::lambda);

    m.def("nb_pmf", &nb_pmf, py::arg("params"), py::arg("k"));
    m.def("nb_cdf", &nb_cdf, py::arg("params"), py::arg("k"));
    m.def("nb_survival", &nb_survival, py::arg("params"), py::arg("a"));
    m.def("nb_integer_median", &nb_integer_median, py::arg("params"));
    m.def("nb_central_moment", &nb_central_moment, py::arg("params"), py::arg("order"));
    m.def("poisson_pmf", &poisson_pmf, py::arg("params"), py::arg("k"));
    m.def("poisson_cdf", &poisson_cdf, py::arg("params"), py::arg("k"));
    m.def("poisson_integer_median", &poisson_integer_median, py::arg("params"));

    m.def("delta_k", &delta_k, py::arg("params"), py::arg("k"));
    m.def("bulk_range", [](const NBParams& params, double eta) {
        const IndexRange range = bulk_range(params, BulkSpec(eta));
        return py::make_tuple(range.lo, range.hi);
    }, py::arg("params"), py::arg("eta") = 0.5);
    m.def("llt_log_ratio", [](const NBParams& params, std::int64_t k, double eta) {
        return expansion_dict(llt_log_ratio(params, k, BulkSpec(eta)));
    }, py::arg("params"), py::arg("k"), py::arg("eta") = 0.5);
    m.def("llt_ratio", [](const NBParams& params, std::int64_t k, double eta) {
        return expansion_dict(llt_ratio(params, k, BulkSpec(eta)));
    }, py::arg("params"), py::arg("k"), py::arg("eta") = 0.5);
    m.def("exact_pmf_ratio", &exact_pmf_ratio, py::arg("params"), py::arg("k"));

    m.def("c_star", [](const NBParams& params, std::int64_t a) {
        return c_star(params, a).c_star;
    }, py::arg("params"), py::arg("a"));
    m.def("corrected_survival", &corrected_survival, py::arg("params"), py::arg("a"));
    m.def("corrected_cdf", &corrected_cdf, py::arg("params"), py::arg("a"));
    m.def("classical_cdf", &classical_cdf, py::arg("params"), py::arg("a"));

    m.def("exact_jittered_median_nb", &exact_jittered_median_nb, py::arg("params"));
    m.def("asymptotic_jittered_median_nb", &asymptotic_jittered_median_nb, py::arg("params"));
    m.def("exact_jittered_median_poisson", &exact_jittered_median_poisson, py::arg("params"));
    m.def("median_scan", [](double p, const std::vector<double>& r_grid) {
        py::list rows;
        for (const auto& row : median_scan(p, r_grid)) {
            rows.append(py::make_tuple(row.r, row.integer_median_minus_mean, row.report.exact,
                                       row.report.asymptotic, row.report.residual));
        }
        return rows;
    }, py::arg("p"), py::arg("r_grid"));

    m.def("sample_nb", [](const NBParams& params, std::int64_t count, std::uint64_t seed,
                          std::uint64_t stream_id) {
        RngStream stream(seed, stream_id);
        std::vector<std::int64_t> out(static_cast<std::size_t>(count));
        for (auto& k : out) {
            k = sample_nb(stream, params);
        }
        return out;
    }, py::arg("params"), py::arg("count"), py::arg("seed") = 1, py::arg("stream_id") = 0);
    m.def("robust_estimate_p", [](const std::vector<double>& xs, double r) {
        return robust_estimate_p(xs, r).value;
    }, py::arg("xs"), py::arg("r"));
    m.def("ml_estimate_p", [](const std::vector<double>& xs, double r) {
        return ml_estimate_p(xs, r).value;
    }, py::arg("xs"), py::arg("r"));
    m.def("run_bias_rmse_experiment",
          [](double p, const std::vector<double>& r_grid, std::int64_t n, std::int64_t reps,
             std::uint64_t seed, unsigned threads, bool raw_ml) {
        SimConfig cfg;
        cfg.p = p;
        cfg.r_grid = r_grid;
        cfg.n = n;
        cfg.reps = reps;
        cfg.seed = seed;
        cfg.threads = threads;
        cfg.ml_input = raw_ml ? MlInput::raw : MlInput::jittered;
        SimReport report;
        {
            py::gil_scoped_release release;
            report = run_bias_rmse_experiment(cfg);
        }
        py::list rows;
        for (const auto& row : report.rows) {
            py::dict d;
            d["r"] = row.r;
            d["bias_robust"] = row.bias_robust;
            d["bias_ml"] = row.bias_ml;
            d["rmse_robust"] = row.rmse_robust;
            d["rmse_ml"] = row.rmse_ml;
            d["rmse_ratio"] = row.rmse_ratio;
            d["degenerate_count"] = row.degenerate_count;
            rows.append(d);
        }
        return rows;
    }, py::arg("p"), py::arg("r_grid"), py::arg("n") = 200, py::arg("reps") = 2000,
       py::arg("seed") = 1, py::arg("threads") = 0, py::arg("raw_ml") = false);

    m.def("tv_jittered_vs_normal", [](const NBParams& params, double window_sds) {
        const TVReport report = tv_jittered_vs_normal(params, window_sds);
        py::dict d;
        d["tv"] = report.tv;
        d["quad_error_bound"] = report.quad_error_bound;
        d["tail_mass_bound"] = report.tail_mass_bound;
        d["k_lo"] = report.k_lo;
        d["k_hi"] = report.k_hi;
        return d;
    }, py::arg("params"), py::arg("window_sds") = 40.0);

    m.def("log_log_slope", [](const std::vector<double>& x, const std::vector<double>& y) {
        return log_log_slope(x, y);
    }, py::arg("x"), py::arg("y"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command-line tool; returns (exit_code, stdout, stderr).");
}
