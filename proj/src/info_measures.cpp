#include "nhq/info_measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "nhq/dynamics.hpp"
#include "nhq/errors.hpp"
#include "nhq/parallel.hpp"

namespace nhq {

namespace {

void require_unit(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
}

// p ln p with 0 ln 0 = 0, written through log1p for p = 1 + x.
double xlog1px(double x) { return x == -1.0 ? 0.0 : (1.0 + x) * std::log1p(x); }

// coth(x) - 1 for x > 0
double coth_minus_one(double x) { return 2.0 / std::expm1(2.0 * x); }

void require_positive_time(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("Fisher information needs t > 0, got " + std::to_string(t));
}

double simpson(const std::vector<double>& f, std::size_t stride, double h) {
    // f has an even number of stride-intervals; h is the interval width at this stride.
    const std::size_t n = (f.size() - 1) / stride;
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t i = 1; i < n; ++i) (i % 2 ? odd : even) += f[i * stride];
    return h / 3.0 * (f.front() + f.back() + 4.0 * odd + 2.0 * even);
}

}  // namespace

double von_neumann_entropy(double v) {
    require_unit(v, "Bloch length");
    return std::numbers::ln2 - 0.5 * xlog1px(v) - 0.5 * xlog1px(-v);
}

double entropy_deficit(double v) {
    require_unit(v, "Bloch length");
    if (v == 1.0) return std::numbers::ln2;
    if (v < 1e-3) {
        // sum_k v^{2k} / (2k (2k - 1))
        const double v2 = v * v;
        return v2 * (0.5 + v2 * (1.0 / 12.0 + v2 * (1.0 / 30.0 + v2 / 56.0)));
    }
    return v * std::atanh(v) + 0.5 * std::log1p(-v * v);
}

double renyi_entropy(double v, double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("Renyi order must be > 0, got " + std::to_string(r));
    require_unit(v, "Bloch length");
    if (r == 1.0) return von_neumann_entropy(v);
    const double p1 = 0.5 * (1.0 + v);
    const double p2 = 0.5 * (1.0 - v);
    return std::log(std::pow(p1, r) + std::pow(p2, r)) / (1.0 - r);
}

double kl_divergence(double v_tilde, double v) {
    if (!(v_tilde >= 0.0 && v_tilde < 1.0)) throw DomainError("KL divergence needs v_tilde in [0, 1)");
    if (!(v >= 0.0 && v < 1.0)) throw DomainError("KL divergence needs v in [0, 1)");
    return 0.5 * (std::log1p(-v_tilde * v_tilde) - std::log1p(-v * v) +
                  2.0 * v_tilde * (std::atanh(v_tilde) - std::atanh(v)));
}

double bloch_length(const QubitSpec& q, const BathIntegralCache& bath, double t) {
    return decoherence_function(q, bath, t);
}

std::string_view fisher_parameter_name(FisherParameter p) noexcept {
    return p == FisherParameter::Beta ? "beta" : "omega0";
}

FisherParameter parse_fisher_parameter(std::string_view s) {
    if (s == "beta") return FisherParameter::Beta;
    if (s == "omega0") return FisherParameter::Omega0;
    throw DomainError("unknown Fisher parameter '" + std::string(s) + "' (expected beta or omega0)");
}

double fisher_beta(const QubitSpec& q, const BathIntegralCache& bath, double t) {
    require_positive_time(t);
    const double w0 = omega0(q);
    const double w2 = w0 * w0;
    const double g = bath.gamma(t);
    const double gb = bath.dgamma_dbeta(t);
    return 0.5 * w2 * w2 * coth_minus_one(w2 * g) * gb * gb;
}

double fisher_beta(const QubitSpec& q, const BathSpec& b, double t) { return fisher_beta(q, BathIntegralCache(b), t); }

double fisher_omega0(const QubitSpec& q, const BathIntegralCache& bath, double t) {
    require_positive_time(t);
    const double w0 = omega0(q);
    const double g = bath.gamma(t);
    return 2.0 * w0 * w0 * coth_minus_one(w0 * w0 * g) * g * g;
}

double fisher_omega0(const QubitSpec& q, const BathSpec& b, double t) {
    return fisher_omega0(q, BathIntegralCache(b), t);
}

double fisher_information(FisherParameter p, const QubitSpec& q, const BathIntegralCache& bath, double t) {
    return p == FisherParameter::Beta ? fisher_beta(q, bath, t) : fisher_omega0(q, bath, t);
}

std::vector<double> fisher_summary_nodes(const FisherSummaryOptions& opts) {
    const std::size_t coarse = opts.grid + opts.grid % 2;
    return uniform_grid(opts.t_start, opts.horizon, 2 * coarse + 1);
}

FisherSummary fisher_summary(const std::function<double(double)>& curve, const FisherSummaryOptions& options) {
    if (!(options.horizon > options.t_start) || options.t_start < 0.0) {
        throw DomainError("fisher_summary needs horizon > t_start >= 0");
    }
    if (options.grid < 100) throw DomainError("fisher_summary needs grid >= 100");

    FisherSummaryOptions opts = options;
    std::vector<double> ts;
    std::vector<double> fs;
    double s_max = 0.0;
    std::size_t k_max = 0;
    for (int extension = 0;; ++extension) {
        ts = fisher_summary_nodes(opts);
        fs = parallel_map(ts.size(), [&](std::size_t i) { return curve(ts[i]); });
        k_max = static_cast<std::size_t>(std::max_element(fs.begin(), fs.end()) - fs.begin());
        s_max = fs[k_max];
        if (!(s_max > 0.0)) throw EmptyCurve("Fisher curve is zero on the whole grid");
        if (fs.back() <= 1e-9 * s_max) break;
        if (extension == 8) throw DomainError("Fisher curve does not decay within horizon " + std::to_string(opts.horizon));
        // Same spacing on the longer interval.
        opts.grid *= 2;
        opts.horizon = opts.t_start + 2.0 * (opts.horizon - opts.t_start);
    }

    // Golden-section refinement of the argmax inside its neighbouring samples.
    double a = ts[k_max == 0 ? 0 : k_max - 1];
    double b = ts[std::min(k_max + 1, ts.size() - 1)];
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = curve(c);
    double fd = curve(d);
    while (b - a > options.t_tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = curve(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = curve(d);
        }
    }
    FisherSummary s;
    s.t_max = ts[k_max];
    s.s_max = s_max;
    const double t_mid = 0.5 * (a + b);
    const double f_mid = curve(t_mid);
    if (f_mid >= s_max) {
        s.t_max = t_mid;
        s.s_max = f_mid;
    }
    const double h = (ts.back() - ts.front()) / static_cast<double>(ts.size() - 1);
    s.area = simpson(fs, 1, h);
    s.area_coarse = simpson(fs, 2, 2.0 * h);
    s.horizon = opts.horizon;
    return s;
}

FisherSummary fisher_summary(const std::function<double(double)>& curve, double horizon, std::size_t grid) {
    FisherSummaryOptions opts;
    opts.horizon = horizon;
    opts.grid = grid;
    return fisher_summary(curve, opts);
}

}  // namespace nhq
