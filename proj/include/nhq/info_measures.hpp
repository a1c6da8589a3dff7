// info_measures.hpp — entropies, KL divergence and Fisher information of the dephasing qubit
//
// All measures are functions of the Bloch-vector length v. For the equal-population
// pure initial state v(t) = D(t) = e^{-w0^2 gamma(t)}.

#pragma once

#include <functional>
#include <string_view>

#include "nhq/bath_integrals.hpp"
#include "nhq/model.hpp"

namespace nhq {

/// S = ln2 - (1+v)/2 ln(1+v) - (1-v)/2 ln(1-v). DomainError outside [0, 1].
double von_neumann_entropy(double v);

/// ln2 - S without the cancellation, so it stays resolvable once S has
/// rounded to ln2 (about v^2 / 2 for small v).
double entropy_deficit(double v);

/// S_r = [r ln2 + ln((1+v)^r + (1-v)^r)] / (1-r). r == 1 returns von_neumann_entropy(v).
/// DomainError for r <= 0 or v outside [0, 1].
double renyi_entropy(double v, double r);

/// D_KL(v_tilde || v) of the eigenvalue distributions (1 +- v)/2. DomainError unless both lie in [0, 1).
double kl_divergence(double v_tilde, double v);

/// Bloch length v(t) = D(t) for the equal-population pure initial state.
double bloch_length(const QubitSpec& q, const BathIntegralCache& bath, double t);

enum class FisherParameter { Beta, Omega0 };

std::string_view fisher_parameter_name(FisherParameter p) noexcept;
/// Parses "beta" or "omega0". Throws DomainError otherwise.
FisherParameter parse_fisher_parameter(std::string_view s);

/// S_f(beta, t) = w0^4/2 (coth x - 1) (d gamma/d beta)^2 with x = w0^2 gamma. DomainError for t <= 0.
double fisher_beta(const QubitSpec& q, const BathIntegralCache& bath, double t);
double fisher_beta(const QubitSpec& q, const BathSpec& b, double t);

/// S_f(w0, t) = 2 w0^2 (coth x - 1) gamma^2. DomainError for t <= 0.
double fisher_omega0(const QubitSpec& q, const BathIntegralCache& bath, double t);
double fisher_omega0(const QubitSpec& q, const BathSpec& b, double t);

double fisher_information(FisherParameter p, const QubitSpec& q, const BathIntegralCache& bath, double t);

struct FisherSummary {
    double s_max{};
    double t_max{};
    double area{};
    double area_coarse{};  // Simpson on every other node; |area - area_coarse| estimates the error
    double horizon{};  // after auto-extension
};

struct FisherSummaryOptions {
    double horizon{20.0};
    std::size_t grid{2000};  // coarse Simpson intervals; rounded up to even
    double t_start{1e-3};    // [0, t_start] counts as zero area
    double t_tol{1e-6};      // golden-section bracket width
};

/// Sample times used by fisher_summary for a given horizon (the refined
/// Simpson grid, 2*grid + 1 points). Callers may pre-register them in a cache.
std::vector<double> fisher_summary_nodes(const FisherSummaryOptions& opts);

/// Maximum, argmax and area of a Fisher curve. The coarse argmax on the
/// sample grid is refined by golden-section search; the area is composite
/// Simpson on the refined grid. The horizon doubles while curve(horizon) >
/// 1e-9 s_max. Throws EmptyCurve if the curve is zero on the whole grid.
FisherSummary fisher_summary(const std::function<double(double)>& curve, const FisherSummaryOptions& opts = {});
FisherSummary fisher_summary(const std::function<double(double)>& curve, double horizon, std::size_t grid);

}  // namespace nhq
