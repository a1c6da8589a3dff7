#include "nhq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "nhq/errors.hpp"

namespace nhq::quad {

namespace {

constexpr std::size_t kNodes = 21;

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

struct ByError {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

class Rule {
public:
    Rule()
        : kronrod_x_(boost::math::quadrature::gauss_kronrod<double, kNodes>::abscissa()),
          kronrod_w_(boost::math::quadrature::gauss_kronrod<double, kNodes>::weights()),
          gauss_w_(boost::math::quadrature::gauss<double, 10>::weights()) {}

    // Node layout per panel: c, then (c - h x_j, c + h x_j) for j = 1..10.
    void nodes(const Panel& p, double* out) const {
        const double c = 0.5 * (p.a + p.b);
        const double h = 0.5 * (p.b - p.a);
        out[0] = c;
        for (std::size_t j = 1; j < kronrod_x_.size(); ++j) {
            out[2 * j - 1] = c - h * kronrod_x_[j];
            out[2 * j] = c + h * kronrod_x_[j];
        }
    }

    void estimate(Panel& p, const double* f) const {
        const double h = 0.5 * (p.b - p.a);
        double kronrod = kronrod_w_[0] * f[0];
        double gauss = 0.0;
        for (std::size_t j = 1; j < kronrod_x_.size(); ++j) {
            const double pair = f[2 * j - 1] + f[2 * j];
            kronrod += kronrod_w_[j] * pair;
            if (j % 2 == 1) gauss += gauss_w_[j / 2] * pair;
        }
        p.value = h * kronrod;
        p.error = std::abs(h * (kronrod - gauss));
    }

private:
    const std::array<double, 11>& kronrod_x_;
    const std::array<double, 11>& kronrod_w_;
    const std::array<double, 5>& gauss_w_;
};

const Rule& rule() {
    static const Rule r;
    return r;
}

void evaluate_panels(const BatchIntegrand& f, std::span<Panel> panels, std::vector<double>& x,
                     std::vector<double>& fx) {
    x.resize(panels.size() * kNodes);
    fx.resize(x.size());
    for (std::size_t i = 0; i < panels.size(); ++i) rule().nodes(panels[i], x.data() + i * kNodes);
    f(x, fx);
    for (std::size_t i = 0; i < panels.size(); ++i) rule().estimate(panels[i], fx.data() + i * kNodes);
}

double tolerance(const AdaptiveOptions& o, double value) { return std::max(o.abs_tol, o.rel_tol * std::abs(value)); }

}  // namespace

Result integrate(const BatchIntegrand& f, std::span<const double> breakpoints, const AdaptiveOptions& opts) {
    if (breakpoints.size() < 2) throw DomainError("quad::integrate needs at least two breakpoints");
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i] > breakpoints[i - 1])) throw DomainError("quad::integrate: breakpoints must increase");
    }

    std::vector<Panel> heap;
    heap.reserve(breakpoints.size() - 1 + 2 * opts.max_bisections);
    for (std::size_t i = 1; i < breakpoints.size(); ++i) heap.push_back({breakpoints[i - 1], breakpoints[i], 0.0, 0.0});

    std::vector<double> x;
    std::vector<double> fx;
    evaluate_panels(f, heap, x, fx);

    Result result;
    result.evaluations = x.size();

    double value = 0.0;
    double error = 0.0;
    for (const Panel& p : heap) {
        value += p.value;
        error += p.error;
    }
    std::make_heap(heap.begin(), heap.end(), ByError{});

    // Panels too narrow to split further keep their error but leave the heap.
    std::vector<Panel> frozen;
    double frozen_error = 0.0;
    bool stalled = false;

    while (error > tolerance(opts, value)) {
        if (heap.empty()) {
            stalled = true;
            break;
        }
        if (result.bisections >= opts.max_bisections) {
            std::ostringstream msg;
            msg << "adaptive quadrature exhausted " << opts.max_bisections << " bisections (estimate " << value
                << ", error " << error << ")";
            throw QuadratureFailure(msg.str());
        }
        std::pop_heap(heap.begin(), heap.end(), ByError{});
        const Panel worst = heap.back();
        heap.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            worst.b - worst.a < 64.0 * std::numeric_limits<double>::epsilon() * std::abs(mid)) {
            frozen.push_back(worst);
            frozen_error += worst.error;
            if (frozen_error > tolerance(opts, value)) {
                stalled = true;
                break;
            }
            continue;
        }

        Panel children[2] = {{worst.a, mid, 0.0, 0.0}, {mid, worst.b, 0.0, 0.0}};
        evaluate_panels(f, children, x, fx);
        result.evaluations += x.size();
        ++result.bisections;

        value += children[0].value + children[1].value - worst.value;
        error += children[0].error + children[1].error - worst.error;
        for (const Panel& c : children) {
            heap.push_back(c);
            std::push_heap(heap.begin(), heap.end(), ByError{});
        }
    }

    // Final sums in panel order so the result does not depend on heap layout.
    heap.insert(heap.end(), frozen.begin(), frozen.end());
    std::sort(heap.begin(), heap.end(), [](const Panel& p, const Panel& q) { return p.a < q.a; });
    double sum = 0.0;
    double comp = 0.0;
    double err = 0.0;
    for (const Panel& p : heap) {
        const double y = p.value - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        err += p.error;
    }
    result.value = sum;
    result.abs_error = err;
    if (stalled && err > tolerance(opts, sum)) {
        std::ostringstream msg;
        msg << "adaptive quadrature could not reach tolerance (estimate " << sum << ", error " << err << ")";
        throw QuadratureFailure(msg.str());
    }
    return result;
}

}  // namespace nhq::quad
