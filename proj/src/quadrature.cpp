#include "interlink/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "interlink/errors.hpp"

namespace interlink
{

namespace
{

// Kronrod abscissae on [0, 1); odd indices are the embedded Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780, 0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment
{
    double lower;
    double upper;
    double value;
    double error;

    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment evaluate(const std::function<double(double)>& f, double lower, double upper)
{
    const double centre = 0.5 * (lower + upper);
    const double half = 0.5 * (upper - lower);

    const double fc = f(centre);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        const double pair = f(centre - dx) + f(centre + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1) {
            gauss += kGaussWeights[j / 2] * pair;
        }
    }
    kronrod *= half;
    gauss *= half;
    if (!std::isfinite(kronrod)) {
        throw NumericError("integrand is not finite on [" + std::to_string(lower) + ", " + std::to_string(upper) + "]");
    }
    return Segment{lower, upper, kronrod, std::abs(kronrod - gauss)};
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lower, double upper,
                                    double abs_tol, std::size_t max_intervals)
{
    if (!(abs_tol > 0.0)) {
        throw ArgumentError("quadrature tolerance must be positive");
    }
    std::priority_queue<Segment> queue;
    queue.push(evaluate(f, lower, upper));
    double total_error = queue.top().error;

    while (total_error > abs_tol) {
        if (queue.size() >= max_intervals) {
            throw ConvergenceError("quadrature did not reach tolerance " + std::to_string(abs_tol) + " within "
                                   + std::to_string(max_intervals) + " intervals");
        }
        const Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.lower + worst.upper);
        const Segment left = evaluate(f, worst.lower, mid);
        const Segment right = evaluate(f, mid, worst.upper);
        queue.push(left);
        queue.push(right);

        // Re-sum instead of updating incrementally so cancellation cannot drive the total negative.
        total_error = 0.0;
        auto copy = queue;
        while (!copy.empty()) {
            total_error += copy.top().error;
            copy.pop();
        }
    }

    // Sum smallest contributions first.
    std::vector<Segment> segments;
    segments.reserve(queue.size());
    while (!queue.empty()) {
        segments.push_back(queue.top());
        queue.pop();
    }
    QuadratureResult result;
    result.intervals = segments.size();
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
        result.error_estimate += it->error;
    }
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
        result.value += it->value;
    }
    return result;
}

} // namespace interlink
