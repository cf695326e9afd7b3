#include "qdetect/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qdetect {

namespace {

constexpr double kEigTol = 1e-12;

bool is_probability(double v) { return v >= 0.0 && v <= 1.0 && std::isfinite(v); }

StateVector2 normalized(double x, double y) {
    const double n = std::hypot(x, y);
    return {x / n, y / n};
}

// First nonzero coordinate made nonnegative.
StateVector2 sign_fixed(StateVector2 v) {
    const double lead = std::abs(v.a0) > 1e-15 ? v.a0 : v.a1;
    if (lead < 0.0) {
        v.a0 = -v.a0;
        v.a1 = -v.a1;
    }
    return v;
}

}  // namespace

void validate(const BernoulliPair& p) {
    if (!is_probability(p.p1_m0) || !is_probability(p.p1_m1)) {
        throw InvalidProbability("probability out of range");
    }
}

void validate(const Prior& xi) {
    if (!is_probability(xi.xi)) {
        throw InvalidProbability("prior out of range");
    }
}

double StateVector2::norm() const { return std::hypot(a0, a1); }

bool region_contains(Region r, int symbol) {
    return (static_cast<unsigned>(r) >> symbol) & 1u;
}

std::string region_to_string(Region r) {
    switch (r) {
        case Region::none: return "{}";
        case Region::zero: return "{0}";
        case Region::one: return "{1}";
        case Region::both: return "{0,1}";
    }
    return "?";
}

std::pair<StateVector2, StateVector2> embed(const BernoulliPair& p) {
    validate(p);
    StateVector2 m0{std::sqrt(p.p1_m0), std::sqrt(1.0 - p.p1_m0)};
    StateVector2 m1{std::sqrt(p.p1_m1), std::sqrt(1.0 - p.p1_m1)};
    return {m0, m1};
}

double born_probability(const StateVector2& state, const StateVector2& direction) {
    const double amp = state.dot(direction);
    return std::min(1.0, amp * amp);
}

double fidelity(const BernoulliPair& p) {
    validate(p);
    const double s = std::sqrt(p.p1_m0 * p.p1_m1) +
                     std::sqrt((1.0 - p.p1_m0) * (1.0 - p.p1_m1));
    return std::min(1.0, s * s);
}

double overlap_angle(const StateVector2& m0, const StateVector2& m1) {
    const double c = std::min(1.0, std::abs(m0.dot(m1)));
    return std::acos(c);
}

double optimal_angle(double gamma) {
    return 0.5 * (M_PI / 2.0 - gamma);
}

HermitianOperator2 helstrom_operator(const StateVector2& m0,
                                     const StateVector2& m1, double lambda) {
    return {m1.a0 * m1.a0 - lambda * m0.a0 * m0.a0,
            m1.a0 * m1.a1 - lambda * m0.a0 * m0.a1,
            m1.a1 * m1.a1 - lambda * m0.a1 * m0.a1};
}

std::array<EigenPair, 2> eigendecompose(const HermitianOperator2& h) {
    const double half_tr = 0.5 * (h.h00 + h.h11);
    const double half_diff = 0.5 * (h.h00 - h.h11);
    const double disc = std::hypot(half_diff, h.h01);
    const double hi = half_tr + disc;
    const double lo = half_tr - disc;

    if (disc <= kEigTol) {
        // Degenerate spectrum: any orthonormal pair works, pick the
        // standard basis for determinism.
        return {EigenPair{hi, {1.0, 0.0}}, EigenPair{lo, {0.0, 1.0}}};
    }

    StateVector2 v_hi;
    if (std::abs(h.h01) <= kEigTol) {
        v_hi = h.h00 >= h.h11 ? StateVector2{1.0, 0.0} : StateVector2{0.0, 1.0};
    } else {
        // (h00 - lambda) x + h01 y = 0; pick the better-conditioned row.
        const StateVector2 row1{h.h01, hi - h.h00};
        const StateVector2 row2{hi - h.h11, h.h01};
        v_hi = row1.norm() >= row2.norm()
                   ? normalized(row1.a0, row1.a1)
                   : normalized(row2.a0, row2.a1);
    }
    v_hi = sign_fixed(v_hi);
    const StateVector2 v_lo = sign_fixed({-v_hi.a1, v_hi.a0});
    return {EigenPair{hi, v_hi}, EigenPair{lo, v_lo}};
}

MeasurementBasis optimal_measurement(const StateVector2& m0,
                                     const StateVector2& m1, double lambda) {
    const auto eig = eigendecompose(helstrom_operator(m0, m1, lambda));
    if (eig[0].value <= kEigTol) {
        throw DegenerateStates("hypothesis states are indistinguishable");
    }
    return {eig[1].vector, eig[0].vector, eig[0].value};
}

std::pair<double, double> quantum_rates(const StateVector2& m0,
                                        const StateVector2& m1,
                                        const MeasurementBasis& basis) {
    return {born_probability(m0, basis.mu1), born_probability(m1, basis.mu1)};
}

std::pair<double, double> quantum_error(const Prior& xi, double fidelity_value) {
    validate(xi);
    const double radicand =
        std::max(0.0, 1.0 - 4.0 * xi.xi * (1.0 - xi.xi) * fidelity_value);
    const double qe = 0.5 * (1.0 - std::sqrt(radicand));
    return {qe, 1.0 - qe};
}

ClassicalDecision classical_optimal_detector(const BernoulliPair& p,
                                             const Prior& xi) {
    validate(p);
    validate(xi);
    ClassicalDecision best;
    double best_risk = std::numeric_limits<double>::infinity();
    // Iteration order encodes the tie break: smaller region first, then
    // lexicographic.
    for (Region r : {Region::none, Region::zero, Region::one, Region::both}) {
        double p0 = 0.0, pd = 0.0;
        if (region_contains(r, 0)) {
            p0 += 1.0 - p.p1_m0;
            pd += 1.0 - p.p1_m1;
        }
        if (region_contains(r, 1)) {
            p0 += p.p1_m0;
            pd += p.p1_m1;
        }
        const double risk = xi.xi * p0 + (1.0 - xi.xi) * (1.0 - pd);
        if (risk < best_risk) {
            best_risk = risk;
            best = {r, p0, pd};
        }
    }
    return best;
}

std::pair<double, double> classical_error(const Prior& xi,
                                          const ClassicalDecision& decision) {
    validate(xi);
    const double pe = xi.xi * decision.p_false_alarm +
                      (1.0 - xi.xi) * (1.0 - decision.p_detection);
    return {pe, 1.0 - pe};
}

DetectionReport detect(const BernoulliPair& p, const Prior& xi,
                       std::optional<double> lambda) {
    validate(p);
    validate(xi);

    DetectionReport report;
    const auto [m0, m1] = embed(p);
    report.gamma = overlap_angle(m0, m1);
    report.theta = optimal_angle(report.gamma);
    report.fidelity = fidelity(p);
    report.classical = classical_optimal_detector(p, xi);
    std::tie(report.p_error, report.p_correct) =
        classical_error(xi, report.classical);

    const bool boundary = xi.xi <= 0.0 || xi.xi >= 1.0;
    if (boundary && !lambda) {
        // Boundary convention: the Bayes rule degenerates to a constant
        // decision that is never wrong under the prior.
        report.lambda = xi.xi <= 0.0 ? 0.0
                                     : std::numeric_limits<double>::infinity();
        report.q_false_alarm = xi.xi <= 0.0 ? 1.0 : 0.0;
        report.q_detection = report.q_false_alarm;
        report.q_error = 0.0;
        report.q_correct = 1.0;
        return report;
    }

    report.lambda = lambda ? *lambda : xi.xi / (1.0 - xi.xi);
    try {
        report.basis = optimal_measurement(m0, m1, report.lambda);
        std::tie(report.q_false_alarm, report.q_detection) =
            quantum_rates(m0, m1, *report.basis);
    } catch (const DegenerateStates&) {
        // Indistinguishable hypotheses: constant rejection, no basis.
        report.q_false_alarm = 0.0;
        report.q_detection = 0.0;
    }
    std::tie(report.q_error, report.q_correct) =
        quantum_error(xi, report.fidelity);
    return report;
}

}  // namespace qdetect
