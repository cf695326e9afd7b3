#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace qdetect {

/// Raised when the two hypothesis states coincide and the weighted
/// difference operator has no positive eigenvalue.
struct DegenerateStates : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidProbability : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Conditional presence probabilities of one binary term feature:
/// p1_m0 = p(1 | non-relevant), p1_m1 = p(1 | relevant).
struct BernoulliPair {
    double p1_m0 = 0.0;
    double p1_m1 = 0.0;
};

/// Prior probability of non-relevance.
struct Prior {
    double xi = 0.5;
};

void validate(const BernoulliPair& p);
void validate(const Prior& xi);

/// Real unit vector in the 2-D occurrence space, coordinates on
/// the basis (|1>, |0>) in that order.
struct StateVector2 {
    double a0 = 0.0;
    double a1 = 0.0;

    double dot(const StateVector2& other) const {
        return a0 * other.a0 + a1 * other.a1;
    }
    double norm() const;
};

/// Symmetric 2x2 operator; only the three independent entries are stored.
struct HermitianOperator2 {
    double h00 = 0.0;
    double h01 = 0.0;
    double h11 = 0.0;
};

struct EigenPair {
    double value = 0.0;
    StateVector2 vector;
};

/// Orthonormal measurement vectors; mu1 is the acceptance direction,
/// carrying the positive eigenvalue of the difference operator.
struct MeasurementBasis {
    StateVector2 mu0;
    StateVector2 mu1;
    double eigenvalue1 = 0.0;
};

/// Acceptance region over the binary observable, as a bitmask:
/// bit 0 set means symbol 0 is accepted, bit 1 means symbol 1.
enum class Region : unsigned {
    none = 0u,
    zero = 1u,
    one = 2u,
    both = 3u,
};

bool region_contains(Region r, int symbol);
std::string region_to_string(Region r);

struct ClassicalDecision {
    Region region = Region::none;
    double p_false_alarm = 0.0;
    double p_detection = 0.0;
};

/// Everything the toolkit knows about one (term model, prior) instance.
struct DetectionReport {
    double lambda = 1.0;
    double gamma = 0.0;     // angle between |m0>, |m1>
    double theta = 0.0;     // optimal rotation angle
    double fidelity = 1.0;  // squared overlap of the two distributions
    ClassicalDecision classical;
    double p_error = 0.0;
    double p_correct = 1.0;
    std::optional<MeasurementBasis> basis;  // absent at the prior boundary
    double q_false_alarm = 0.0;
    double q_detection = 0.0;
    double q_error = 0.0;
    double q_correct = 1.0;
};

/// Maps the conditional distributions onto unit state vectors with
/// positive amplitudes: |m> = (sqrt(p(1|m)), sqrt(p(0|m))).
std::pair<StateVector2, StateVector2> embed(const BernoulliPair& p);

/// |<direction|state>|^2.
double born_probability(const StateVector2& state, const StateVector2& direction);

/// Squared overlap (sqrt(p0 p1) + sqrt((1-p0)(1-p1)))^2 of the two
/// conditional distributions.
double fidelity(const BernoulliPair& p);

/// Angle between two unit vectors, folded into [0, pi/2].
double overlap_angle(const StateVector2& m0, const StateVector2& m1);

/// theta = (pi/2 - gamma) / 2: the symmetric placement of the optimal
/// vectors around the state vectors.
double optimal_angle(double gamma);

/// |m1><m1| - lambda |m0><m0|.
HermitianOperator2 helstrom_operator(const StateVector2& m0,
                                     const StateVector2& m1, double lambda);

/// Closed-form eigendecomposition of a symmetric 2x2 operator.
/// Eigenvalues sorted descending; eigenvectors unit-norm, orthogonal,
/// sign-fixed so the first nonzero coordinate is nonnegative.
std::array<EigenPair, 2> eigendecompose(const HermitianOperator2& h);

/// Optimal measurement: mu1 is the eigenvector of the difference operator
/// with positive eigenvalue, mu0 the orthogonal one.
/// Throws DegenerateStates when no positive eigenvalue exists.
MeasurementBasis optimal_measurement(const StateVector2& m0,
                                     const StateVector2& m1, double lambda);

/// (Q_0, Q_d): Born probabilities of accepting relevance under each state.
std::pair<double, double> quantum_rates(const StateVector2& m0,
                                        const StateVector2& m1,
                                        const MeasurementBasis& basis);

/// Helstrom-bound error (Q_e, Q_c) from the prior and the fidelity.
std::pair<double, double> quantum_error(const Prior& xi, double fidelity_value);

/// Minimum-risk region of acceptance over {none, {0}, {1}, {0,1}}.
/// Ties are broken toward the smaller region, then lexicographically.
ClassicalDecision classical_optimal_detector(const BernoulliPair& p,
                                             const Prior& xi);

/// (P_e, P_c) = (xi P_0 + (1-xi)(1-P_d), 1 - P_e).
std::pair<double, double> classical_error(const Prior& xi,
                                          const ClassicalDecision& decision);

/// Full classical + quantum report. When lambda is not given it defaults
/// to the Bayes threshold xi/(1-xi). At xi in {0,1} the report follows the
/// boundary convention: both error probabilities are zero and no
/// measurement basis is produced.
DetectionReport detect(const BernoulliPair& p, const Prior& xi,
                       std::optional<double> lambda = std::nullopt);

}  // namespace qdetect
