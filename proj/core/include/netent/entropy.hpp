#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "netent/graph.hpp"

namespace netent {

/// |q - 1| at or below this evaluates the q = 1 (Shannon) limit instead of
/// the closed form, whose denominator vanishes there.
inline constexpr double kShannonBranchTol = 1e-12;

/// Absolute slack when deciding whether a grid point still lies in [q_min, q_max].
inline constexpr double kGridTol = 1e-9;

/// Discrete probability distribution: finite entries >= 0 that sum to 1
/// within 1e-12. Validated on construction.
class ProbabilityVector {
public:
    static constexpr double kSumTol = 1e-12;

    explicit ProbabilityVector(std::vector<double> probs);

    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t i) const noexcept { return probs_[i]; }
    const std::vector<double>& values() const noexcept { return probs_; }

    auto begin() const noexcept { return probs_.begin(); }
    auto end() const noexcept { return probs_.end(); }

private:
    std::vector<double> probs_;
};

/// One entropy evaluation: index q, constant k, and the value S_q.
struct EntropyPoint {
    double q = 0.0;
    double k = 1.0;
    double value = 0.0;
};

/// Where a sweep came from and how it was configured.
struct SweepProvenance {
    std::string input;  ///< source identifier (file path, generator spec); may be empty
    std::size_t nodes = 0;
    std::size_t edges = 0;
    double q_min = 0.0;
    double q_max = 0.0;
    double q_step = 0.0;
    double k = 1.0;
};

/// Entropy evaluated over an ascending q grid.
struct SweepResult {
    std::vector<EntropyPoint> points;
    SweepProvenance source;
};

/// Degrees divided by the total degree. Throws ZeroTotalDegreeError on a
/// graph with no edges.
ProbabilityVector normalized_degrees(const Graph& g);

/// q-logarithm: (x^(1-q) - 1) / (1 - q), reducing to ln x at q = 1.
/// Requires x > 0.
double q_log(double x, double q);

/// Boltzmann-Gibbs entropy -k * sum p_i ln p_i. Zero entries contribute 0.
double shannon_entropy(const ProbabilityVector& p, double k = 1.0);

/// Tsallis entropy k * (1 - sum p_i^q) / (q - 1).
///
/// Zero entries are excluded from the sum (the 0^q = 0 convention for q > 0;
/// at q = 0 only nonzero entries count). |q - 1| <= 1e-12 returns the Shannon
/// limit. q < 0 with a zero entry throws NegativeQZeroProbError.
double tsallis_entropy(const ProbabilityVector& p, double q, double k = 1.0);

/// Same quantity via the q-logarithm: k * sum p_i ln_q(1 / p_i).
/// Requires strictly positive entries.
double tsallis_entropy_qlog_form(const ProbabilityVector& p, double q, double k = 1.0);

/// Tsallis entropy of a graph's normalized degree distribution.
EntropyPoint network_tsallis_entropy(const Graph& g, double q, double k = 1.0);

/// Evaluates network entropy at q_min, q_min + q_step, ... up to and
/// including q_max (within the grid tolerance). Grid values come from the
/// integer step index, not repeated addition.
SweepResult sweep(const Graph& g, double q_min, double q_max, double q_step, double k = 1.0);

}  // namespace netent
