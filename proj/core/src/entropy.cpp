#include "netent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "netent/errors.hpp"

namespace netent {

namespace {

// Neumaier-compensated accumulator. Keeps the entropy sums accurate to a few
// ulps independent of vector length, which the tight q->1 limit checks need.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double flush_negative_zero(double x) noexcept {
    return x == 0.0 ? 0.0 : x;
}

void require_valid_k(double k) {
    if (!std::isfinite(k) || k <= 0.0) {
        throw DomainError("k must be a finite positive real");
    }
}

void require_valid_q(double q) {
    if (!std::isfinite(q)) {
        throw DomainError("q must be a finite real");
    }
}

// sum of count * value^q over nonzero probabilities, grouped so that repeated
// degrees cost one pow each.
double grouped_power_sum(const std::vector<std::pair<double, double>>& groups, double q) {
    CompensatedSum s;
    for (const auto& [value, count] : groups) {
        s.add(count * std::pow(value, q));
    }
    return s.value();
}

std::vector<std::pair<double, double>> nonzero_groups(const ProbabilityVector& p) {
    std::vector<double> sorted;
    sorted.reserve(p.size());
    for (double v : p) {
        if (v != 0.0) {
            sorted.push_back(v);
        }
    }
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<double, double>> groups;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) {
            ++j;
        }
        groups.emplace_back(sorted[i], static_cast<double>(j - i));
        i = j;
    }
    return groups;
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw DomainError("probability vector must be non-empty");
    }
    CompensatedSum s;
    for (double v : probs_) {
        if (!std::isfinite(v) || v < 0.0) {
            throw DomainError("probabilities must be finite and >= 0");
        }
        s.add(v);
    }
    if (std::abs(s.value() - 1.0) > kSumTol) {
        throw DomainError("probabilities must sum to 1 within 1e-12");
    }
}

ProbabilityVector normalized_degrees(const Graph& g) {
    const double total = static_cast<double>(g.total_degree());
    if (total == 0.0) {
        throw ZeroTotalDegreeError();
    }
    std::vector<double> probs;
    probs.reserve(g.node_count());
    for (int d : g.degree_sequence()) {
        probs.push_back(static_cast<double>(d) / total);
    }
    return ProbabilityVector(std::move(probs));
}

double q_log(double x, double q) {
    require_valid_q(q);
    if (!(x > 0.0)) {
        throw DomainError("q_log requires x > 0");
    }
    if (std::abs(q - 1.0) <= kShannonBranchTol) {
        return std::log(x);
    }
    return (std::pow(x, 1.0 - q) - 1.0) / (1.0 - q);
}

double shannon_entropy(const ProbabilityVector& p, double k) {
    require_valid_k(k);
    CompensatedSum s;
    for (double v : p) {
        if (v > 0.0) {
            s.add(v * std::log(v));
        }
    }
    return flush_negative_zero(-k * s.value());
}

double tsallis_entropy(const ProbabilityVector& p, double q, double k) {
    require_valid_k(k);
    require_valid_q(q);
    if (q < 0.0) {
        for (double v : p) {
            if (v == 0.0) {
                throw NegativeQZeroProbError();
            }
        }
    }
    if (std::abs(q - 1.0) <= kShannonBranchTol) {
        return shannon_entropy(p, k);
    }
    CompensatedSum s;
    for (double v : p) {
        if (v != 0.0) {
            s.add(std::pow(v, q));
        }
    }
    return flush_negative_zero(k * (1.0 - s.value()) / (q - 1.0));
}

double tsallis_entropy_qlog_form(const ProbabilityVector& p, double q, double k) {
    require_valid_k(k);
    require_valid_q(q);
    for (double v : p) {
        if (v <= 0.0) {
            throw DomainError("q-log form requires strictly positive probabilities");
        }
    }
    CompensatedSum s;
    for (double v : p) {
        s.add(v * q_log(1.0 / v, q));
    }
    return flush_negative_zero(k * s.value());
}

EntropyPoint network_tsallis_entropy(const Graph& g, double q, double k) {
    const ProbabilityVector p = normalized_degrees(g);
    return EntropyPoint{q, k, tsallis_entropy(p, q, k)};
}

SweepResult sweep(const Graph& g, double q_min, double q_max, double q_step, double k) {
    require_valid_k(k);
    if (!std::isfinite(q_min) || !std::isfinite(q_max)) {
        throw InvalidRangeError("q_min and q_max must be finite");
    }
    if (q_min > q_max) {
        throw InvalidRangeError("q_min must not exceed q_max");
    }
    if (!(q_step > 0.0) || !std::isfinite(q_step)) {
        throw InvalidRangeError("q_step must be a positive real");
    }
    const double span = (q_max - q_min) / q_step;
    if (span > 16'000'000.0) {
        throw InvalidRangeError("q grid has too many points");
    }

    const ProbabilityVector p = normalized_degrees(g);
    const auto groups = nonzero_groups(p);
    const bool has_zero_entry =
        std::any_of(p.begin(), p.end(), [](double v) { return v == 0.0; });

    const auto steps = static_cast<long long>(std::floor(span + kGridTol));

    SweepResult result;
    result.points.reserve(static_cast<std::size_t>(steps) + 1);
    for (long long i = 0; i <= steps; ++i) {
        const double q = q_min + static_cast<double>(i) * q_step;
        double value;
        if (std::abs(q - 1.0) <= kShannonBranchTol) {
            value = shannon_entropy(p, k);
        } else {
            if (q < 0.0 && has_zero_entry) {
                throw NegativeQZeroProbError();
            }
            value = flush_negative_zero(k * (1.0 - grouped_power_sum(groups, q)) / (q - 1.0));
        }
        result.points.push_back(EntropyPoint{q, k, value});
    }

    result.source.nodes = g.node_count();
    result.source.edges = g.edge_count();
    result.source.q_min = q_min;
    result.source.q_max = q_max;
    result.source.q_step = q_step;
    result.source.k = k;
    return result;
}

}  // namespace netent
