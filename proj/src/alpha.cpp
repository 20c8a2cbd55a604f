#include "ica/alpha.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "json.hpp"

namespace ica {

void EvaluationSet::check() const {
    if (evaluations.size() != judges.size()) {
        throw Error(ErrorCode::Schema, "evaluation table has one row per judge");
    }
    for (const auto& item : items) {
        if (item.weight < 1) {
            throw Error(ErrorCode::Schema,
                        "item '" + item.id + "' has non-positive weight");
        }
    }
    for (const auto& row : evaluations) {
        if (row.size() != items.size()) {
            throw Error(ErrorCode::Schema, "evaluation row has one entry per item");
        }
        for (const auto& eval : row) {
            for (std::size_t k = 0; k < eval.size(); ++k) {
                if (eval[k] >= labels.size()) {
                    throw Error(ErrorCode::Schema, "evaluation label index out of range");
                }
                if (k > 0 && eval[k] <= eval[k - 1]) {
                    throw Error(ErrorCode::Schema,
                                "evaluation label sets must be strictly increasing");
                }
            }
        }
    }
}

Metric Metric::discrete(std::size_t label_count) {
    std::vector<double> table(label_count * label_count, 1.0);
    for (std::size_t i = 0; i < label_count; ++i) table[i * label_count + i] = 0.0;
    return Metric(label_count, std::move(table));
}

Metric Metric::from_table(std::size_t label_count, std::vector<double> distances) {
    if (distances.size() != label_count * label_count) {
        throw Error(ErrorCode::InvalidMetric, "distance table size mismatch");
    }
    for (std::size_t i = 0; i < label_count; ++i) {
        if (distances[i * label_count + i] != 0.0) {
            throw Error(ErrorCode::InvalidMetric, "metric diagonal must be zero");
        }
        for (std::size_t j = 0; j < label_count; ++j) {
            const double d = distances[i * label_count + j];
            if (d < 0.0) throw Error(ErrorCode::InvalidMetric, "metric must be non-negative");
            if (d != distances[j * label_count + i]) {
                throw Error(ErrorCode::InvalidMetric, "metric must be symmetric");
            }
        }
    }
    for (std::size_t i = 0; i < label_count; ++i) {
        for (std::size_t j = 0; j < label_count; ++j) {
            for (std::size_t k = 0; k < label_count; ++k) {
                if (distances[i * label_count + j] >
                    distances[i * label_count + k] + distances[k * label_count + j] + 1e-12) {
                    throw Error(ErrorCode::InvalidMetric,
                                "metric violates the triangle inequality");
                }
            }
        }
    }
    return Metric(label_count, std::move(distances));
}

bool Metric::is_discrete() const {
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = 0; j < size_; ++j) {
            if ((*this)(i, j) != (i == j ? 0.0 : 1.0)) return false;
        }
    }
    return true;
}

Metric discrete_metric(const std::vector<std::string>& labels) {
    if (labels.empty()) throw Error(ErrorCode::EmptyLabelSet, "label set is empty");
    return Metric::discrete(labels.size());
}

CoincidenceCounts observed_coincidences(const EvaluationSet& evals) {
    evals.check();
    const std::size_t n = evals.labels.size();
    const std::size_t judges = evals.judges.size();
    CoincidenceCounts counts;
    counts.observed.assign(n * n, 0);
    counts.marginals.assign(n, 0);

    for (std::size_t item = 0; item < evals.items.size(); ++item) {
        const std::int64_t w = evals.items[item].weight;
        std::size_t voters = 0;
        for (std::size_t j = 0; j < judges; ++j) {
            if (!evals.evaluations[j][item].empty()) ++voters;
        }
        if (voters >= 2) ++counts.paired_item_count;
        if (voters >= 3) ++counts.multi_judge_items;
        for (std::size_t a = 0; a < judges; ++a) {
            const auto& first = evals.evaluations[a][item];
            if (first.empty()) continue;
            for (std::size_t b = 0; b < judges; ++b) {
                if (a == b) continue;
                const auto& second = evals.evaluations[b][item];
                for (std::uint32_t li : first) {
                    for (std::uint32_t lj : second) {
                        counts.observed[std::size_t(li) * n + lj] += w;
                    }
                }
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) counts.marginals[k] += counts.observed[k * n + j];
    }
    counts.total =
        std::accumulate(counts.marginals.begin(), counts.marginals.end(), std::int64_t{0});
    return counts;
}

std::vector<double> expected_coincidences(const std::vector<std::int64_t>& marginals,
                                          std::int64_t total) {
    if (total < 2) {
        throw Error(ErrorCode::InsufficientData,
                    "expected coincidences need at least two judgments");
    }
    const std::size_t n = marginals.size();
    std::vector<double> expected(n * n, 0.0);
    const double denom = double(total - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            expected[i * n + j] =
                i == j ? double(marginals[i]) * double(marginals[i] - 1) / denom
                       : double(marginals[i]) * double(marginals[j]) / denom;
        }
    }
    return expected;
}

AlphaResult compute_alpha(const EvaluationSet& evals, const Metric& metric) {
    const std::size_t n = evals.labels.size();
    if (metric.size() != n) {
        throw Error(ErrorCode::InvalidMetric, "metric size must match the label set");
    }
    CoincidenceCounts counts = observed_coincidences(evals);

    AlphaResult result;
    result.labels = evals.labels;
    result.observed = counts.observed;
    result.marginals = counts.marginals;
    result.total = counts.total;
    result.paired_item_count = counts.paired_item_count;
    result.multi_judge_items = counts.multi_judge_items;
    result.expected.assign(n * n, 0.0);

    if (counts.total < 2) {
        // nothing was ever paired: no variability, flagged degenerate
        result.degenerate = true;
        result.alpha = 1.0;
        return result;
    }

    result.expected = expected_coincidences(counts.marginals, counts.total);
    double d_obs = 0.0;
    double d_exp = 0.0;
    double a_obs = 0.0;
    double a_exp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        a_obs += double(result.observed[i * n + i]);
        a_exp += result.expected[i * n + i];
        for (std::size_t j = 0; j < n; ++j) {
            d_obs += double(result.observed[i * n + j]) * metric(i, j);
            d_exp += result.expected[i * n + j] * metric(i, j);
        }
    }
    result.observed_disagreement = d_obs;
    result.expected_disagreement = d_exp;
    result.observed_agreement = a_obs;
    result.expected_agreement = a_exp;
    if (d_exp <= 0.0) {
        result.degenerate = true;
        result.alpha = 1.0;
    } else {
        result.alpha = 1.0 - d_obs / d_exp;
    }
    return result;
}

std::string serialize_alpha_json(const AlphaResult& result) {
    nlohmann::json j;
    j["labels"] = result.labels;
    j["observed"] = result.observed;
    j["expected"] = result.expected;
    j["marginals"] = result.marginals;
    j["total"] = result.total;
    j["observed_disagreement"] = result.observed_disagreement;
    j["expected_disagreement"] = result.expected_disagreement;
    j["observed_agreement"] = result.observed_agreement;
    j["expected_agreement"] = result.expected_agreement;
    j["alpha"] = result.alpha;
    j["degenerate"] = result.degenerate;
    j["paired_item_count"] = result.paired_item_count;
    return j.dump(2) + "\n";
}

}  // namespace ica
