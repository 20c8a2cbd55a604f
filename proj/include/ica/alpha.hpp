#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ica/errors.hpp"

namespace ica {

// One unit of judgment after projection. Weight is a positive integer:
// 1 per quotation by default, or the quotation length in atomic units.
struct EvalItem {
    std::string id;
    std::int64_t weight = 1;

    bool operator==(const EvalItem&) const = default;
};

// Label-level judgments: judges x items -> sets of label indices.
// An empty set means the judge left the item unevaluated.
struct EvaluationSet {
    std::vector<std::string> labels;
    std::vector<std::string> judges;
    std::vector<EvalItem> items;
    // evaluations[judge][item] = strictly increasing label indices (a set).
    std::vector<std::vector<std::vector<std::uint32_t>>> evaluations;

    std::size_t label_count() const { return labels.size(); }

    // Throws Error(Schema) when shapes, weights, or label sets are malformed.
    void check() const;
};

// Pseudo-metric over labels: symmetric, zero diagonal, non-negative,
// triangle inequality. Stored as a dense row-major table.
class Metric {
public:
    static Metric discrete(std::size_t label_count);
    static Metric from_table(std::size_t label_count, std::vector<double> distances);

    std::size_t size() const { return size_; }
    double operator()(std::size_t i, std::size_t j) const { return table_[i * size_ + j]; }
    bool is_discrete() const;

private:
    Metric(std::size_t size, std::vector<double> table)
        : size_(size), table_(std::move(table)) {}

    std::size_t size_;
    std::vector<double> table_;
};

// delta(i,j) = 1 for i != j, 0 on the diagonal. Throws EmptyLabelSet.
Metric discrete_metric(const std::vector<std::string>& labels);

// Pair counts are exact integers; only the derived ratios are floating point.
struct CoincidenceCounts {
    std::vector<std::int64_t> observed;   // N x N row-major, o(i,j)
    std::vector<std::int64_t> marginals;  // t_k
    std::int64_t total = 0;               // t
    std::int64_t paired_item_count = 0;   // items with >= 2 non-empty evaluations
    std::int64_t multi_judge_items = 0;   // items with >= 3 non-empty evaluations
};

// o(i,j) = weighted count of ordered evaluation pairs (w, w') by distinct
// judges on one item with l_i in w and l_j in w'. Items with fewer than two
// non-empty evaluations contribute nothing.
CoincidenceCounts observed_coincidences(const EvaluationSet& evals);

// e(i,j) = t_i * t_j / (t - 1) off the diagonal, t_i * (t_i - 1) / (t - 1)
// on it. Throws InsufficientData when t < 2.
std::vector<double> expected_coincidences(const std::vector<std::int64_t>& marginals,
                                          std::int64_t total);

struct AlphaResult {
    std::vector<std::string> labels;
    std::vector<std::int64_t> observed;   // N x N row-major
    std::vector<double> expected;         // N x N row-major
    std::vector<std::int64_t> marginals;  // t_k
    std::int64_t total = 0;               // t
    double observed_disagreement = 0.0;   // D_o
    double expected_disagreement = 0.0;   // D_e
    double observed_agreement = 0.0;      // A_o = sum of observed diagonal
    double expected_agreement = 0.0;      // A_e = sum of expected diagonal
    double alpha = 1.0;                   // 1.0 when degenerate
    bool degenerate = false;              // D_e == 0: no variability to disagree on
    std::int64_t paired_item_count = 0;
    std::int64_t multi_judge_items = 0;
};

// alpha = 1 - D_o / D_e. Zero expected disagreement is not an error: the
// result is flagged degenerate and reported as 1.0.
AlphaResult compute_alpha(const EvaluationSet& evals, const Metric& metric);

// Row-major matrices in label order, full precision.
std::string serialize_alpha_json(const AlphaResult& result);

}  // namespace ica
