#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ica/corpus.hpp"
#include "ica/variants.hpp"

namespace ica {

// Rule-of-thumb reliability bands:
//   insufficient < 0.667 <= tentative < 0.8 <= reliable
enum class Reliability { Insufficient, Tentative, Reliable };

Reliability classify(double alpha);
std::string_view to_string(Reliability level);

struct ReportCell {
    double value = 1.0;
    bool degenerate = false;
    std::int64_t paired_item_count = 0;

    Reliability classification() const { return classify(value); }
};

// Renders "1.0 (N/A)" for degenerate cells, 3 decimals otherwise.
std::string format_cell(const ReportCell& cell);

struct ReportRow {
    std::string domain;
    std::vector<ReportCell> binary;  // one per iteration
    std::vector<ReportCell> cu;      // one per iteration
};

struct ReliabilityReport {
    std::vector<std::string> iterations;   // labels, invocation order
    std::vector<ReportRow> rows;           // codebook domain order
    std::vector<ReportCell> cu_across;     // global coefficient per iteration
};

// Per-domain binary and cu coefficients plus the global cross-domain row for
// each labeled iteration corpus. All corpora must share the same domain ids;
// otherwise throws CodebookMismatch. Coefficients are computed concurrently
// per domain and assembled in codebook order.
ReliabilityReport reliability_report(
    const std::vector<std::pair<std::string, Corpus>>& iteration_corpora,
    const std::vector<std::string>& coders = {},
    Weighting weighting = Weighting::Uniform, Scope scope = Scope::Whole);

std::string report_table(const ReliabilityReport& report, bool color = false);
std::string report_csv(const ReliabilityReport& report);
std::string report_json(const ReliabilityReport& report);

}  // namespace ica
