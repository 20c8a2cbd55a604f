#include "ica/report.hpp"

#include <future>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace ica {

Reliability classify(double alpha) {
    if (alpha < 0.667) return Reliability::Insufficient;
    if (alpha < 0.8) return Reliability::Tentative;
    return Reliability::Reliable;
}

std::string_view to_string(Reliability level) {
    switch (level) {
        case Reliability::Insufficient: return "insufficient";
        case Reliability::Tentative: return "tentative";
        case Reliability::Reliable: return "reliable";
    }
    return "unknown";
}

std::string format_cell(const ReportCell& cell) {
    if (cell.degenerate) return "1.0 (N/A)";
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << cell.value;
    return out.str();
}

namespace {

ReportCell cell_from(const AlphaResult& result) {
    return {result.alpha, result.degenerate, result.paired_item_count};
}

std::vector<std::string> domain_ids(const Corpus& corpus) {
    std::vector<std::string> ids;
    for (const auto& domain : corpus.codebook.domains) ids.push_back(domain.id);
    return ids;
}

}  // namespace

ReliabilityReport reliability_report(
    const std::vector<std::pair<std::string, Corpus>>& iteration_corpora,
    const std::vector<std::string>& coders, Weighting weighting, Scope scope) {
    if (iteration_corpora.empty()) {
        throw Error(ErrorCode::InsufficientData, "no iteration corpora given");
    }
    const std::vector<std::string> domains = domain_ids(iteration_corpora.front().second);
    for (const auto& [label, corpus] : iteration_corpora) {
        if (domain_ids(corpus) != domains) {
            throw Error(ErrorCode::CodebookMismatch,
                        "iteration '" + label + "' declares different domain ids");
        }
    }

    ReliabilityReport report;
    for (const auto& [label, corpus] : iteration_corpora) report.iterations.push_back(label);

    // the coefficients are pure functions of (corpus, measure), so the
    // per-domain work can run concurrently; assembly stays in codebook order
    struct DomainCells {
        std::vector<ReportCell> binary;
        std::vector<ReportCell> cu;
    };
    std::vector<std::future<DomainCells>> futures;
    for (const auto& domain : domains) {
        futures.push_back(std::async(std::launch::async, [&, domain] {
            DomainCells cells;
            for (const auto& [label, corpus] : iteration_corpora) {
                cells.binary.push_back(cell_from(variant_alpha(
                    corpus, MeasureKind::binary(domain), coders, weighting, scope)));
                cells.cu.push_back(cell_from(
                    variant_alpha(corpus, MeasureKind::cu(domain), coders, weighting, scope)));
            }
            return cells;
        }));
    }
    for (std::size_t d = 0; d < domains.size(); ++d) {
        DomainCells cells = futures[d].get();
        report.rows.push_back({domains[d], std::move(cells.binary), std::move(cells.cu)});
    }
    for (const auto& [label, corpus] : iteration_corpora) {
        report.cu_across.push_back(cell_from(
            variant_alpha(corpus, MeasureKind::cu_across(), coders, weighting, scope)));
    }
    return report;
}

namespace {

constexpr const char* kReset = "\033[0m";

const char* classification_color(Reliability level) {
    switch (level) {
        case Reliability::Insufficient: return "\033[31m";
        case Reliability::Tentative: return "\033[33m";
        case Reliability::Reliable: return "\033[32m";
    }
    return "";
}

std::string classification_text(const ReportCell& cell, bool color) {
    std::string name(to_string(cell.classification()));
    if (!color) return name;
    return classification_color(cell.classification()) + name + kReset;
}

}  // namespace

std::string report_table(const ReliabilityReport& report, bool color) {
    // column widths: value columns then classification columns
    std::vector<std::string> header{"domain"};
    for (const auto& iteration : report.iterations) {
        header.push_back("binary[" + iteration + "]");
        header.push_back("cu[" + iteration + "]");
    }
    for (const auto& iteration : report.iterations) {
        header.push_back("binary_class[" + iteration + "]");
        header.push_back("cu_class[" + iteration + "]");
    }

    std::vector<std::vector<std::string>> lines;
    std::vector<std::vector<std::string>> plain;  // width computation without color codes
    for (const auto& row : report.rows) {
        std::vector<std::string> line{row.domain};
        std::vector<std::string> bare{row.domain};
        for (std::size_t i = 0; i < report.iterations.size(); ++i) {
            line.push_back(format_cell(row.binary[i]));
            line.push_back(format_cell(row.cu[i]));
            bare.push_back(line[line.size() - 2]);
            bare.push_back(line.back());
        }
        for (std::size_t i = 0; i < report.iterations.size(); ++i) {
            line.push_back(classification_text(row.binary[i], color));
            bare.push_back(std::string(to_string(row.binary[i].classification())));
            line.push_back(classification_text(row.cu[i], color));
            bare.push_back(std::string(to_string(row.cu[i].classification())));
        }
        lines.push_back(std::move(line));
        plain.push_back(std::move(bare));
    }
    {
        std::vector<std::string> line{"Cu-alpha"};
        std::vector<std::string> bare{"Cu-alpha"};
        for (std::size_t i = 0; i < report.iterations.size(); ++i) {
            line.push_back(format_cell(report.cu_across[i]));
            line.push_back("");
            bare.push_back(line[line.size() - 2]);
            bare.push_back("");
        }
        for (std::size_t i = 0; i < report.iterations.size(); ++i) {
            line.push_back(classification_text(report.cu_across[i], color));
            bare.push_back(std::string(to_string(report.cu_across[i].classification())));
            line.push_back("");
            bare.push_back("");
        }
        lines.push_back(std::move(line));
        plain.push_back(std::move(bare));
    }

    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
    for (const auto& bare : plain) {
        for (std::size_t c = 0; c < bare.size(); ++c) {
            widths[c] = std::max(widths[c], bare[c].size());
        }
    }

    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& cells,
                    const std::vector<std::string>& bare) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) out << "  ";
            out << cells[c];
            out << std::string(widths[c] - bare[c].size(), ' ');
        }
        out << '\n';
    };
    emit(header, header);
    for (std::size_t r = 0; r < lines.size(); ++r) emit(lines[r], plain[r]);
    return out.str();
}

std::string report_csv(const ReliabilityReport& report) {
    std::ostringstream out;
    out << "domain";
    for (const auto& iteration : report.iterations) {
        out << ",binary[" << iteration << "],cu[" << iteration << "]";
    }
    for (const auto& iteration : report.iterations) {
        out << ",binary_class[" << iteration << "],cu_class[" << iteration << "]";
    }
    out << '\n';
    for (const auto& row : report.rows) {
        out << row.domain;
        for (std::size_t i = 0; i < report.iterations.size(); ++i) {
            out << ',' << format_cell(row.binary[i]) << ',' << format_cell(row.cu[i]);
        }
        for (std::size_t i = 0; i < report.iterations.size(); ++i) {
            out << ',' << to_string(row.binary[i].classification()) << ','
                << to_string(row.cu[i].classification());
        }
        out << '\n';
    }
    out << "Cu-alpha";
    for (std::size_t i = 0; i < report.iterations.size(); ++i) {
        out << ',' << format_cell(report.cu_across[i]) << ',';
    }
    for (std::size_t i = 0; i < report.iterations.size(); ++i) {
        out << ',' << to_string(report.cu_across[i].classification()) << ',';
    }
    out << '\n';
    return out.str();
}

namespace {

nlohmann::json cell_json(const ReportCell& cell) {
    nlohmann::json j;
    j["value"] = cell.value;
    j["degenerate"] = cell.degenerate;
    j["paired_item_count"] = cell.paired_item_count;
    j["classification"] = std::string(to_string(cell.classification()));
    j["display"] = format_cell(cell);
    return j;
}

}  // namespace

std::string report_json(const ReliabilityReport& report) {
    nlohmann::json j;
    j["iterations"] = report.iterations;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json r;
        r["domain"] = row.domain;
        nlohmann::json binary = nlohmann::json::array();
        nlohmann::json cu = nlohmann::json::array();
        for (std::size_t i = 0; i < report.iterations.size(); ++i) {
            binary.push_back(cell_json(row.binary[i]));
            cu.push_back(cell_json(row.cu[i]));
        }
        r["binary"] = std::move(binary);
        r["cu"] = std::move(cu);
        rows.push_back(std::move(r));
    }
    j["domains"] = std::move(rows);
    nlohmann::json across = nlohmann::json::array();
    for (const auto& cell : report.cu_across) across.push_back(cell_json(cell));
    j["cu_across"] = std::move(across);
    return j.dump(2) + "\n";
}

}  // namespace ica
