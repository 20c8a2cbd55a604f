// Command-line front end: corpus validation, agreement coefficients, and
// thematic-synthesis exports over coded-corpus files.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ica/corpus.hpp"
#include "ica/report.hpp"
#include "ica/synthesis.hpp"
#include "ica/variants.hpp"

#ifdef _WIN32
#include <io.h>
#define ICA_ISATTY _isatty
#define ICA_FILENO _fileno
#else
#include <unistd.h>
#define ICA_ISATTY isatty
#define ICA_FILENO fileno
#endif

namespace {

using namespace ica;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

bool color_enabled() {
    const char* mode = std::getenv("ICA_COLOR");
    if (mode != nullptr && std::string(mode) == "never") return false;
    return ICA_ISATTY(ICA_FILENO(stdout)) != 0;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Syntax, "cannot write '" + out_path + "'");
    out << text;
}

TableLevel parse_level(const std::string& level) {
    if (level == "domain") return TableLevel::Domain;
    if (level == "code") return TableLevel::Code;
    throw Error(ErrorCode::Schema, "--level must be 'domain' or 'code'");
}

std::string format_alpha_value(const AlphaResult& result) {
    ReportCell cell{result.alpha, result.degenerate, result.paired_item_count};
    return format_cell(cell);
}

std::vector<AnalystRelation> load_relations(const std::string& path) {
    std::ifstream input(path);
    if (!input) throw Error(ErrorCode::Syntax, "cannot open '" + path + "'");
    std::vector<AnalystRelation> relations;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line == "source,target,relation") continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 3) {
            throw ParseError(ErrorCode::Schema,
                             path + ": expected 'source,target,relation'", line_no);
        }
        relations.push_back({fields[0], fields[1], relation_from_string(fields[2])});
    }
    return relations;
}

struct AlphaOptions {
    std::string corpus_path;
    std::string measure;
    std::string domain;
    std::vector<std::string> coders;
    std::string weighting = "uniform";
    std::string scope = "whole";
    std::string format = "human";
    std::string out;
};

Weighting parse_weighting(const std::string& weighting) {
    if (weighting == "uniform") return Weighting::Uniform;
    if (weighting == "length") return Weighting::Length;
    throw Error(ErrorCode::Schema, "--weighting must be 'uniform' or 'length'");
}

Scope parse_scope(const std::string& scope) {
    if (scope == "whole") return Scope::Whole;
    if (scope == "coded") return Scope::Coded;
    throw Error(ErrorCode::Schema, "--scope must be 'whole' or 'coded'");
}

MeasureKind parse_measure(const std::string& measure, const std::string& domain) {
    if (measure == "binary" || measure == "cu") {
        if (domain.empty()) {
            throw Error(ErrorCode::Schema, "--measure " + measure + " requires --domain");
        }
        return measure == "binary" ? MeasureKind::binary(domain) : MeasureKind::cu(domain);
    }
    if (measure == "Cu") {
        if (!domain.empty()) {
            throw Error(ErrorCode::Schema, "--measure Cu takes no --domain");
        }
        return MeasureKind::cu_across();
    }
    throw Error(ErrorCode::Schema, "--measure must be 'binary', 'cu' or 'Cu'");
}

std::string measure_display(const MeasureKind& measure) {
    switch (measure.variant) {
        case MeasureVariant::Binary: return "binary[" + measure.domain + "]";
        case MeasureVariant::CuWithinDomain: return "cu[" + measure.domain + "]";
        case MeasureVariant::CuAcrossDomains: return "Cu";
    }
    return "?";
}

int run_validate(const std::string& corpus_path, const std::string& coverage_coder) {
    Corpus corpus = load_corpus(corpus_path);
    ValidationReport report = validate_corpus(corpus);
    for (const auto& violation : report.violations) {
        std::cout << to_string(violation.kind) << ": " << violation.message << '\n';
    }
    if (report.ok()) {
        std::cout << "corpus is valid: " << corpus.quotations.size() << " quotations, "
                  << corpus.assignments.size() << " assignments, " << corpus.coders.size()
                  << " coders\n";
    }
    if (!coverage_coder.empty()) {
        CoverageReport coverage = coverage_report(corpus, coverage_coder);
        std::cout << "coverage for coder '" << coverage.coder << "':\n";
        for (const auto& row : coverage.rows) {
            std::cout << "  " << row.quotation << ": ";
            if (row.domains.empty()) {
                std::cout << "(uncoded)";
            } else {
                for (std::size_t i = 0; i < row.domains.size(); ++i) {
                    if (i > 0) std::cout << ' ';
                    std::cout << row.domains[i];
                }
            }
            std::cout << '\n';
        }
        std::cout << "coded: " << coverage.coded << ", uncoded: " << coverage.uncoded << '\n';
    }
    return report.ok() ? kExitOk : kExitViolations;
}

int run_alpha(const AlphaOptions& options) {
    Corpus corpus = load_corpus(options.corpus_path);
    MeasureKind measure = parse_measure(options.measure, options.domain);
    AlphaResult result =
        variant_alpha(corpus, measure, options.coders, parse_weighting(options.weighting),
                      parse_scope(options.scope));
    if (result.multi_judge_items > 0) {
        std::cerr << "warning: " << result.multi_judge_items
                  << " item(s) carry three or more non-empty evaluations; the coefficient "
                     "is defined pairwise\n";
    }
    if (options.format == "json") {
        write_output(serialize_alpha_json(result), options.out);
    } else if (options.format == "human") {
        std::string text = measure_display(measure) + ": " + format_alpha_value(result) +
                           "\npaired items: " + std::to_string(result.paired_item_count) +
                           "\n";
        write_output(text, options.out);
    } else {
        throw Error(ErrorCode::Schema, "--format must be 'human' or 'json'");
    }
    return kExitOk;
}

struct ReportOptions {
    std::vector<std::string> iterations;  // LABEL=PATH
    std::vector<std::string> coders;
    std::string weighting = "uniform";
    std::string scope = "whole";
    std::string format = "human";
    std::string out;
};

int run_report(const ReportOptions& options) {
    std::vector<std::pair<std::string, Corpus>> corpora;
    for (const auto& spec : options.iterations) {
        std::size_t eq = spec.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
            throw Error(ErrorCode::Schema,
                        "iteration '" + spec + "' must look like LABEL=PATH");
        }
        corpora.emplace_back(spec.substr(0, eq), load_corpus(spec.substr(eq + 1)));
    }
    ReliabilityReport report =
        reliability_report(corpora, options.coders, parse_weighting(options.weighting),
                           parse_scope(options.scope));
    std::string text;
    if (options.format == "human") {
        text = report_table(report, options.out.empty() && color_enabled());
    } else if (options.format == "csv") {
        text = report_csv(report);
    } else if (options.format == "json") {
        text = report_json(report);
    } else {
        throw Error(ErrorCode::Schema, "--format must be 'human', 'csv' or 'json'");
    }
    write_output(text, options.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inter-coder agreement coefficients and thematic-synthesis tables over "
                 "coded corpora"};
    app.require_subcommand(1);

    std::string corpus_path;
    std::string coverage_coder;
    auto* validate = app.add_subcommand("validate", "check corpus invariants");
    validate->add_option("corpus", corpus_path, "corpus file (.json) or CSV bundle directory")
        ->required();
    validate->add_option("--coverage", coverage_coder,
                         "also list per-quotation coverage for this coder");

    AlphaOptions alpha_options;
    auto* alpha = app.add_subcommand("alpha", "compute one agreement coefficient");
    alpha->add_option("corpus", alpha_options.corpus_path, "corpus file")->required();
    alpha->add_option("--measure", alpha_options.measure, "binary, cu or Cu")->required();
    alpha->add_option("--domain", alpha_options.domain, "semantic domain id");
    alpha->add_option("--coders", alpha_options.coders, "coder subset (default: all)")
        ->delimiter(',');
    alpha->add_option("--weighting", alpha_options.weighting, "uniform or length");
    alpha->add_option("--scope", alpha_options.scope, "whole or coded");
    alpha->add_option("--format", alpha_options.format, "human or json");
    alpha->add_option("--out", alpha_options.out, "write to file instead of stdout");

    ReportOptions report_options;
    auto* report = app.add_subcommand("report", "per-domain reliability grid");
    report
        ->add_option("iterations", report_options.iterations,
                     "one or more LABEL=PATH corpus references")
        ->required();
    report->add_option("--coders", report_options.coders, "coder subset")->delimiter(',');
    report->add_option("--weighting", report_options.weighting, "uniform or length");
    report->add_option("--scope", report_options.scope, "whole or coded");
    report->add_option("--format", report_options.format, "human, csv or json");
    report->add_option("--out", report_options.out, "write to file instead of stdout");

    std::string level = "domain";
    bool with_words = false;
    std::string format;
    std::string out_path;
    auto* grounded = app.add_subcommand("grounded", "grounded counts per domain or code");
    grounded->add_option("corpus", corpus_path, "corpus file")->required();
    grounded->add_option("--level", level, "domain or code");
    grounded->add_flag("--words", with_words, "include word totals (requires texts)");
    grounded->add_option("--format", format, "csv or json (default csv)");
    grounded->add_option("--out", out_path, "write to file instead of stdout");

    auto* cooccur = app.add_subcommand("cooccur", "co-occurrence table");
    cooccur->add_option("corpus", corpus_path, "corpus file")->required();
    cooccur->add_option("--level", level, "domain or code");
    cooccur->add_option("--format", format, "csv or json (default csv)");
    cooccur->add_option("--out", out_path, "write to file instead of stdout");

    std::vector<std::string> query;
    auto* codedoc = app.add_subcommand("codedoc", "per-document counts for a conjunction");
    codedoc->add_option("corpus", corpus_path, "corpus file")->required();
    codedoc->add_option("--query", query, "comma-separated code/domain ids")
        ->required()
        ->delimiter(',');
    codedoc->add_option("--format", format, "csv or json (default csv)");
    codedoc->add_option("--out", out_path, "write to file instead of stdout");

    std::string relations_path;
    auto* network = app.add_subcommand("network", "semantic network export");
    network->add_option("corpus", corpus_path, "corpus file")->required();
    network->add_option("--level", level, "domain or code");
    network->add_option("--relations", relations_path,
                        "CSV file of analyst relations: source,target,relation");
    network->add_option("--format", format, "dot or json (default dot)");
    network->add_option("--out", out_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return kExitUsage;
    }

    try {
        if (validate->parsed()) return run_validate(corpus_path, coverage_coder);
        if (alpha->parsed()) return run_alpha(alpha_options);
        if (report->parsed()) return run_report(report_options);
        if (grounded->parsed()) {
            Corpus corpus = load_corpus(corpus_path);
            if (with_words) {
                WordRelevance relevance = word_relevance(corpus, parse_level(level));
                for (const auto& quotation : relevance.missing_text) {
                    std::cerr << "warning: quotation '" << quotation << "' has no text\n";
                }
                write_output(format == "json" ? frequency_table_json(relevance.table)
                                              : frequency_table_csv(relevance.table),
                             out_path);
            } else {
                FrequencyTable table = grounded_counts(corpus, parse_level(level));
                write_output(format == "json" ? frequency_table_json(table)
                                              : frequency_table_csv(table),
                             out_path);
            }
            return kExitOk;
        }
        if (cooccur->parsed()) {
            Corpus corpus = load_corpus(corpus_path);
            CooccurrenceTable table = cooccurrence_table(corpus, parse_level(level));
            write_output(format == "json" ? cooccurrence_json(table)
                                          : cooccurrence_csv(table),
                         out_path);
            return kExitOk;
        }
        if (codedoc->parsed()) {
            Corpus corpus = load_corpus(corpus_path);
            CodeDocumentTable table = code_document_table(corpus, query);
            write_output(format == "json" ? code_document_json(table)
                                          : code_document_csv(table),
                         out_path);
            return kExitOk;
        }
        if (network->parsed()) {
            Corpus corpus = load_corpus(corpus_path);
            std::vector<AnalystRelation> relations;
            if (!relations_path.empty()) relations = load_relations(relations_path);
            SemanticNetwork net =
                build_semantic_network(corpus, parse_level(level), relations);
            for (const auto& warning : net.warnings) {
                std::cerr << "warning: " << warning << '\n';
            }
            write_output(format == "json" ? network_json(net) : network_dot(net), out_path);
            return kExitOk;
        }
    } catch (const ica::Error& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
