#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ica/errors.hpp"

namespace ica {

// A code is one concept inside a semantic domain. Codes of one domain are
// mutually exclusive per quotation and coder.
struct Code {
    std::string id;
    std::string name;
    std::string description;

    bool operator==(const Code&) const = default;
};

struct SemanticDomain {
    std::string id;
    std::string name;
    std::string description;
    std::vector<Code> codes;

    bool operator==(const SemanticDomain&) const = default;
};

// Declaration order of domains and codes is stable and fixes the index
// order of every downstream matrix and report.
struct Codebook {
    std::vector<SemanticDomain> domains;

    bool operator==(const Codebook&) const = default;
};

struct Document {
    std::string id;
    std::string case_label;

    bool operator==(const Document&) const = default;
};

// A pre-established contiguous segment of a document. Offsets are in
// atomic units (characters); length = end - start.
struct Quotation {
    std::string id;
    std::string document;
    std::int64_t start = 0;
    std::int64_t end = 0;
    std::optional<std::string> text;

    std::int64_t length() const { return end - start; }

    bool operator==(const Quotation&) const = default;
};

struct Assignment {
    std::string coder;
    std::string quotation;
    std::string code;

    bool operator==(const Assignment&) const = default;
    auto operator<=>(const Assignment&) const = default;
};

struct Corpus {
    Codebook codebook;
    std::vector<std::string> coders;
    std::vector<Document> documents;
    std::vector<Quotation> quotations;
    std::vector<Assignment> assignments;
    std::optional<std::string> authoritative_coder;

    bool operator==(const Corpus&) const = default;
};

enum class ViolationKind {
    MutualExclusiveness,
    DanglingReference,
    OverlappingQuotations,
    DuplicateAssignment,
    EmptyDomain,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::vector<std::string> subjects;
    std::string message;

    bool operator==(const Violation&) const = default;
    auto operator<=>(const Violation&) const = default;
};

// Empty violations <=> the corpus is valid.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

// Per-quotation view of what one coder covered, for exhaustiveness review.
struct CoverageRow {
    std::string quotation;
    std::vector<std::string> domains;  // domains the coder applied, codebook order
};

struct CoverageReport {
    std::string coder;
    std::vector<CoverageRow> rows;  // corpus quotation order
    std::size_t coded = 0;
    std::size_t uncoded = 0;
};

// Fast id -> index lookups over an immutable corpus. Construction throws
// Error(Schema) on duplicate ids, which the canonical parsers also reject.
class CorpusIndex {
public:
    explicit CorpusIndex(const Corpus& corpus);

    const Corpus& corpus() const { return *corpus_; }

    bool has_coder(const std::string& id) const;
    bool has_domain(const std::string& id) const;

    // Throwing lookups used by operations whose preconditions require the id.
    std::size_t domain_of_code(const std::string& code_id) const;  // domain index
    std::size_t domain_index(const std::string& domain_id) const;
    std::size_t code_index(const std::string& code_id) const;      // global, declaration order
    std::size_t quotation_index(const std::string& quotation_id) const;

    const std::map<std::string, std::size_t>& domains() const { return domain_index_; }
    const std::map<std::string, std::size_t>& codes() const { return code_index_; }
    const std::map<std::string, std::size_t>& quotations() const { return quotation_index_; }
    const std::map<std::string, std::size_t>& documents() const { return document_index_; }

private:
    const Corpus* corpus_;
    std::map<std::string, std::size_t> domain_index_;
    std::map<std::string, std::size_t> code_index_;
    std::map<std::string, std::size_t> code_domain_;   // code id -> domain index
    std::map<std::string, std::size_t> quotation_index_;
    std::map<std::string, std::size_t> document_index_;
    std::set<std::string> coders_;
};

enum class CorpusFormat { Json, CsvBundle };

// Canonical JSON corpus format. Loads referential structure verbatim;
// semantic validation is validate_corpus's job.
Corpus parse_corpus_json(std::string_view bytes);
std::string serialize_corpus_json(const Corpus& corpus);

// CSV bundle: codebook.csv, documents.csv, quotations.csv, assignments.csv.
// Coders are derived from assignments.csv in first-appearance order.
struct CsvBundle {
    std::string codebook;
    std::string documents;
    std::string quotations;
    std::string assignments;
};

Corpus parse_corpus_csv(const CsvBundle& bundle);
CsvBundle serialize_corpus_csv(const Corpus& corpus);

// Reads a corpus from disk: a .json file or a directory holding the bundle.
Corpus load_corpus(const std::string& path);

// Reports every violation; deterministic and independent of assignment order.
ValidationReport validate_corpus(const Corpus& corpus);

// Lists the domains the coder applied per quotation plus coded/uncoded totals.
CoverageReport coverage_report(const Corpus& corpus, const std::string& coder);

// The coder whose assignments synthesis reads: the explicit field, or the
// single coder when there is exactly one.
std::optional<std::string> authoritative_coder(const Corpus& corpus);

}  // namespace ica
