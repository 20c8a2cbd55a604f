#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ica/corpus.hpp"

namespace ica {

enum class TableLevel { Domain, Code };

// Grounded counts (and optional word totals) in codebook order.
// Domain grounded is always the sum of its codes' grounded.
struct FrequencyTable {
    TableLevel level = TableLevel::Domain;
    std::vector<std::pair<std::string, std::int64_t>> grounded;
    std::optional<std::vector<std::pair<std::string, std::int64_t>>> words;
};

struct WordRelevance {
    FrequencyTable table;
    std::vector<std::string> missing_text;  // quotation ids without text
};

// Symmetric quotation-level co-occurrence; the diagonal is unused.
struct CooccurrenceTable {
    TableLevel level = TableLevel::Domain;
    std::vector<std::string> ids;          // codebook order
    std::vector<std::int64_t> cells;       // N x N row-major

    std::int64_t at(std::size_t i, std::size_t j) const {
        return cells[i * ids.size() + j];
    }
};

struct DocumentCount {
    std::string document;
    std::int64_t count = 0;
};

// Per-document counts of quotations matching a conjunctive query.
struct CodeDocumentTable {
    std::vector<std::string> query;
    std::vector<DocumentCount> documents;  // corpus document order
    std::int64_t total = 0;
};

enum class RelationType { IsAssociatedWith, IsCauseOf, DueTo, IsPartOf, Matches };

std::string_view to_string(RelationType type);
RelationType relation_from_string(std::string_view name);  // throws InvalidRelationType

struct AnalystRelation {
    std::string source;
    std::string target;
    RelationType type;
};

struct NetworkNode {
    std::string id;
    TableLevel level;
    std::int64_t grounded = 0;
};

struct NetworkEdge {
    std::string source;
    std::string target;
    RelationType relation;
    std::int64_t weight = 0;  // co-occurrence of the endpoints
};

struct SemanticNetwork {
    std::vector<NetworkNode> nodes;
    std::vector<NetworkEdge> edges;
    std::vector<std::string> warnings;  // e.g. analyst relations with zero co-occurrence
};

// All synthesis reads the authoritative coder's assignments and throws
// NoAuthoritativeCoder when none is designated.

// Code grounded = quotations the coder applied the code to; domain grounded
// sums its codes.
FrequencyTable grounded_counts(const Corpus& corpus, TableLevel level);

// Whitespace-token totals of the quotations carrying each code/domain.
// Quotations without text are skipped and reported, others still counted.
WordRelevance word_relevance(const Corpus& corpus, TableLevel level);

// cell(i,j) = quotations where both i and j were applied (any code of a
// domain at domain level).
CooccurrenceTable cooccurrence_table(const Corpus& corpus, TableLevel level);

// Conjunction of code and domain ids; a domain id means any of its codes.
CodeDocumentTable code_document_table(const Corpus& corpus,
                                      const std::vector<std::string>& query);

// Nodes carry grounded, analyst relations become edges weighted by the
// co-occurrence of their endpoints, and at code level every code gets an
// auto-generated is-part-of edge to its domain.
SemanticNetwork build_semantic_network(const Corpus& corpus, TableLevel level,
                                       const std::vector<AnalystRelation>& relations);

// Exports.
std::string frequency_table_csv(const FrequencyTable& table);
std::string frequency_table_json(const FrequencyTable& table);
std::string cooccurrence_csv(const CooccurrenceTable& table);
std::string cooccurrence_json(const CooccurrenceTable& table);
std::string code_document_csv(const CodeDocumentTable& table);
std::string code_document_json(const CodeDocumentTable& table);
std::string network_dot(const SemanticNetwork& network);
std::string network_json(const SemanticNetwork& network);

}  // namespace ica
