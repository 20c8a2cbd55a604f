#include "ica/synthesis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ica {

namespace {

std::string require_authoritative(const Corpus& corpus) {
    std::optional<std::string> coder = authoritative_coder(corpus);
    if (!coder) {
        throw Error(ErrorCode::NoAuthoritativeCoder,
                    "no authoritative coder designated and the corpus has " +
                        std::to_string(corpus.coders.size()) + " coders");
    }
    return *coder;
}

// quotation id -> code ids the authoritative coder applied
std::map<std::string, std::set<std::string>> authoritative_codes(const Corpus& corpus) {
    const std::string coder = require_authoritative(corpus);
    std::map<std::string, std::set<std::string>> codes;
    for (const auto& assignment : corpus.assignments) {
        if (assignment.coder == coder) codes[assignment.quotation].insert(assignment.code);
    }
    return codes;
}

std::map<std::string, std::string> code_to_domain(const Corpus& corpus) {
    std::map<std::string, std::string> mapping;
    for (const auto& domain : corpus.codebook.domains) {
        for (const auto& code : domain.codes) mapping.emplace(code.id, domain.id);
    }
    return mapping;
}

std::int64_t count_tokens(const std::string& text) {
    std::istringstream stream(text);
    std::string token;
    std::int64_t count = 0;
    while (stream >> token) ++count;
    return count;
}

// ids at the requested level in codebook order
std::vector<std::string> level_ids(const Corpus& corpus, TableLevel level) {
    std::vector<std::string> ids;
    for (const auto& domain : corpus.codebook.domains) {
        if (level == TableLevel::Domain) {
            ids.push_back(domain.id);
        } else {
            for (const auto& code : domain.codes) ids.push_back(code.id);
        }
    }
    return ids;
}

// quotation -> ids applied at the requested level
std::map<std::string, std::set<std::string>> applied_at_level(const Corpus& corpus,
                                                              TableLevel level) {
    auto codes = authoritative_codes(corpus);
    if (level == TableLevel::Code) return codes;
    auto domain_of = code_to_domain(corpus);
    std::map<std::string, std::set<std::string>> domains;
    for (const auto& [quotation, applied] : codes) {
        for (const auto& code : applied) {
            auto it = domain_of.find(code);
            if (it != domain_of.end()) domains[quotation].insert(it->second);
        }
    }
    return domains;
}

}  // namespace

FrequencyTable grounded_counts(const Corpus& corpus, TableLevel level) {
    auto codes = authoritative_codes(corpus);
    std::map<std::string, std::int64_t> per_code;
    for (const auto& [quotation, applied] : codes) {
        for (const auto& code : applied) ++per_code[code];
    }
    FrequencyTable table;
    table.level = level;
    for (const auto& domain : corpus.codebook.domains) {
        std::int64_t domain_total = 0;
        for (const auto& code : domain.codes) {
            auto it = per_code.find(code.id);
            const std::int64_t grounded = it == per_code.end() ? 0 : it->second;
            domain_total += grounded;
            if (level == TableLevel::Code) table.grounded.emplace_back(code.id, grounded);
        }
        if (level == TableLevel::Domain) table.grounded.emplace_back(domain.id, domain_total);
    }
    return table;
}

WordRelevance word_relevance(const Corpus& corpus, TableLevel level) {
    auto applied = applied_at_level(corpus, level);
    WordRelevance result;
    result.table = grounded_counts(corpus, level);

    std::map<std::string, std::int64_t> words;
    std::set<std::string> missing;
    for (const auto& quotation : corpus.quotations) {
        auto it = applied.find(quotation.id);
        if (it == applied.end()) continue;
        if (!quotation.text) {
            missing.insert(quotation.id);
            continue;
        }
        const std::int64_t tokens = count_tokens(*quotation.text);
        for (const auto& id : it->second) words[id] += tokens;
    }
    std::vector<std::pair<std::string, std::int64_t>> totals;
    for (const auto& [id, grounded] : result.table.grounded) {
        auto it = words.find(id);
        totals.emplace_back(id, it == words.end() ? 0 : it->second);
    }
    result.table.words = std::move(totals);
    result.missing_text.assign(missing.begin(), missing.end());
    return result;
}

CooccurrenceTable cooccurrence_table(const Corpus& corpus, TableLevel level) {
    auto applied = applied_at_level(corpus, level);
    CooccurrenceTable table;
    table.level = level;
    table.ids = level_ids(corpus, level);
    const std::size_t n = table.ids.size();
    table.cells.assign(n * n, 0);
    std::map<std::string, std::size_t> position;
    for (std::size_t i = 0; i < n; ++i) position.emplace(table.ids[i], i);

    for (const auto& [quotation, ids] : applied) {
        for (const auto& a : ids) {
            for (const auto& b : ids) {
                if (a == b) continue;
                table.cells[position.at(a) * n + position.at(b)] += 1;
            }
        }
    }
    return table;
}

CodeDocumentTable code_document_table(const Corpus& corpus,
                                      const std::vector<std::string>& query) {
    auto codes = authoritative_codes(corpus);
    auto domain_of = code_to_domain(corpus);
    std::set<std::string> domains;
    std::set<std::string> known_codes;
    for (const auto& domain : corpus.codebook.domains) {
        domains.insert(domain.id);
        for (const auto& code : domain.codes) known_codes.insert(code.id);
    }
    for (const auto& term : query) {
        if (!domains.count(term) && !known_codes.count(term)) {
            throw Error(ErrorCode::UnknownId, "query term '" + term + "' is not a code or "
                                              "domain id");
        }
    }

    auto satisfies = [&](const std::set<std::string>& applied, const std::string& term) {
        if (known_codes.count(term)) return applied.count(term) > 0;
        for (const auto& code : applied) {
            auto it = domain_of.find(code);
            if (it != domain_of.end() && it->second == term) return true;
        }
        return false;
    };

    std::map<std::string, std::int64_t> per_document;
    for (const auto& quotation : corpus.quotations) {
        auto it = codes.find(quotation.id);
        const std::set<std::string> empty;
        const std::set<std::string>& applied = it == codes.end() ? empty : it->second;
        bool all = true;
        for (const auto& term : query) all = all && satisfies(applied, term);
        if (all) ++per_document[quotation.document];
    }

    CodeDocumentTable table;
    table.query = query;
    for (const auto& document : corpus.documents) {
        auto it = per_document.find(document.id);
        const std::int64_t count = it == per_document.end() ? 0 : it->second;
        table.documents.push_back({document.id, count});
        table.total += count;
    }
    return table;
}

std::string_view to_string(RelationType type) {
    switch (type) {
        case RelationType::IsAssociatedWith: return "is-associated-with";
        case RelationType::IsCauseOf: return "is-cause-of";
        case RelationType::DueTo: return "due-to";
        case RelationType::IsPartOf: return "is-part-of";
        case RelationType::Matches: return "matches";
    }
    return "unknown";
}

RelationType relation_from_string(std::string_view name) {
    if (name == "is-associated-with") return RelationType::IsAssociatedWith;
    if (name == "is-cause-of") return RelationType::IsCauseOf;
    if (name == "due-to") return RelationType::DueTo;
    if (name == "is-part-of") return RelationType::IsPartOf;
    if (name == "matches") return RelationType::Matches;
    throw Error(ErrorCode::InvalidRelationType,
                "unknown relation type '" + std::string(name) + "'");
}

SemanticNetwork build_semantic_network(const Corpus& corpus, TableLevel level,
                                       const std::vector<AnalystRelation>& relations) {
    auto codes = authoritative_codes(corpus);
    auto domain_of = code_to_domain(corpus);

    FrequencyTable domain_grounded = grounded_counts(corpus, TableLevel::Domain);
    FrequencyTable code_grounded = grounded_counts(corpus, TableLevel::Code);
    std::map<std::string, std::int64_t> grounded;
    std::map<std::string, TableLevel> node_level;
    for (const auto& [id, count] : domain_grounded.grounded) {
        grounded[id] = count;
        node_level[id] = TableLevel::Domain;
    }
    if (level == TableLevel::Code) {
        for (const auto& [id, count] : code_grounded.grounded) {
            grounded[id] = count;
            node_level[id] = TableLevel::Code;
        }
    }

    // quotation-level occurrence sets per node id; a domain occurs wherever
    // any of its codes does, so mixed-level pairs are well-defined
    std::map<std::string, std::set<std::string>> occurs;
    for (const auto& [quotation, applied] : codes) {
        for (const auto& code : applied) {
            auto domain_it = domain_of.find(code);
            if (domain_it != domain_of.end()) occurs[domain_it->second].insert(quotation);
            if (level == TableLevel::Code) occurs[code].insert(quotation);
        }
    }
    auto cooccurrence = [&occurs](const std::string& a, const std::string& b) {
        auto ia = occurs.find(a);
        auto ib = occurs.find(b);
        if (ia == occurs.end() || ib == occurs.end()) return std::int64_t{0};
        return std::int64_t(std::count_if(
            ia->second.begin(), ia->second.end(),
            [&ib](const std::string& quotation) { return ib->second.count(quotation) > 0; }));
    };

    SemanticNetwork network;
    for (const auto& domain : corpus.codebook.domains) {
        network.nodes.push_back({domain.id, TableLevel::Domain, grounded[domain.id]});
        if (level == TableLevel::Code) {
            for (const auto& code : domain.codes) {
                network.nodes.push_back({code.id, TableLevel::Code, grounded[code.id]});
            }
        }
    }

    if (level == TableLevel::Code) {
        for (const auto& domain : corpus.codebook.domains) {
            for (const auto& code : domain.codes) {
                network.edges.push_back(
                    {code.id, domain.id, RelationType::IsPartOf, grounded[code.id]});
            }
        }
    }

    for (const auto& relation : relations) {
        if (!node_level.count(relation.source)) {
            throw Error(ErrorCode::UnknownEndpoint,
                        "unknown relation endpoint '" + relation.source + "'");
        }
        if (!node_level.count(relation.target)) {
            throw Error(ErrorCode::UnknownEndpoint,
                        "unknown relation endpoint '" + relation.target + "'");
        }
        if (relation.type == RelationType::IsPartOf) {
            // only valid from a code to its own domain
            auto domain_it = domain_of.find(relation.source);
            if (domain_it == domain_of.end() || domain_it->second != relation.target) {
                throw Error(ErrorCode::InvalidRelationType,
                            "is-part-of must connect a code to its own domain, got '" +
                                relation.source + "' -> '" + relation.target + "'");
            }
        }
        const std::int64_t weight = cooccurrence(relation.source, relation.target);
        if (weight == 0) {
            network.warnings.push_back("relation " + relation.source + " -> " +
                                       relation.target + " has zero co-occurrence");
        }
        network.edges.push_back({relation.source, relation.target, relation.type, weight});
    }
    return network;
}

namespace {

const char* level_name(TableLevel level) {
    return level == TableLevel::Domain ? "domain" : "code";
}

}  // namespace

std::string frequency_table_csv(const FrequencyTable& table) {
    std::ostringstream out;
    out << "id,grounded";
    if (table.words) out << ",words";
    out << '\n';
    for (std::size_t i = 0; i < table.grounded.size(); ++i) {
        out << table.grounded[i].first << ',' << table.grounded[i].second;
        if (table.words) out << ',' << (*table.words)[i].second;
        out << '\n';
    }
    return out.str();
}

std::string frequency_table_json(const FrequencyTable& table) {
    nlohmann::json j;
    j["level"] = level_name(table.level);
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < table.grounded.size(); ++i) {
        nlohmann::json entry;
        entry["id"] = table.grounded[i].first;
        entry["grounded"] = table.grounded[i].second;
        if (table.words) entry["words"] = (*table.words)[i].second;
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

std::string cooccurrence_csv(const CooccurrenceTable& table) {
    std::ostringstream out;
    out << "id";
    for (const auto& id : table.ids) out << ',' << id;
    out << '\n';
    for (std::size_t i = 0; i < table.ids.size(); ++i) {
        out << table.ids[i];
        for (std::size_t j = 0; j < table.ids.size(); ++j) {
            out << ',';
            if (i == j) {
                out << '-';
            } else {
                out << table.at(i, j);
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string cooccurrence_json(const CooccurrenceTable& table) {
    nlohmann::json j;
    j["level"] = level_name(table.level);
    j["ids"] = table.ids;
    j["cells"] = table.cells;
    return j.dump(2) + "\n";
}

std::string code_document_csv(const CodeDocumentTable& table) {
    std::ostringstream out;
    out << "document,count\n";
    for (const auto& row : table.documents) {
        out << row.document << ',' << row.count << '\n';
    }
    out << "total," << table.total << '\n';
    return out.str();
}

std::string code_document_json(const CodeDocumentTable& table) {
    nlohmann::json j;
    j["query"] = table.query;
    nlohmann::json documents = nlohmann::json::array();
    for (const auto& row : table.documents) {
        documents.push_back({{"document", row.document}, {"count", row.count}});
    }
    j["documents"] = std::move(documents);
    j["total"] = table.total;
    return j.dump(2) + "\n";
}

namespace {

std::string dot_escape(const std::string& value) {
    std::string out;
    for (char c : value) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string network_dot(const SemanticNetwork& network) {
    std::ostringstream out;
    out << "graph semantic_network {\n";
    for (const auto& node : network.nodes) {
        out << "  \"" << dot_escape(node.id) << "\" [grounded=" << node.grounded
            << ", level=" << level_name(node.level) << "];\n";
    }
    for (const auto& edge : network.edges) {
        out << "  \"" << dot_escape(edge.source) << "\" -- \"" << dot_escape(edge.target)
            << "\" [relation=\"" << to_string(edge.relation) << "\", weight=" << edge.weight
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string network_json(const SemanticNetwork& network) {
    nlohmann::json j;
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& node : network.nodes) {
        nodes.push_back({{"id", node.id},
                         {"level", level_name(node.level)},
                         {"grounded", node.grounded}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& edge : network.edges) {
        edges.push_back({{"source", edge.source},
                         {"target", edge.target},
                         {"relation", std::string(to_string(edge.relation))},
                         {"weight", edge.weight}});
    }
    j["nodes"] = std::move(nodes);
    j["edges"] = std::move(edges);
    if (!network.warnings.empty()) j["warnings"] = network.warnings;
    return j.dump(2) + "\n";
}

}  // namespace ica
