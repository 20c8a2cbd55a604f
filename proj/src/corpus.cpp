#include "ica/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ica {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::MutualExclusiveness: return "MutualExclusiveness";
        case ViolationKind::DanglingReference: return "DanglingReference";
        case ViolationKind::OverlappingQuotations: return "OverlappingQuotations";
        case ViolationKind::DuplicateAssignment: return "DuplicateAssignment";
        case ViolationKind::EmptyDomain: return "EmptyDomain";
    }
    return "Unknown";
}

CorpusIndex::CorpusIndex(const Corpus& corpus) : corpus_(&corpus) {
    for (std::size_t d = 0; d < corpus.codebook.domains.size(); ++d) {
        const auto& domain = corpus.codebook.domains[d];
        if (!domain_index_.emplace(domain.id, d).second) {
            throw Error(ErrorCode::Schema, "duplicate domain id '" + domain.id + "'");
        }
        for (const auto& code : domain.codes) {
            if (!code_index_.emplace(code.id, code_index_.size()).second) {
                throw Error(ErrorCode::Schema, "duplicate code id '" + code.id + "'");
            }
            code_domain_.emplace(code.id, d);
        }
    }
    // codes may not be shared across domains, so the code map alone suffices
    for (std::size_t q = 0; q < corpus.quotations.size(); ++q) {
        if (!quotation_index_.emplace(corpus.quotations[q].id, q).second) {
            throw Error(ErrorCode::Schema,
                        "duplicate quotation id '" + corpus.quotations[q].id + "'");
        }
    }
    for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
        if (!document_index_.emplace(corpus.documents[d].id, d).second) {
            throw Error(ErrorCode::Schema,
                        "duplicate document id '" + corpus.documents[d].id + "'");
        }
    }
    for (const auto& coder : corpus.coders) {
        if (!coders_.insert(coder).second) {
            throw Error(ErrorCode::Schema, "duplicate coder id '" + coder + "'");
        }
    }
}

bool CorpusIndex::has_coder(const std::string& id) const { return coders_.count(id) > 0; }

bool CorpusIndex::has_domain(const std::string& id) const {
    return domain_index_.count(id) > 0;
}

std::size_t CorpusIndex::domain_of_code(const std::string& code_id) const {
    auto it = code_domain_.find(code_id);
    if (it == code_domain_.end()) {
        throw Error(ErrorCode::UnknownId, "unknown code id '" + code_id + "'");
    }
    return it->second;
}

std::size_t CorpusIndex::domain_index(const std::string& domain_id) const {
    auto it = domain_index_.find(domain_id);
    if (it == domain_index_.end()) {
        throw Error(ErrorCode::UnknownDomain, "unknown domain id '" + domain_id + "'");
    }
    return it->second;
}

std::size_t CorpusIndex::code_index(const std::string& code_id) const {
    auto it = code_index_.find(code_id);
    if (it == code_index_.end()) {
        throw Error(ErrorCode::UnknownId, "unknown code id '" + code_id + "'");
    }
    return it->second;
}

std::size_t CorpusIndex::quotation_index(const std::string& quotation_id) const {
    auto it = quotation_index_.find(quotation_id);
    if (it == quotation_index_.end()) {
        throw Error(ErrorCode::UnknownId, "unknown quotation id '" + quotation_id + "'");
    }
    return it->second;
}

namespace {

// Non-throwing lookup tables for validation: duplicates are rejected by the
// parsers, but validate_corpus must stay total on any in-memory corpus.
struct LooseIndex {
    std::map<std::string, const SemanticDomain*> domains;
    std::map<std::string, const SemanticDomain*> code_domain;
    std::map<std::string, const Quotation*> quotations;
    std::set<std::string> documents;
    std::set<std::string> coders;

    explicit LooseIndex(const Corpus& corpus) {
        for (const auto& domain : corpus.codebook.domains) {
            domains.emplace(domain.id, &domain);
            for (const auto& code : domain.codes) code_domain.emplace(code.id, &domain);
        }
        for (const auto& quotation : corpus.quotations) {
            quotations.emplace(quotation.id, &quotation);
        }
        for (const auto& document : corpus.documents) documents.insert(document.id);
        for (const auto& coder : corpus.coders) coders.insert(coder);
    }
};

}  // namespace

ValidationReport validate_corpus(const Corpus& corpus) {
    LooseIndex index(corpus);
    std::set<Violation> found;

    if (corpus.codebook.domains.empty()) {
        found.insert({ViolationKind::EmptyDomain,
                      {"codebook"},
                      "codebook declares no semantic domains"});
    }
    for (const auto& domain : corpus.codebook.domains) {
        if (domain.codes.empty()) {
            found.insert({ViolationKind::EmptyDomain,
                          {domain.id},
                          "semantic domain '" + domain.id + "' has no codes"});
        }
    }

    for (const auto& quotation : corpus.quotations) {
        if (!index.documents.count(quotation.document)) {
            found.insert({ViolationKind::DanglingReference,
                          {quotation.id, quotation.document},
                          "quotation '" + quotation.id + "' references unknown document '" +
                              quotation.document + "'"});
        }
        if (quotation.start >= quotation.end) {
            found.insert({ViolationKind::OverlappingQuotations,
                          {quotation.document, quotation.id},
                          "quotation '" + quotation.id + "' has an empty span (start >= end)"});
        }
    }

    // overlapping spans within one document
    std::map<std::string, std::vector<const Quotation*>> by_document;
    for (const auto& quotation : corpus.quotations) {
        by_document[quotation.document].push_back(&quotation);
    }
    for (auto& [document, quotations] : by_document) {
        std::sort(quotations.begin(), quotations.end(),
                  [](const Quotation* a, const Quotation* b) {
                      return std::tie(a->start, a->end, a->id) <
                             std::tie(b->start, b->end, b->id);
                  });
        for (std::size_t i = 0; i + 1 < quotations.size(); ++i) {
            for (std::size_t j = i + 1; j < quotations.size(); ++j) {
                const Quotation* a = quotations[i];
                const Quotation* b = quotations[j];
                if (b->start >= a->end) break;
                std::vector<std::string> subjects{document, a->id, b->id};
                std::sort(subjects.begin() + 1, subjects.end());
                found.insert({ViolationKind::OverlappingQuotations, subjects,
                              "quotations '" + subjects[1] + "' and '" + subjects[2] +
                                  "' overlap in document '" + document + "'"});
            }
        }
    }

    std::map<Assignment, int> triples;
    // (coder, quotation, domain) -> distinct codes applied
    std::map<std::tuple<std::string, std::string, std::string>, std::set<std::string>>
        domain_codes;
    for (const auto& assignment : corpus.assignments) {
        ++triples[assignment];
        bool dangling = false;
        if (!index.coders.count(assignment.coder)) {
            found.insert({ViolationKind::DanglingReference,
                          {assignment.coder},
                          "assignment references unknown coder '" + assignment.coder + "'"});
            dangling = true;
        }
        if (!index.quotations.count(assignment.quotation)) {
            found.insert(
                {ViolationKind::DanglingReference,
                 {assignment.quotation},
                 "assignment references unknown quotation '" + assignment.quotation + "'"});
            dangling = true;
        }
        auto code_it = index.code_domain.find(assignment.code);
        if (code_it == index.code_domain.end()) {
            found.insert({ViolationKind::DanglingReference,
                          {assignment.code},
                          "assignment references unknown code '" + assignment.code + "'"});
            dangling = true;
        }
        if (!dangling) {
            domain_codes[{assignment.coder, assignment.quotation, code_it->second->id}]
                .insert(assignment.code);
        }
    }
    for (const auto& [triple, count] : triples) {
        if (count > 1) {
            found.insert({ViolationKind::DuplicateAssignment,
                          {triple.coder, triple.quotation, triple.code},
                          "assignment (" + triple.coder + ", " + triple.quotation + ", " +
                              triple.code + ") appears " + std::to_string(count) + " times"});
        }
    }
    for (const auto& [key, codes] : domain_codes) {
        if (codes.size() < 2) continue;
        const auto& [coder, quotation, domain] = key;
        std::ostringstream message;
        message << "coder '" << coder << "' applied codes {";
        bool first = true;
        for (const auto& code : codes) {
            if (!first) message << ", ";
            message << code;
            first = false;
        }
        message << "} of domain '" << domain << "' to quotation '" << quotation << "'";
        found.insert(
            {ViolationKind::MutualExclusiveness, {domain, coder, quotation}, message.str()});
    }

    ValidationReport report;
    report.violations.assign(found.begin(), found.end());
    return report;
}

CoverageReport coverage_report(const Corpus& corpus, const std::string& coder) {
    LooseIndex index(corpus);
    if (!index.coders.count(coder)) {
        throw Error(ErrorCode::UnknownCoder, "unknown coder '" + coder + "'");
    }
    // quotation -> domain ids applied by the coder
    std::map<std::string, std::set<std::string>> applied;
    for (const auto& assignment : corpus.assignments) {
        if (assignment.coder != coder) continue;
        auto code_it = index.code_domain.find(assignment.code);
        if (code_it == index.code_domain.end()) continue;
        applied[assignment.quotation].insert(code_it->second->id);
    }

    CoverageReport report;
    report.coder = coder;
    for (const auto& quotation : corpus.quotations) {
        CoverageRow row;
        row.quotation = quotation.id;
        auto it = applied.find(quotation.id);
        if (it != applied.end()) {
            // emit in codebook order
            for (const auto& domain : corpus.codebook.domains) {
                if (it->second.count(domain.id)) row.domains.push_back(domain.id);
            }
        }
        if (row.domains.empty()) {
            ++report.uncoded;
        } else {
            ++report.coded;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::optional<std::string> authoritative_coder(const Corpus& corpus) {
    if (corpus.authoritative_coder) return corpus.authoritative_coder;
    if (corpus.coders.size() == 1) return corpus.coders.front();
    return std::nullopt;
}

}  // namespace ica
