#pragma once
// Shared corpus builders for the test suites.

#include <random>
#include <string>
#include <vector>

#include "ica/corpus.hpp"

namespace fixtures {

// Two coders, three two-code domains, four quotations. Hand-checked
// coefficient properties:
//   binary(S2) = 1.0 exactly (presence agrees everywhere, with variability)
//   cu(S2)     = degenerate 1.0 (one paired quotation, same code)
//   cu(S3)     = 0.0 (agree on q3, disagree on q4)
//   cu(S1)     = 0.0 (agree on q3, disagree on q1)
//   Cu         = 33/101, strictly below 1
inline ica::Corpus walkthrough() {
    ica::Corpus corpus;
    corpus.codebook.domains = {
        {"S1", "First domain", "", {{"C11", "", ""}, {"C12", "", ""}}},
        {"S2", "Second domain", "", {{"C21", "", ""}, {"C22", "", ""}}},
        {"S3", "Third domain", "", {{"C31", "", ""}, {"C32", "", ""}}},
    };
    corpus.coders = {"coder1", "coder2"};
    corpus.documents = {{"doc1", "case A"}};
    corpus.quotations = {
        {"q1", "doc1", 0, 10, "first segment of text"},
        {"q2", "doc1", 10, 20, "second segment"},
        {"q3", "doc1", 20, 30, "third segment of the text"},
        {"q4", "doc1", 30, 40, "fourth segment"},
    };
    corpus.assignments = {
        {"coder1", "q1", "C11"},
        {"coder1", "q2", "C21"},
        {"coder1", "q3", "C11"},
        {"coder1", "q3", "C31"},
        {"coder1", "q4", "C31"},
        {"coder2", "q1", "C12"},
        {"coder2", "q2", "C21"},
        {"coder2", "q2", "C12"},
        {"coder2", "q3", "C11"},
        {"coder2", "q3", "C31"},
        {"coder2", "q4", "C32"},
        {"coder2", "q4", "C11"},
    };
    corpus.authoritative_coder = "coder1";
    return corpus;
}

// One coder, 30 quotations, grounded pattern 23/1/2/1 in the first domain
// (domain total 27) and a second domain co-occurring on nine quotations.
inline ica::Corpus frequency_shaped() {
    ica::Corpus corpus;
    corpus.codebook.domains = {
        {"F01", "Primary theme", "", {{"F01a", "", ""}, {"F01b", "", ""},
                                      {"F01c", "", ""}, {"F01d", "", ""}}},
        {"F02", "Secondary theme", "", {{"F02a", "", ""}}},
    };
    corpus.coders = {"analyst"};
    corpus.documents = {{"doc1", "case 1"}, {"doc2", "case 2"}};
    for (int i = 1; i <= 30; ++i) {
        std::string id = "q" + std::to_string(i);
        std::string document = i <= 15 ? "doc1" : "doc2";
        corpus.quotations.push_back(
            {id, document, (i - 1) * 10, i * 10, "token token"});
    }
    auto assign = [&corpus](int quotation, const std::string& code) {
        corpus.assignments.push_back({"analyst", "q" + std::to_string(quotation), code});
    };
    for (int i = 1; i <= 23; ++i) assign(i, "F01a");
    assign(24, "F01b");
    assign(25, "F01c");
    assign(26, "F01c");
    assign(27, "F01d");
    for (int i = 1; i <= 9; ++i) assign(i, "F02a");
    assign(28, "F02a");
    // q29 and q30 stay uncoded
    return corpus;
}

inline ica::Corpus minimal() {
    ica::Corpus corpus;
    corpus.codebook.domains = {{"D1", "Only domain", "", {{"D1a", "Only code", ""}}}};
    corpus.coders = {"solo"};
    corpus.documents = {{"doc1", ""}};
    corpus.quotations = {{"q1", "doc1", 0, 5, {}}};
    return corpus;
}

// Structurally valid random corpus for round-trip and permutation checks.
inline ica::Corpus random_corpus(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> domain_count(1, 3);
    std::uniform_int_distribution<int> code_count(1, 3);
    std::uniform_int_distribution<int> quotation_count(1, 6);
    std::uniform_int_distribution<int> coin(0, 1);

    ica::Corpus corpus;
    const int domains = domain_count(rng);
    for (int d = 0; d < domains; ++d) {
        ica::SemanticDomain domain;
        domain.id = "D" + std::to_string(d);
        domain.name = "domain " + std::to_string(d);
        const int codes = code_count(rng);
        for (int c = 0; c < codes; ++c) {
            domain.codes.push_back({domain.id + "c" + std::to_string(c), "", ""});
        }
        corpus.codebook.domains.push_back(std::move(domain));
    }
    corpus.coders = {"coderA", "coderB"};
    corpus.documents = {{"doc1", "case"}};
    const int quotations = quotation_count(rng);
    for (int q = 0; q < quotations; ++q) {
        ica::Quotation quotation;
        quotation.id = "q" + std::to_string(q);
        quotation.document = "doc1";
        quotation.start = q * 10;
        quotation.end = q * 10 + 5 + coin(rng);
        if (coin(rng)) quotation.text = "some words here";
        corpus.quotations.push_back(std::move(quotation));
    }
    for (const auto& coder : corpus.coders) {
        for (const auto& quotation : corpus.quotations) {
            for (const auto& domain : corpus.codebook.domains) {
                if (coin(rng)) continue;  // leave uncoded for this domain
                std::uniform_int_distribution<std::size_t> pick(0, domain.codes.size() - 1);
                corpus.assignments.push_back(
                    {coder, quotation.id, domain.codes[pick(rng)].id});
            }
        }
    }
    if (coin(rng)) corpus.authoritative_coder = "coderA";
    return corpus;
}

}  // namespace fixtures
