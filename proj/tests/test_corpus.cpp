#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ica/corpus.hpp"
#include "fixtures.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace ica;

namespace {

const char* kMinimalJson = R"({
  "codebook": {"domains": [{"id": "D1", "name": "only", "codes": [{"id": "D1a"}]}]},
  "coders": ["solo"],
  "documents": [{"id": "doc1"}],
  "quotations": [{"id": "q1", "document": "doc1", "start": 0, "end": 5}],
  "assignments": []
})";

}  // namespace

TEST_CASE("minimal corpus loads with one coder and one quotation") {
    Corpus corpus = parse_corpus_json(kMinimalJson);
    CHECK(corpus.coders.size() == 1);
    CHECK(corpus.quotations.size() == 1);
    CHECK(corpus.codebook.domains.size() == 1);
    CHECK(corpus.assignments.empty());
    CHECK_FALSE(corpus.authoritative_coder.has_value());
    CHECK(validate_corpus(corpus).ok());
}

TEST_CASE("parsing accepts dangling references, validation reports them") {
    std::string json = R"({
      "codebook": {"domains": [{"id": "D1", "codes": [{"id": "D1a"}]}]},
      "coders": ["solo"],
      "documents": [{"id": "doc1"}],
      "quotations": [{"id": "q1", "document": "doc1", "start": 0, "end": 5}],
      "assignments": [{"coder": "solo", "quotation": "q1", "code": "NOPE"}]
    })";
    Corpus corpus = parse_corpus_json(json);
    CHECK(corpus.assignments.size() == 1);
    ValidationReport report = validate_corpus(corpus);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::DanglingReference);
    CHECK(report.violations[0].subjects == std::vector<std::string>{"NOPE"});
}

TEST_CASE("truncated JSON raises a syntax error and yields no corpus") {
    CHECK_THROWS_AS(parse_corpus_json(R"({"codebook": {"domains": [)"), ParseError);
    try {
        parse_corpus_json(R"({"codebook")");
        FAIL("expected a parse error");
    } catch (const ParseError& error) {
        CHECK(error.code() == ErrorCode::Syntax);
    }
}

TEST_CASE("schema errors name the offending field") {
    // missing required field
    try {
        parse_corpus_json(R"({
          "codebook": {"domains": []},
          "coders": [],
          "documents": [],
          "quotations": [],
          "assignments": [{"coder": "a", "quotation": "q"}]
        })");
        FAIL("expected a schema error");
    } catch (const ParseError& error) {
        CHECK(error.code() == ErrorCode::Schema);
        CHECK(std::string(error.what()).find("code") != std::string::npos);
    }
    // unexpected extra field
    try {
        parse_corpus_json(R"({
          "codebook": {"domains": []},
          "coders": [],
          "documents": [],
          "quotations": [],
          "assignments": [],
          "surprise": 1
        })");
        FAIL("expected a schema error");
    } catch (const ParseError& error) {
        CHECK(error.code() == ErrorCode::Schema);
        CHECK(std::string(error.what()).find("surprise") != std::string::npos);
    }
}

TEST_CASE("duplicate ids are rejected at parse time") {
    CHECK_THROWS_AS(parse_corpus_json(R"({
      "codebook": {"domains": [
        {"id": "D1", "codes": [{"id": "X"}]},
        {"id": "D2", "codes": [{"id": "X"}]}
      ]},
      "coders": [],
      "documents": [],
      "quotations": [],
      "assignments": []
    })"),
                    Error);
}

TEST_CASE("mutual exclusiveness violations carry domain, coder, and quotation") {
    Corpus corpus = fixtures::walkthrough();
    corpus.assignments.push_back({"coder1", "q1", "C12"});  // C11 already applied
    ValidationReport report = validate_corpus(corpus);
    REQUIRE(report.violations.size() == 1);
    const Violation& violation = report.violations[0];
    CHECK(violation.kind == ViolationKind::MutualExclusiveness);
    CHECK(violation.subjects == std::vector<std::string>{"S1", "coder1", "q1"});
}

TEST_CASE("a valid corpus produces an empty report") {
    CHECK(validate_corpus(fixtures::walkthrough()).ok());
    CHECK(validate_corpus(fixtures::frequency_shaped()).ok());
}

TEST_CASE("overlapping quotations in one document are flagged") {
    Corpus corpus = fixtures::minimal();
    corpus.quotations = {
        {"q1", "doc1", 0, 10, {}},
        {"q2", "doc1", 5, 15, {}},
    };
    ValidationReport report = validate_corpus(corpus);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::OverlappingQuotations);

    // same spans in different documents do not overlap
    corpus.documents.push_back({"doc2", ""});
    corpus.quotations[1].document = "doc2";
    CHECK(validate_corpus(corpus).ok());
}

TEST_CASE("an empty span is reported as a quotation problem") {
    Corpus corpus = fixtures::minimal();
    corpus.quotations[0].end = corpus.quotations[0].start;
    ValidationReport report = validate_corpus(corpus);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::OverlappingQuotations);
}

TEST_CASE("duplicate assignment triples are rejected loudly") {
    Corpus corpus = fixtures::walkthrough();
    corpus.assignments.push_back(corpus.assignments.front());
    ValidationReport report = validate_corpus(corpus);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::DuplicateAssignment);
}

TEST_CASE("domains without codes are flagged") {
    Corpus corpus = fixtures::minimal();
    corpus.codebook.domains.push_back({"D2", "empty", "", {}});
    ValidationReport report = validate_corpus(corpus);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::EmptyDomain);
    CHECK(report.violations[0].subjects == std::vector<std::string>{"D2"});
}

TEST_CASE("a codebook without domains is flagged") {
    Corpus corpus = fixtures::minimal();
    corpus.codebook.domains.clear();
    corpus.assignments.clear();
    ValidationReport report = validate_corpus(corpus);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::EmptyDomain);
    CHECK(report.violations[0].subjects == std::vector<std::string>{"codebook"});
}

TEST_CASE("validation is independent of assignment order") {
    std::mt19937_64 rng(555);
    for (int round = 0; round < 50; ++round) {
        Corpus corpus = fixtures::random_corpus(rng);
        // seed a few violations
        if (!corpus.assignments.empty()) {
            corpus.assignments.push_back(corpus.assignments.front());
        }
        corpus.assignments.push_back({"ghost", "q0", "D0c0"});
        ValidationReport before = validate_corpus(corpus);
        std::shuffle(corpus.assignments.begin(), corpus.assignments.end(), rng);
        ValidationReport after = validate_corpus(corpus);
        CHECK(before.violations == after.violations);
    }
}

TEST_CASE("coverage lists uncoded quotations per coder") {
    Corpus corpus = fixtures::minimal();
    corpus.quotations = {
        {"q1", "doc1", 0, 5, {}},
        {"q2", "doc1", 5, 10, {}},
        {"q3", "doc1", 10, 15, {}},
    };
    corpus.assignments = {
        {"solo", "q1", "D1a"},
        {"solo", "q3", "D1a"},
    };
    CoverageReport report = coverage_report(corpus, "solo");
    CHECK(report.coded == 2);
    CHECK(report.uncoded == 1);
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[0].domains == std::vector<std::string>{"D1"});
    CHECK(report.rows[1].domains.empty());
}

TEST_CASE("a coder with no assignments leaves everything uncoded") {
    Corpus corpus = fixtures::walkthrough();
    corpus.coders.push_back("coder3");
    CoverageReport report = coverage_report(corpus, "coder3");
    CHECK(report.coded == 0);
    CHECK(report.uncoded == corpus.quotations.size());
}

TEST_CASE("coverage totals differ per coder when their codings differ") {
    Corpus corpus = fixtures::minimal();
    corpus.coders = {"a", "b"};
    corpus.authoritative_coder = "a";
    corpus.quotations = {
        {"q1", "doc1", 0, 5, {}},
        {"q2", "doc1", 5, 10, {}},
    };
    corpus.assignments = {
        {"a", "q1", "D1a"},
        {"b", "q1", "D1a"},
        {"b", "q2", "D1a"},
    };
    CoverageReport a = coverage_report(corpus, "a");
    CoverageReport b = coverage_report(corpus, "b");
    CHECK(a.coded == 1);
    CHECK(a.uncoded == 1);
    CHECK(b.coded == 2);
    CHECK(b.uncoded == 0);
    CHECK_THROWS_AS(coverage_report(corpus, "nobody"), Error);
}

TEST_CASE("JSON round-trips preserve the corpus structurally") {
    CHECK(parse_corpus_json(serialize_corpus_json(fixtures::walkthrough())) ==
          fixtures::walkthrough());
    CHECK(parse_corpus_json(serialize_corpus_json(fixtures::frequency_shaped())) ==
          fixtures::frequency_shaped());
    CHECK(parse_corpus_json(serialize_corpus_json(fixtures::minimal())) ==
          fixtures::minimal());
    std::mt19937_64 rng(321);
    for (int round = 0; round < 100; ++round) {
        Corpus corpus = fixtures::random_corpus(rng);
        CHECK(parse_corpus_json(serialize_corpus_json(corpus)) == corpus);
    }
}

TEST_CASE("serialization is deterministic") {
    Corpus corpus = fixtures::walkthrough();
    CHECK(serialize_corpus_json(corpus) == serialize_corpus_json(corpus));
}

TEST_CASE("CSV bundles round-trip corpora that fit the bundle's shape") {
    // the bundle derives coders from assignments and drops the authoritative
    // coder, so start from a corpus matching those constraints
    Corpus corpus = fixtures::walkthrough();
    corpus.authoritative_coder.reset();
    Corpus reloaded = parse_corpus_csv(serialize_corpus_csv(corpus));
    CHECK(reloaded == corpus);
}

TEST_CASE("CSV fields with commas, quotes, and newlines survive") {
    Corpus corpus = fixtures::minimal();
    corpus.quotations[0].text = "hello, \"world\"\nsecond line";
    corpus.documents[0].case_label = "case, with comma";
    corpus.assignments = {{"solo", "q1", "D1a"}};
    Corpus reloaded = parse_corpus_csv(serialize_corpus_csv(corpus));
    CHECK(reloaded.quotations[0].text == corpus.quotations[0].text);
    CHECK(reloaded.documents[0].case_label == corpus.documents[0].case_label);
}

TEST_CASE("CSV bundle rejects wrong headers and non-integer offsets") {
    CsvBundle bundle = serialize_corpus_csv(fixtures::walkthrough());
    CsvBundle broken_header = bundle;
    broken_header.documents = "identifier,case\n";
    CHECK_THROWS_AS(parse_corpus_csv(broken_header), ParseError);

    CsvBundle broken_offset = bundle;
    broken_offset.quotations = "id,document,start,end,text\nq1,doc1,zero,5,\n";
    CHECK_THROWS_AS(parse_corpus_csv(broken_offset), ParseError);
}

TEST_CASE("the authoritative coder defaults to the only coder") {
    Corpus corpus = fixtures::minimal();
    CHECK(authoritative_coder(corpus) == "solo");
    corpus.coders = {"a", "b"};
    CHECK_FALSE(authoritative_coder(corpus).has_value());
    corpus.authoritative_coder = "b";
    CHECK(authoritative_coder(corpus) == "b");
}
