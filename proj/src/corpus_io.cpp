// Corpus readers and writers. JSON is the canonical format; the CSV bundle
// mirrors it with one file per record kind and coders derived from
// assignments.csv in first-appearance order.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ica/corpus.hpp"
#include "json.hpp"

namespace ica {

namespace {

using nlohmann::json;

void require_keys(const json& object, const char* what,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional) {
    if (!object.is_object()) {
        throw ParseError(ErrorCode::Schema, std::string(what) + " must be a JSON object");
    }
    for (const char* key : required) {
        if (!object.contains(key)) {
            throw ParseError(ErrorCode::Schema,
                             std::string(what) + " is missing field '" + key + "'");
        }
    }
    for (auto it = object.begin(); it != object.end(); ++it) {
        const std::string& key = it.key();
        auto in = [&key](std::initializer_list<const char*> names) {
            for (const char* name : names) {
                if (key == name) return true;
            }
            return false;
        };
        if (!in(required) && !in(optional)) {
            throw ParseError(ErrorCode::Schema,
                             std::string(what) + " has unexpected field '" + key + "'");
        }
    }
}

std::string get_string(const json& object, const char* what, const char* key) {
    const json& value = object.at(key);
    if (!value.is_string()) {
        throw ParseError(ErrorCode::Schema,
                         std::string(what) + " field '" + key + "' must be a string");
    }
    return value.get<std::string>();
}

std::string get_string_or(const json& object, const char* what, const char* key,
                          std::string fallback) {
    if (!object.contains(key)) return fallback;
    return get_string(object, what, key);
}

std::int64_t get_int(const json& object, const char* what, const char* key) {
    const json& value = object.at(key);
    if (!value.is_number_integer()) {
        throw ParseError(ErrorCode::Schema,
                         std::string(what) + " field '" + key + "' must be an integer");
    }
    return value.get<std::int64_t>();
}

const json& get_array(const json& object, const char* what, const char* key) {
    const json& value = object.at(key);
    if (!value.is_array()) {
        throw ParseError(ErrorCode::Schema,
                         std::string(what) + " field '" + key + "' must be an array");
    }
    return value;
}

}  // namespace

Corpus parse_corpus_json(std::string_view bytes) {
    json root;
    try {
        root = json::parse(bytes);
    } catch (const json::parse_error& error) {
        throw ParseError(ErrorCode::Syntax, error.what(), 0, error.byte);
    }
    require_keys(root, "corpus",
                 {"codebook", "coders", "documents", "quotations", "assignments"},
                 {"authoritative_coder"});

    Corpus corpus;
    const json& codebook = root.at("codebook");
    require_keys(codebook, "codebook", {"domains"}, {});
    for (const json& domain_json : get_array(codebook, "codebook", "domains")) {
        require_keys(domain_json, "domain", {"id"}, {"name", "description", "codes"});
        SemanticDomain domain;
        domain.id = get_string(domain_json, "domain", "id");
        domain.name = get_string_or(domain_json, "domain", "name", "");
        domain.description = get_string_or(domain_json, "domain", "description", "");
        if (domain_json.contains("codes")) {
            for (const json& code_json : get_array(domain_json, "domain", "codes")) {
                require_keys(code_json, "code", {"id"}, {"name", "description"});
                Code code;
                code.id = get_string(code_json, "code", "id");
                code.name = get_string_or(code_json, "code", "name", "");
                code.description = get_string_or(code_json, "code", "description", "");
                domain.codes.push_back(std::move(code));
            }
        }
        corpus.codebook.domains.push_back(std::move(domain));
    }

    for (const json& coder : get_array(root, "corpus", "coders")) {
        if (!coder.is_string()) {
            throw ParseError(ErrorCode::Schema, "coders must be an array of strings");
        }
        corpus.coders.push_back(coder.get<std::string>());
    }
    for (const json& document_json : get_array(root, "corpus", "documents")) {
        require_keys(document_json, "document", {"id"}, {"case"});
        corpus.documents.push_back({get_string(document_json, "document", "id"),
                                    get_string_or(document_json, "document", "case", "")});
    }
    for (const json& quotation_json : get_array(root, "corpus", "quotations")) {
        require_keys(quotation_json, "quotation", {"id", "document", "start", "end"},
                     {"text"});
        Quotation quotation;
        quotation.id = get_string(quotation_json, "quotation", "id");
        quotation.document = get_string(quotation_json, "quotation", "document");
        quotation.start = get_int(quotation_json, "quotation", "start");
        quotation.end = get_int(quotation_json, "quotation", "end");
        if (quotation_json.contains("text")) {
            quotation.text = get_string(quotation_json, "quotation", "text");
        }
        corpus.quotations.push_back(std::move(quotation));
    }
    for (const json& assignment_json : get_array(root, "corpus", "assignments")) {
        require_keys(assignment_json, "assignment", {"coder", "quotation", "code"}, {});
        corpus.assignments.push_back({get_string(assignment_json, "assignment", "coder"),
                                      get_string(assignment_json, "assignment", "quotation"),
                                      get_string(assignment_json, "assignment", "code")});
    }
    if (root.contains("authoritative_coder")) {
        corpus.authoritative_coder = get_string(root, "corpus", "authoritative_coder");
    }

    CorpusIndex index(corpus);  // rejects duplicate ids
    return corpus;
}

std::string serialize_corpus_json(const Corpus& corpus) {
    json root;
    json domains = json::array();
    for (const auto& domain : corpus.codebook.domains) {
        json codes = json::array();
        for (const auto& code : domain.codes) {
            codes.push_back({{"id", code.id},
                             {"name", code.name},
                             {"description", code.description}});
        }
        domains.push_back({{"id", domain.id},
                           {"name", domain.name},
                           {"description", domain.description},
                           {"codes", std::move(codes)}});
    }
    root["codebook"] = {{"domains", std::move(domains)}};
    root["coders"] = corpus.coders;
    json documents = json::array();
    for (const auto& document : corpus.documents) {
        documents.push_back({{"id", document.id}, {"case", document.case_label}});
    }
    root["documents"] = std::move(documents);
    json quotations = json::array();
    for (const auto& quotation : corpus.quotations) {
        json q = {{"id", quotation.id},
                  {"document", quotation.document},
                  {"start", quotation.start},
                  {"end", quotation.end}};
        if (quotation.text) q["text"] = *quotation.text;
        quotations.push_back(std::move(q));
    }
    root["quotations"] = std::move(quotations);
    json assignments = json::array();
    for (const auto& assignment : corpus.assignments) {
        assignments.push_back({{"coder", assignment.coder},
                               {"quotation", assignment.quotation},
                               {"code", assignment.code}});
    }
    root["assignments"] = std::move(assignments);
    if (corpus.authoritative_coder) {
        root["authoritative_coder"] = *corpus.authoritative_coder;
    }
    return root.dump(2) + "\n";
}

namespace {

// Minimal CSV reader: quoted fields, doubled quotes, CRLF and embedded
// newlines inside quotes.
std::vector<std::vector<std::string>> parse_csv(std::string_view text,
                                                const std::string& file) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    std::size_t line = 1;

    auto end_field = [&] {
        row.push_back(field);
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        if (row.size() == 1 && row[0].empty()) {
            row.clear();  // blank line
            return;
        }
        rows.push_back(row);
        row.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (field.empty() && !field_started) {
                    quoted = true;
                    field_started = true;
                } else {
                    throw ParseError(ErrorCode::Syntax,
                                     file + ": stray quote inside unquoted field", line);
                }
                break;
            case ',': end_field(); break;
            case '\r':
                if (i + 1 < text.size() && text[i + 1] == '\n') break;  // swallow, LF ends row
                end_row();
                ++line;
                break;
            case '\n':
                end_row();
                ++line;
                break;
            default:
                field.push_back(c);
                field_started = true;
                break;
        }
    }
    if (quoted) throw ParseError(ErrorCode::Syntax, file + ": unterminated quoted field", line);
    if (!field.empty() || field_started || !row.empty()) end_row();
    return rows;
}

void require_header(const std::vector<std::vector<std::string>>& rows,
                    const std::vector<std::string>& expected, const std::string& file) {
    if (rows.empty() || rows.front() != expected) {
        std::string want;
        for (const auto& column : expected) {
            if (!want.empty()) want += ",";
            want += column;
        }
        throw ParseError(ErrorCode::Schema, file + ": header must be exactly '" + want + "'");
    }
}

void require_width(const std::vector<std::string>& row, std::size_t width,
                   const std::string& file, std::size_t line) {
    if (row.size() != width) {
        throw ParseError(ErrorCode::Schema,
                         file + ": expected " + std::to_string(width) + " fields, got " +
                             std::to_string(row.size()),
                         line);
    }
}

std::int64_t parse_offset(const std::string& value, const std::string& file,
                          std::size_t line) {
    try {
        std::size_t used = 0;
        std::int64_t parsed = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw ParseError(ErrorCode::Syntax, file + ": '" + value + "' is not an integer",
                         line);
    }
}

std::string csv_escape(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

}  // namespace

Corpus parse_corpus_csv(const CsvBundle& bundle) {
    Corpus corpus;

    auto codebook_rows = parse_csv(bundle.codebook, "codebook.csv");
    require_header(codebook_rows,
                   {"domain_id", "domain_name", "domain_description", "code_id", "code_name",
                    "code_description"},
                   "codebook.csv");
    for (std::size_t r = 1; r < codebook_rows.size(); ++r) {
        const auto& row = codebook_rows[r];
        require_width(row, 6, "codebook.csv", r + 1);
        SemanticDomain* domain = nullptr;
        for (auto& existing : corpus.codebook.domains) {
            if (existing.id == row[0]) {
                domain = &existing;
                break;
            }
        }
        if (domain == nullptr) {
            corpus.codebook.domains.push_back({row[0], row[1], row[2], {}});
            domain = &corpus.codebook.domains.back();
        }
        domain->codes.push_back({row[3], row[4], row[5]});
    }

    auto document_rows = parse_csv(bundle.documents, "documents.csv");
    require_header(document_rows, {"id", "case"}, "documents.csv");
    for (std::size_t r = 1; r < document_rows.size(); ++r) {
        const auto& row = document_rows[r];
        require_width(row, 2, "documents.csv", r + 1);
        corpus.documents.push_back({row[0], row[1]});
    }

    auto quotation_rows = parse_csv(bundle.quotations, "quotations.csv");
    require_header(quotation_rows, {"id", "document", "start", "end", "text"},
                   "quotations.csv");
    for (std::size_t r = 1; r < quotation_rows.size(); ++r) {
        const auto& row = quotation_rows[r];
        require_width(row, 5, "quotations.csv", r + 1);
        Quotation quotation;
        quotation.id = row[0];
        quotation.document = row[1];
        quotation.start = parse_offset(row[2], "quotations.csv", r + 1);
        quotation.end = parse_offset(row[3], "quotations.csv", r + 1);
        if (!row[4].empty()) quotation.text = row[4];
        corpus.quotations.push_back(std::move(quotation));
    }

    auto assignment_rows = parse_csv(bundle.assignments, "assignments.csv");
    require_header(assignment_rows, {"coder", "quotation", "code"}, "assignments.csv");
    for (std::size_t r = 1; r < assignment_rows.size(); ++r) {
        const auto& row = assignment_rows[r];
        require_width(row, 3, "assignments.csv", r + 1);
        corpus.assignments.push_back({row[0], row[1], row[2]});
        if (std::find(corpus.coders.begin(), corpus.coders.end(), row[0]) ==
            corpus.coders.end()) {
            corpus.coders.push_back(row[0]);
        }
    }

    CorpusIndex index(corpus);
    return corpus;
}

CsvBundle serialize_corpus_csv(const Corpus& corpus) {
    CsvBundle bundle;
    std::ostringstream codebook;
    codebook << "domain_id,domain_name,domain_description,code_id,code_name,code_description\n";
    for (const auto& domain : corpus.codebook.domains) {
        for (const auto& code : domain.codes) {
            codebook << csv_escape(domain.id) << ',' << csv_escape(domain.name) << ','
                     << csv_escape(domain.description) << ',' << csv_escape(code.id) << ','
                     << csv_escape(code.name) << ',' << csv_escape(code.description) << '\n';
        }
    }
    bundle.codebook = codebook.str();

    std::ostringstream documents;
    documents << "id,case\n";
    for (const auto& document : corpus.documents) {
        documents << csv_escape(document.id) << ',' << csv_escape(document.case_label) << '\n';
    }
    bundle.documents = documents.str();

    std::ostringstream quotations;
    quotations << "id,document,start,end,text\n";
    for (const auto& quotation : corpus.quotations) {
        quotations << csv_escape(quotation.id) << ',' << csv_escape(quotation.document) << ','
                   << quotation.start << ',' << quotation.end << ','
                   << csv_escape(quotation.text.value_or("")) << '\n';
    }
    bundle.quotations = quotations.str();

    std::ostringstream assignments;
    assignments << "coder,quotation,code\n";
    for (const auto& assignment : corpus.assignments) {
        assignments << csv_escape(assignment.coder) << ',' << csv_escape(assignment.quotation)
                    << ',' << csv_escape(assignment.code) << '\n';
    }
    bundle.assignments = assignments.str();
    return bundle;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream input(path, std::ios::binary);
    if (!input) {
        throw ParseError(ErrorCode::Syntax, "cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << input.rdbuf();
    return buffer.str();
}

}  // namespace

Corpus load_corpus(const std::string& path) {
    std::filesystem::path p(path);
    if (std::filesystem::is_directory(p)) {
        CsvBundle bundle;
        bundle.codebook = read_file(p / "codebook.csv");
        bundle.documents = read_file(p / "documents.csv");
        bundle.quotations = read_file(p / "quotations.csv");
        bundle.assignments = read_file(p / "assignments.csv");
        return parse_corpus_csv(bundle);
    }
    return parse_corpus_json(read_file(p));
}

}  // namespace ica
