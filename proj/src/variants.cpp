#include "ica/variants.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ica {

namespace {

std::vector<std::string> resolve_coders(const Corpus& corpus,
                                        const std::vector<std::string>& requested) {
    std::vector<std::string> coders = requested.empty() ? corpus.coders : requested;
    std::set<std::string> known(corpus.coders.begin(), corpus.coders.end());
    for (const auto& coder : coders) {
        if (!known.count(coder)) {
            throw Error(ErrorCode::UnknownCoder, "unknown coder '" + coder + "'");
        }
    }
    if (coders.size() < 2) {
        throw Error(ErrorCode::FewerThanTwoCoders,
                    "agreement needs at least two coders, got " +
                        std::to_string(coders.size()));
    }
    return coders;
}

// coder index -> quotation index -> codes applied (global code indices)
using AssignmentGrid = std::vector<std::vector<std::vector<std::size_t>>>;

AssignmentGrid grid_for(const Corpus& corpus, const CorpusIndex& index,
                        const std::vector<std::string>& coders) {
    std::map<std::string, std::size_t> coder_pos;
    for (std::size_t c = 0; c < coders.size(); ++c) coder_pos.emplace(coders[c], c);
    AssignmentGrid grid(coders.size(),
                        std::vector<std::vector<std::size_t>>(corpus.quotations.size()));
    for (const auto& assignment : corpus.assignments) {
        auto coder = coder_pos.find(assignment.coder);
        if (coder == coder_pos.end()) continue;
        const std::size_t quotation = index.quotation_index(assignment.quotation);
        grid[coder->second][quotation].push_back(index.code_index(assignment.code));
    }
    return grid;
}

std::vector<std::size_t> selected_items(const Corpus& corpus, const AssignmentGrid& grid,
                                        Scope scope) {
    std::vector<std::size_t> items;
    for (std::size_t q = 0; q < corpus.quotations.size(); ++q) {
        if (scope == Scope::Coded) {
            bool coded = false;
            for (const auto& coder : grid) coded = coded || !coder[q].empty();
            if (!coded) continue;
        }
        items.push_back(q);
    }
    return items;
}

EvaluationSet skeleton(const Corpus& corpus, const std::vector<std::string>& coders,
                       const std::vector<std::size_t>& items, Weighting weighting) {
    EvaluationSet evals;
    evals.judges = coders;
    for (std::size_t q : items) {
        const Quotation& quotation = corpus.quotations[q];
        std::int64_t weight = weighting == Weighting::Length ? quotation.length() : 1;
        evals.items.push_back({quotation.id, weight});
    }
    evals.evaluations.assign(coders.size(),
                             std::vector<std::vector<std::uint32_t>>(items.size()));
    return evals;
}

// flattened code index -> position of its domain in codebook order plus the
// code's position within the domain
struct CodeLocation {
    std::size_t domain;
    std::size_t within;
};

std::vector<CodeLocation> code_locations(const Corpus& corpus) {
    std::vector<CodeLocation> locations;
    for (std::size_t d = 0; d < corpus.codebook.domains.size(); ++d) {
        for (std::size_t c = 0; c < corpus.codebook.domains[d].codes.size(); ++c) {
            locations.push_back({d, c});
        }
    }
    return locations;
}

EvaluationSet project(const Corpus& corpus, const MeasureKind& measure,
                      const std::vector<std::string>& coders,
                      const std::vector<std::size_t>& items, Weighting weighting) {
    CorpusIndex index(corpus);
    AssignmentGrid grid = grid_for(corpus, index, coders);
    std::vector<CodeLocation> locations = code_locations(corpus);
    EvaluationSet evals = skeleton(corpus, coders, items, weighting);

    switch (measure.variant) {
        case MeasureVariant::Binary: {
            const std::size_t domain = index.domain_index(measure.domain);
            evals.labels = {"1", "0"};
            for (std::size_t c = 0; c < coders.size(); ++c) {
                for (std::size_t k = 0; k < items.size(); ++k) {
                    bool applied = false;
                    for (std::size_t code : grid[c][items[k]]) {
                        applied = applied || locations[code].domain == domain;
                    }
                    evals.evaluations[c][k] = {applied ? 0u : 1u};
                }
            }
            break;
        }
        case MeasureVariant::CuWithinDomain: {
            const std::size_t domain = index.domain_index(measure.domain);
            for (const auto& code : corpus.codebook.domains[domain].codes) {
                evals.labels.push_back(code.id);
            }
            for (std::size_t c = 0; c < coders.size(); ++c) {
                for (std::size_t k = 0; k < items.size(); ++k) {
                    std::vector<std::uint32_t> chosen;
                    for (std::size_t code : grid[c][items[k]]) {
                        if (locations[code].domain == domain) {
                            chosen.push_back(std::uint32_t(locations[code].within));
                        }
                    }
                    if (chosen.size() > 1) {
                        throw Error(ErrorCode::MutualExclusiveness,
                                    "coder '" + coders[c] + "' applied " +
                                        std::to_string(chosen.size()) + " codes of domain '" +
                                        measure.domain + "' to quotation '" +
                                        corpus.quotations[items[k]].id + "'");
                    }
                    evals.evaluations[c][k] = chosen;
                }
            }
            break;
        }
        case MeasureVariant::CuAcrossDomains: {
            for (const auto& domain : corpus.codebook.domains) {
                evals.labels.push_back(domain.id);
            }
            for (std::size_t c = 0; c < coders.size(); ++c) {
                for (std::size_t k = 0; k < items.size(); ++k) {
                    std::set<std::uint32_t> domains;
                    for (std::size_t code : grid[c][items[k]]) {
                        domains.insert(std::uint32_t(locations[code].domain));
                    }
                    evals.evaluations[c][k].assign(domains.begin(), domains.end());
                }
            }
            break;
        }
    }
    evals.check();
    return evals;
}

std::vector<std::size_t> all_items(const Corpus& corpus) {
    std::vector<std::size_t> items(corpus.quotations.size());
    for (std::size_t q = 0; q < items.size(); ++q) items[q] = q;
    return items;
}

}  // namespace

EvaluationSet binary_projection(const Corpus& corpus, const std::string& domain,
                                const std::vector<std::string>& coders) {
    return project(corpus, MeasureKind::binary(domain), resolve_coders(corpus, coders),
                   all_items(corpus), Weighting::Uniform);
}

EvaluationSet cu_projection(const Corpus& corpus, const std::string& domain,
                            const std::vector<std::string>& coders) {
    return project(corpus, MeasureKind::cu(domain), resolve_coders(corpus, coders),
                   all_items(corpus), Weighting::Uniform);
}

EvaluationSet domain_projection(const Corpus& corpus,
                                const std::vector<std::string>& coders) {
    return project(corpus, MeasureKind::cu_across(), resolve_coders(corpus, coders),
                   all_items(corpus), Weighting::Uniform);
}

AlphaResult variant_alpha(const Corpus& corpus, const MeasureKind& measure,
                          const std::vector<std::string>& coders, Weighting weighting,
                          Scope scope) {
    std::vector<std::string> selected = resolve_coders(corpus, coders);
    CorpusIndex index(corpus);
    AssignmentGrid grid = grid_for(corpus, index, selected);
    std::vector<std::size_t> items = selected_items(corpus, grid, scope);
    EvaluationSet evals = project(corpus, measure, selected, items, weighting);
    return compute_alpha(evals, discrete_metric(evals.labels));
}

}  // namespace ica
