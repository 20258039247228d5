#include <json.hpp>

#include "reposim/similarity.hpp"

namespace reposim::similarity {

std::string emit_matrix_dump(const ExperimentResult& result) {
    using ojson = nlohmann::ordered_json;
    ojson matrices = ojson::array();
    for (std::size_t i = 0; i < result.matrices.size(); ++i) {
        const report::ReportRow& row = result.report.rows.at(i);
        const SimilarityMatrix& m = result.matrices[i];
        ojson e;
        e["repo_a"] = row.repo_a;
        e["repo_b"] = row.repo_b;
        e["vectorizer"] = std::string(vsm::mode_name(row.vectorizer));
        e["kind_a"] = std::string(kind_name(row.kind_a));
        e["kind_b"] = std::string(kind_name(row.kind_b));
        e["row_ids"] = m.row_ids;
        e["col_ids"] = m.col_ids;
        e["scores"] = m.scores;
        matrices.push_back(std::move(e));
    }
    ojson j;
    j["matrices"] = std::move(matrices);
    return j.dump(2) + "\n";
}

}  // namespace reposim::similarity
