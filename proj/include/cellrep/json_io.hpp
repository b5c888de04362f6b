#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "json.hpp"

#include "cellrep/based_category.hpp"
#include "cellrep/cells.hpp"
#include "cellrep/classify.hpp"
#include "cellrep/int_matrix.hpp"
#include "cellrep/matrix_rep.hpp"

namespace cellrep {

// Parse failures carry a line:column diagnostic.
nlohmann::json parse_json(const std::string& text, const std::string& source_name);
nlohmann::json load_json_file(const std::filesystem::path& path);

nlohmann::json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BasedCategory& cat);
BasedCategory category_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MultTable& t);
MultTable multtable_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KLRingData& d);
KLRingData klringdata_from_json(const nlohmann::json& j);

// MatrixRep is stored with its category inline or as a file path, resolved
// relative to base_dir.
nlohmann::json to_json(const MatrixRep& rep, bool inline_category = true);
MatrixRep rep_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

nlohmann::json to_json(const CellStructure& cs);
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const StrongRegularity& result);
nlohmann::json to_json(const NumericalCondition& result);
nlohmann::json to_json(const AnnihilatorCheck& result);
nlohmann::json to_json(const ActionPreorder& order);
nlohmann::json to_json(const WeakJhResult& result);
nlohmann::json to_json(const QuasiIdempotentResult& result);
nlohmann::json to_json(const CorollaryResult& result);
nlohmann::json to_json(const ClassificationReport& report);

}  // namespace cellrep
