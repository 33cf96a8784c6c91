#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bentcode/app/pipeline.hpp"
#include "bentcode/app/search.hpp"

namespace bentcode {

enum class Format { Json, Csv, Table };

// Throws std::invalid_argument for anything but json, csv, table.
Format parse_format(const std::string& s);

nlohmann::json to_json(const PipelineReport& r);
nlohmann::json to_json(const TheoremPrediction& p);
nlohmann::json to_json(const SearchSummary& s);

void write_reports(std::ostream& os, const std::vector<PipelineReport>& reports, Format fmt);
void write_prediction(std::ostream& os, const TheoremPrediction& p, Format fmt);
void write_search(std::ostream& os, const SearchSummary& s, Format fmt);

}  // namespace bentcode
