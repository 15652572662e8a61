#pragma once

#include <json.hpp>

#include "ontosearch/error.hpp"
#include "ontosearch/perf_model.hpp"
#include "ontosearch/query_engine.hpp"

namespace ontosearch {

// Objects use nlohmann::json's default std::map storage, so keys serialize in
// sorted order and equal inputs give byte-identical output.

nlohmann::json value_json(const Value& value);

/// Body of a successful POST /api/query:
/// {query, mentions, mode, property, results, groups, trace}.
nlohmann::json answer_json(std::string_view query, const Extraction& extraction,
                           const Answer& answer);

/// {"error": {"code", "message"}}.
nlohmann::json error_json(std::string_view code, std::string_view message);
nlohmann::json error_json(const Error& error);

/// Class forest with direct instances, plus the property table and counts.
nlohmann::json ontology_json(const KnowledgeBase& kb);

nlohmann::json instance_json(const KnowledgeBase& kb, const InstanceRecord& instance);

nlohmann::json class_instances_json(const KnowledgeBase& kb, const Name& cls);

nlohmann::json perf_json(double r, const std::vector<perf::CostRow<double>>& rows);

}  // namespace ontosearch
