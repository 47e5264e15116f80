#ifndef PARTLOG_JSON_OUT_HPP
#define PARTLOG_JSON_OUT_HPP

#include <json.hpp>

#include "partlog/explorer.hpp"
#include "partlog/structures.hpp"
#include "partlog/tautology.hpp"

namespace partlog {

// JSON shapes consumed by the CLI; the schemas shipped under schemas/
// mirror these.

nlohmann::json partition_to_json(const Partition& p);
nlohmann::json relation_to_json(const BinaryRelation& r);
nlohmann::json verdict_to_json(const TautologyVerdict& v);
nlohmann::json corpus_report_to_json(const CorpusReport& report);
nlohmann::json core_to_json(const BooleanCore& core);
nlohmann::json embedding_report_to_json(const EmbeddingReport& report);
nlohmann::json explore_report_to_json(const ExploreReport& report);

std::string explore_counts_csv(const ExploreReport& report);

}  // namespace partlog

#endif
