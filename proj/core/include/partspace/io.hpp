#pragma once

#include <string>
#include <vector>

#include "partspace/partition.hpp"

namespace partspace {

// Partition file formats.
//
// JSON, soft:  {"l": 2, "m": 3, "rows": [[0.5, 1, 0], [0.5, 0, 1]]}
// JSON, hard:  {"labels": [0, 0, 1], "l": 2}
// CSV:         one row per cluster, comma-separated reals.
//
// A bundle is a JSON array of partition objects in either form.
//
// Readers validate and surface the usual construction errors
// (ColumnSumViolation, EntryOutOfRange, LabelOutOfRange, ...); structurally
// malformed input raises InvalidParameter.

PartitionMatrix read_partition_json(const std::string& text);
PartitionMatrix read_partition_csv(const std::string& text);

// Dispatches on the .csv extension, JSON otherwise.
PartitionMatrix read_partition_file(const std::string& path);

// Hard matrices serialize in the compact labels form, soft ones as rows.
std::string write_partition_json(const PartitionMatrix& matrix);

std::vector<PartitionMatrix> read_bundle_json(const std::string& text);
std::string write_bundle_json(const std::vector<PartitionMatrix>& members);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace partspace
