#pragma once

// Measurement datasets on disk.
//
// CSV with header `label,n,kind,value,unit,reference`:
//   kind  fq | xi2
//   unit  none (fq) | linear | db (xi2)
//   value decimal text, kept verbatim
// Fields containing commas, quotes or newlines are double-quoted with ""
// escaping. Labels are unique and restricted to [A-Za-z0-9._-] because they
// name the per-record output directories.

#include <iosfwd>
#include <string>
#include <vector>

#include "youngent/witness.hpp"

namespace youngent {

using DatasetRecord = Measurement;

inline constexpr const char* kDatasetHeader = "label,n,kind,value,unit,reference";

/// Throws InputError with the offending line number on malformed input.
std::vector<DatasetRecord> parse_dataset(std::istream& in);
std::vector<DatasetRecord> read_dataset(const std::string& path);

std::string serialize_dataset(const std::vector<DatasetRecord>& records);

/// Throws InputError unless the label is a safe directory name.
void validate_label(const std::string& label);

}  // namespace youngent
