// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Instance and result documents. Serialization is canonical: object keys and
// agent identifiers sorted, contracts in index order, two-space indentation,
// so equal instances produce byte-equal documents.

#ifndef LAMINAR_MATCH_JSON_IO_HPP_
#define LAMINAR_MATCH_JSON_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "laminar_match/core.hpp"

namespace laminar_match {

// Parses an instance document. Contract indices are assigned in document
// order. Throws ParseError on malformed documents, unknown agents, or
// duplicate identifiers.
Instance parse_instance(const std::string& text);

// Reads and parses a document from disk. Throws InstanceError when the file
// cannot be read.
Instance load_instance(const std::filesystem::path& path);

std::string serialize_instance(const Instance& inst);

nlohmann::json matching_json(const Instance& inst, const Matching& m);

// Maps contract names from a result document back to ids.
Matching matching_from_json(const Instance& inst, const nlohmann::json& names);

nlohmann::json validation_report_json(const Instance& inst,
                                      const std::vector<Violation>& report);

void write_text_file(const std::filesystem::path& path,
                     const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace laminar_match

#endif  // LAMINAR_MATCH_JSON_IO_HPP_
