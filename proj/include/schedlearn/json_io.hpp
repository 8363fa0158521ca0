// Copyright 2026 The schedlearn Authors
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

#ifndef SCHEDLEARN_JSON_IO_HPP
#define SCHEDLEARN_JSON_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "schedlearn/eval.hpp"

namespace schedlearn {

using json = nlohmann::ordered_json;

// Dimension names that default to ordered=true when a document omits the
// flag. Serialized schemas always carry it explicitly.
const std::vector<std::string>& default_temporal_dims();  // {"Days", "Shifts"}

json schema_to_json(const DimensionSchema& schema);
DimensionSchema schema_from_json(const json& doc,
                                 const std::vector<std::string>& temporal_dims =
                                     default_temporal_dims());

// Schedule document: {"dimensions": [{"name", "values", "ordered"}, ...],
// "cells": [[i, j, ...], ...]} listing the positions of the 1-cells, or the
// dense variant {"data": [0, 1, ...]} in canonical order.
json schedule_to_json(const ScheduleTensor& t);
ScheduleTensor schedule_from_json(const json& doc,
                                  const std::vector<std::string>& temporal_dims =
                                      default_temporal_dims());

// Model document: {"schema": {...}, "constraints": [{"kind", "M", "S",
// "lower", "upper"}, ...]} with null for a missing bound.
json model_to_json(const ConstraintModel& m);
ConstraintModel model_from_json(const json& doc);

// Background knowledge document: {"exclude": [{"M", "S", "note"}, ...]}.
json bk_to_json(const BackgroundKnowledge& bk);
BackgroundKnowledge bk_from_json(const json& doc);

// Scenario document: {"name", "target": <model doc>, "bk": <bk doc>,
// "generator": {"initial_density", "max_repair_steps", "restarts"}}; bk and
// generator are optional.
json scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const json& doc);

// File helpers. Loads wrap syntax/semantic problems in ParseError with the
// path and location; saves write atomically (temp file + rename).
ScheduleTensor load_schedule(const std::filesystem::path& path);
void save_schedule(const std::filesystem::path& path, const ScheduleTensor& t);
ConstraintModel load_model(const std::filesystem::path& path);
void save_model(const std::filesystem::path& path, const ConstraintModel& m);
BackgroundKnowledge load_bk(const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);

void write_text_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace schedlearn

#endif  // SCHEDLEARN_JSON_IO_HPP
