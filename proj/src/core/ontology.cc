// Copyright 2026 The Charterlab Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "charterlab/core/ontology.h"

#include <fstream>
#include <set>

#include "charterlab/core/error.h"

namespace charterlab {

Ontology Ontology::Default() {
  Ontology onto;
  onto.labels_ = {"No Class",          "Ignore",
                  "Img:CalibrationCard", "Img:Seal",
                  "Img:WritableArea",  "Wr:OldText",
                  "Wr:OldNote",        "Wr:NewText",
                  "Wr:NewOther",       "WrO:Ornament",
                  "WrO:Fold"};
  for (int id = 1; id <= 9; ++id) {
    onto.key_bindings_[std::to_string(id)] = static_cast<ClassId>(id);
  }
  onto.key_bindings_["0"] = ClassId::kFold;
  onto.preferences_ = {
      {"autosave", false},
      {"min_drag_px", 3},
      {"mode_toggle_key", "Tab"},
      {"save_key", "s"},
      {"delete_key", "Delete"},
      {"next_key", "n"},
      {"previous_key", "p"},
      {"union_key", "u"},
      {"subtract_key", "x"},
  };
  return onto;
}

Ontology Ontology::FromJson(const nlohmann::json& config) {
  if (!config.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "config must be a JSON object");
  }
  Ontology onto = Default();
  try {
    if (config.contains("labels")) {
      onto.labels_ = config.at("labels").get<std::vector<std::string>>();
      if (!config.contains("key_bindings")) {
        std::erase_if(onto.key_bindings_, [&onto](const auto& kv) {
          return !onto.Contains(kv.second);
        });
      }
    }
    if (config.contains("key_bindings")) {
      onto.key_bindings_.clear();
      for (const auto& [key, id] : config.at("key_bindings").items()) {
        onto.key_bindings_[key] = static_cast<ClassId>(id.get<int>());
      }
    }
    if (config.contains("preferences")) {
      const auto& prefs = config.at("preferences");
      if (!prefs.is_object()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "config preferences must be an object");
      }
      onto.preferences_.update(prefs);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("malformed config: ") + e.what());
  }
  onto.Check();
  return onto;
}

Ontology Ontology::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot open config file " + path.string());
  }
  nlohmann::json config;
  try {
    config = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
  return FromJson(config);
}

nlohmann::json Ontology::ToJson() const {
  nlohmann::json bindings = nlohmann::json::object();
  for (const auto& [key, id] : key_bindings_) bindings[key] = ToInt(id);
  return {{"labels", labels_},
          {"key_bindings", bindings},
          {"preferences", preferences_}};
}

const std::string& Ontology::Label(ClassId id) const {
  if (!Contains(id)) {
    throw Error(ErrorCode::kInvalidArgument,
                "class id " + std::to_string(ToInt(id)) + " not in ontology");
  }
  return labels_[ToInt(id)];
}

void Ontology::Check() const {
  if (labels_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "ontology has no labels");
  }
  std::set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty class label");
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate class label " + label);
    }
  }
  for (const auto& [key, id] : key_bindings_) {
    if (key.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty key binding");
    }
    if (!Contains(id)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "key '" + key + "' bound to unknown class id " +
                      std::to_string(ToInt(id)));
    }
  }
}

}  // namespace charterlab
