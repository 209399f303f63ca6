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

#ifndef CHARTERLAB_CORE_ONTOLOGY_H_
#define CHARTERLAB_CORE_ONTOLOGY_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace charterlab {

// Class ids follow the fixed charter ontology order. Values outside the
// enumerators are representable so that malformed input can be validated.
enum class ClassId : int {
  kNoClass = 0,
  kIgnore = 1,
  kCalibrationCard = 2,
  kSeal = 3,
  kWritableArea = 4,
  kOldText = 5,
  kOldNote = 6,
  kNewText = 7,
  kNewOther = 8,
  kOrnament = 9,
  kFold = 10,
};

constexpr int kNumCharterClasses = 11;

constexpr int ToInt(ClassId id) { return static_cast<int>(id); }

// Flat list of class labels indexed by ClassId, with the single-key bindings
// and free-form preferences the annotation UI reads from the config file.
class Ontology {
 public:
  // The eleven charter classes, digits 1-9 bound to ids 1-9 and 0 to id 10.
  static Ontology Default();

  // Applies a user config on top of Default(). Recognised fields are
  // "labels" (replaces the list), "key_bindings" (replaces the map) and
  // "preferences" (merged key by key). Throws Error(kInvalidArgument) when the
  // result breaks an invariant.
  static Ontology FromJson(const nlohmann::json& config);
  static Ontology FromFile(const std::filesystem::path& path);

  nlohmann::json ToJson() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::map<std::string, ClassId>& key_bindings() const {
    return key_bindings_;
  }
  const nlohmann::json& preferences() const { return preferences_; }

  int size() const { return static_cast<int>(labels_.size()); }
  bool Contains(ClassId id) const {
    return ToInt(id) >= 0 && ToInt(id) < size();
  }
  // Throws Error(kInvalidArgument) for ids outside the ontology.
  const std::string& Label(ClassId id) const;

 private:
  void Check() const;

  std::vector<std::string> labels_;
  std::map<std::string, ClassId> key_bindings_;
  nlohmann::json preferences_ = nlohmann::json::object();
};

}  // namespace charterlab

#endif  // CHARTERLAB_CORE_ONTOLOGY_H_
