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

#include "charterlab/service/workspace.h"

#include <openssl/evp.h>

#include <fstream>
#include <set>
#include <sstream>

#include "charterlab/formats/coco.h"
#include "charterlab/formats/pagexml.h"
#include "charterlab/service/image_probe.h"

namespace charterlab::service {
namespace {

namespace fs = std::filesystem;

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kWorkspaceUnreadable, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFileAtomically(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::kWorkspaceUnreadable, "cannot write " + tmp.string());
    }
    out << content;
    if (!out.flush()) {
      throw Error(ErrorCode::kWorkspaceUnreadable, "short write to " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

std::string Sha256Prefix(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
             nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < 8 && i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

std::string Stem(const std::string& image_id) {
  return fs::path(image_id).stem().string();
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(ErrorCode::kValidationFailed,
            violations.empty() ? "validation failed"
                               : "validation failed: " + violations[0].message),
      violations_(std::move(violations)) {}

VersionConflictError::VersionConflictError(long expected, long current)
    : Error(ErrorCode::kVersionConflict,
            "expected version " + std::to_string(expected) +
                " but stored version is " + std::to_string(current)),
      current_(current) {}

ExportFormat ParseExportFormat(std::string_view name) {
  if (name == "coco") return ExportFormat::kCoco;
  if (name == "yolo") return ExportFormat::kYolo;
  if (name == "pagexml") return ExportFormat::kPageXml;
  throw Error(ErrorCode::kUnknownFormat,
              "unknown export format '" + std::string(name) + "'");
}

Workspace::Workspace(fs::path root, std::optional<fs::path> config)
    : root_(std::move(root)) {
  std::error_code ec;
  if (!fs::is_directory(root_, ec)) {
    throw Error(ErrorCode::kWorkspaceUnreadable,
                root_.string() + " is not a directory");
  }
  image_dir_ = fs::is_directory(root_ / "images") ? root_ / "images" : root_;
  annotation_dir_ = root_ / "annotations";

  if (config) {
    ontology_ = Ontology::FromFile(*config);
  } else if (fs::exists(root_ / "config.json")) {
    ontology_ = Ontology::FromFile(root_ / "config.json");
  } else {
    ontology_ = Ontology::Default();
  }

  std::map<std::string, long> versions;
  if (fs::exists(root_ / "index.json")) {
    try {
      const auto index = nlohmann::json::parse(ReadFile(root_ / "index.json"));
      versions = index.at("versions").get<std::map<std::string, long>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kWorkspaceUnreadable,
                  std::string("corrupt index.json: ") + e.what());
    }
  }

  try {
    for (const auto& item : fs::directory_iterator(image_dir_)) {
      if (!item.is_regular_file() || !IsImageFile(item.path())) continue;
      auto slot = std::make_unique<Slot>();
      ImageEntry& e = slot->entry;
      e.id = item.path().filename().string();
      e.path = item.path();
      const ImageInfo info = ProbeImage(item.path());
      e.decode_error = !info.decodable;
      e.width = info.width;
      e.height = info.height;
      e.content_hash = Sha256Prefix(ReadFile(item.path()));
      if (const auto it = versions.find(e.id); it != versions.end()) {
        slot->version = it->second;
      } else if (fs::exists(AnnotationPath(e.id))) {
        slot->version = 1;
      }
      slots_.emplace(e.id, std::move(slot));
    }
  } catch (const fs::filesystem_error& e) {
    throw Error(ErrorCode::kWorkspaceUnreadable, e.what());
  }
}

Workspace::~Workspace() = default;

Workspace::Slot& Workspace::FindSlot(const std::string& image_id) const {
  const auto it = slots_.find(image_id);
  if (it == slots_.end()) {
    throw Error(ErrorCode::kUnknownImage, "unknown image '" + image_id + "'");
  }
  return *it->second;
}

fs::path Workspace::AnnotationPath(const std::string& image_id) const {
  return annotation_dir_ / (image_id + ".json");
}

std::vector<ImageEntry> Workspace::ListImages() const {
  std::vector<ImageEntry> out;
  for (const auto& [id, slot] : slots_) {
    std::shared_lock lock(slot->mutex);
    ImageEntry e = slot->entry;
    e.annotated = fs::exists(AnnotationPath(id));
    out.push_back(std::move(e));
  }
  return out;
}

ImageEntry Workspace::Image(const std::string& image_id) const {
  Slot& slot = FindSlot(image_id);
  std::shared_lock lock(slot.mutex);
  ImageEntry e = slot.entry;
  e.annotated = fs::exists(AnnotationPath(image_id));
  return e;
}

StoredDoc Workspace::GetAnnotations(const std::string& image_id) const {
  Slot& slot = FindSlot(image_id);
  std::shared_lock lock(slot.mutex);
  const fs::path path = AnnotationPath(image_id);
  if (!fs::exists(path)) {
    AnnotationDoc empty;
    empty.image_id = image_id;
    empty.image_width = slot.entry.width;
    empty.image_height = slot.entry.height;
    return {std::move(empty), 0};
  }
  return {ParseDoc(ReadFile(path)), slot.version};
}

long Workspace::PutAnnotations(const std::string& image_id,
                               const AnnotationDoc& doc,
                               long expected_version) {
  Slot& slot = FindSlot(image_id);
  auto violations = ValidateDoc(doc, ontology_);
  if (doc.image_id != image_id) {
    violations.push_back({Violation::kDocumentLevel,
                          ViolationRule::kImageMismatch,
                          "doc image_id does not name this image"});
  }
  if (!slot.entry.decode_error && (doc.image_width != slot.entry.width ||
                                   doc.image_height != slot.entry.height)) {
    violations.push_back({Violation::kDocumentLevel,
                          ViolationRule::kImageMismatch,
                          "doc size differs from the image size"});
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));

  std::unique_lock lock(slot.mutex);
  if (expected_version != slot.version) {
    throw VersionConflictError(expected_version, slot.version);
  }
  fs::create_directories(annotation_dir_);
  WriteFileAtomically(AnnotationPath(image_id), SerializeDoc(doc));
  ++slot.version;
  SaveIndex();
  return slot.version;
}

void Workspace::SaveIndex() const {
  std::lock_guard lock(index_mutex_);
  nlohmann::json versions = nlohmann::json::object();
  for (const auto& [id, slot] : slots_) {
    if (slot->version > 0) versions[id] = slot->version.load();
  }
  WriteFileAtomically(root_ / "index.json",
                      nlohmann::json{{"versions", versions}}.dump(2) + "\n");
}

std::vector<ArchiveEntry> Workspace::Export(ExportFormat format,
                                            const YoloOptions& yolo) const {
  std::vector<AnnotationDoc> docs;
  for (const auto& [id, slot] : slots_) {
    std::shared_lock lock(slot->mutex);
    if (fs::exists(AnnotationPath(id))) {
      docs.push_back(ParseDoc(ReadFile(AnnotationPath(id))));
    }
  }
  if (docs.empty()) {
    throw Error(ErrorCode::kNothingToExport, "no annotated images");
  }

  std::set<std::string> stems;
  for (const auto& doc : docs) {
    if (format != ExportFormat::kCoco && !stems.insert(Stem(doc.image_id)).second) {
      throw Error(ErrorCode::kDuplicateImageId,
                  "two images share the file stem '" + Stem(doc.image_id) + "'");
    }
  }

  std::vector<ArchiveEntry> files;
  switch (format) {
    case ExportFormat::kCoco:
      files.push_back(
          {"annotations.json", CocoToJson(ExportCoco(docs, ontology_)).dump(2) + "\n"});
      break;
    case ExportFormat::kYolo:
      files.push_back({"names.txt", YoloNamesFile(ontology_)});
      for (const auto& doc : docs) {
        std::string text;
        for (const auto& line : ExportYolo(doc, yolo)) text += line + "\n";
        files.push_back({"labels/" + Stem(doc.image_id) + ".txt", std::move(text)});
      }
      break;
    case ExportFormat::kPageXml:
      for (const auto& doc : docs) {
        files.push_back({"page/" + Stem(doc.image_id) + ".xml",
                         PageXmlToString(ExportPageXml(doc, ontology_))});
      }
      break;
  }
  return files;
}

}  // namespace charterlab::service
