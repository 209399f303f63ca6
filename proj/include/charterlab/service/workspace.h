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

#ifndef CHARTERLAB_SERVICE_WORKSPACE_H_
#define CHARTERLAB_SERVICE_WORKSPACE_H_

#include <filesystem>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "charterlab/core/annotation.h"
#include "charterlab/core/error.h"
#include "charterlab/core/ontology.h"
#include "charterlab/core/validation.h"
#include "charterlab/formats/yolo.h"
#include "charterlab/service/tar_archive.h"

namespace charterlab::service {

// Thrown by PutAnnotations() when the doc fails validation.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Thrown by PutAnnotations() on a stale expected_version.
class VersionConflictError : public Error {
 public:
  VersionConflictError(long expected, long current);
  long current_version() const { return current_; }

 private:
  long current_;
};

struct ImageEntry {
  std::string id;  // file name inside the images directory
  std::filesystem::path path;
  int width = 0;
  int height = 0;
  bool decode_error = false;
  bool annotated = false;
  // Hex prefix of the SHA-256 of the file; used in cache-busting URLs.
  std::string content_hash;
};

struct StoredDoc {
  AnnotationDoc doc;
  long version = 0;
};

enum class ExportFormat { kCoco, kYolo, kPageXml };

// Throws Error(kUnknownFormat).
ExportFormat ParseExportFormat(std::string_view name);

// A directory of images with their annotation files:
//
//   <root>/images/       image files (.png, .jpg, .jpeg); <root> itself when
//                        there is no images/ directory
//   <root>/annotations/  <image id>.json, one canonical doc per image
//   <root>/index.json    version counter per image
//   <root>/config.json   optional ontology / preferences override
//
// The image index is built once, when the workspace is opened. Reads of one
// image never block each other; writes to one image are serialized.
class Workspace {
 public:
  // Throws Error(kWorkspaceUnreadable) when `root` is not a readable
  // directory. `config` overrides <root>/config.json.
  explicit Workspace(std::filesystem::path root,
                     std::optional<std::filesystem::path> config = {});
  ~Workspace();

  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const std::filesystem::path& root() const { return root_; }
  const Ontology& ontology() const { return ontology_; }

  // Ordered by id.
  std::vector<ImageEntry> ListImages() const;

  // Throws Error(kUnknownImage).
  ImageEntry Image(const std::string& image_id) const;

  // The stored doc, or an empty doc at version 0 when the image has never
  // been annotated. Throws Error(kUnknownImage).
  StoredDoc GetAnnotations(const std::string& image_id) const;

  // Replaces the stored doc and returns the new version (old + 1). Throws
  // Error(kUnknownImage), ValidationError, or VersionConflictError when
  // `expected_version` is not the stored version.
  long PutAnnotations(const std::string& image_id, const AnnotationDoc& doc,
                      long expected_version);

  // Files for every annotated image, in id order:
  //   coco     annotations.json
  //   yolo     names.txt, labels/<stem>.txt
  //   pagexml  page/<stem>.xml
  // Throws Error(kNothingToExport) when nothing is annotated.
  std::vector<ArchiveEntry> Export(ExportFormat format,
                                   const YoloOptions& yolo = {}) const;

 private:
  struct Slot {
    ImageEntry entry;
    mutable std::shared_mutex mutex;
    std::atomic<long> version{0};
  };

  Slot& FindSlot(const std::string& image_id) const;
  std::filesystem::path AnnotationPath(const std::string& image_id) const;
  void SaveIndex() const;

  std::filesystem::path root_;
  std::filesystem::path image_dir_;
  std::filesystem::path annotation_dir_;
  Ontology ontology_;
  std::map<std::string, std::unique_ptr<Slot>> slots_;
  mutable std::mutex index_mutex_;
};

}  // namespace charterlab::service

#endif  // CHARTERLAB_SERVICE_WORKSPACE_H_
