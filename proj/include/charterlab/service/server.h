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

#ifndef CHARTERLAB_SERVICE_SERVER_H_
#define CHARTERLAB_SERVICE_SERVER_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "charterlab/service/workspace.h"

namespace charterlab::service {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  // Served at "/" when set (the browser UI bundle).
  std::optional<std::filesystem::path> static_dir;
};

// HTTP/JSON front end of a Workspace.
//
//   GET  /api/images                      image list
//   GET  /api/images/{id}/file            original bytes, immutable caching
//   GET  /api/images/{id}/annotations     {"doc": ..., "version": n}
//   PUT  /api/images/{id}/annotations     {"doc": ..., "expected_version": n}
//   GET  /api/config                      labels, key bindings, preferences
//   POST /api/export?format=coco|yolo|pagexml[&drop_ignore=1]   tar archive
//   POST /api/validate                    {"doc": ...} -> violations
//   POST /api/rect/union                  {"a": rect, "b": rect}
//   POST /api/rect/subtract               {"a": rect, "b": rect}
//
// Errors come back as {"error": <code name>, "message": ...} with 400 (bad
// request, unknown format), 404 (unknown image, nothing to export), 409
// (version conflict, plus "current_version") or 422 (validation, plus
// "violations").
class AnnotationServer {
 public:
  AnnotationServer(Workspace& workspace, ServerOptions options);
  ~AnnotationServer();

  AnnotationServer(const AnnotationServer&) = delete;
  AnnotationServer& operator=(const AnnotationServer&) = delete;

  // Binds the listening socket and returns the port. Throws
  // Error(kInvalidArgument) when binding fails.
  int Bind();
  // Serves until Stop(); call Bind() first.
  void Run();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace charterlab::service

#endif  // CHARTERLAB_SERVICE_SERVER_H_
