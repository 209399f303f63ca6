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

#include "charterlab/service/server.h"

#include <fstream>
#include <sstream>

#include "charterlab/core/rect.h"
#include "charterlab/core/validation.h"
#include "httplib.h"

namespace charterlab::service {
namespace {

using nlohmann::json;

int HttpStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownImage:
    case ErrorCode::kNothingToExport:
      return 404;
    case ErrorCode::kVersionConflict:
      return 409;
    case ErrorCode::kValidationFailed:
    case ErrorCode::kDegenerateRect:
      return 422;
    case ErrorCode::kWorkspaceUnreadable:
      return 500;
    default:
      return 400;
  }
}

json ViolationsToJson(const std::vector<Violation>& violations) {
  json out = json::array();
  for (const auto& v : violations) {
    out.push_back({{"index", v.index},
                   {"rule", ViolationRuleName(v.rule)},
                   {"message", v.message}});
  }
  return out;
}

void SendJson(httplib::Response& res, const json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void SendError(httplib::Response& res, const Error& e, json extra = json::object()) {
  extra["error"] = ErrorCodeName(e.code());
  extra["message"] = e.what();
  SendJson(res, extra, HttpStatus(e.code()));
}

json ParseBody(const httplib::Request& req) {
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("request body: ") + e.what());
  }
}

// Runs `handler`, turning library errors into JSON error responses.
template <typename Handler>
httplib::Server::Handler Guarded(Handler handler) {
  return [handler](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const ValidationError& e) {
      SendError(res, e, {{"violations", ViolationsToJson(e.violations())}});
    } catch (const VersionConflictError& e) {
      SendError(res, e, {{"current_version", e.current_version()}});
    } catch (const Error& e) {
      SendError(res, e);
    } catch (const json::exception& e) {
      SendError(res, Error(ErrorCode::kParse, e.what()));
    }
  };
}

Rect ValidRectFromJson(const json& object) {
  const Rect r = RectFromJson(object);
  if (!r.IsValid()) {
    throw Error(ErrorCode::kValidationFailed, "invalid rect");
  }
  return r;
}

std::string ReadBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kWorkspaceUnreadable, "cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json ImageToJson(const ImageEntry& e) {
  return {{"id", e.id},
          {"width", e.width},
          {"height", e.height},
          {"annotated", e.annotated},
          {"decode_error", e.decode_error},
          {"file_url", "/api/images/" + httplib::detail::encode_url(e.id) +
                           "/file?h=" + e.content_hash}};
}

}  // namespace

struct AnnotationServer::Impl {
  Workspace& workspace;
  ServerOptions options;
  httplib::Server http;
  int port = -1;

  Impl(Workspace& ws, ServerOptions opts)
      : workspace(ws), options(std::move(opts)) {
    Routes();
  }

  void Routes() {
    http.Get("/api/images", Guarded([this](const auto&, auto& res) {
      json images = json::array();
      for (const auto& e : workspace.ListImages()) images.push_back(ImageToJson(e));
      SendJson(res, {{"images", images}});
    }));

    http.Get(R"(/api/images/([^/]+)/file)",
             Guarded([this](const auto& req, auto& res) {
               const ImageEntry e = workspace.Image(req.matches[1]);
               const std::string mime =
                   e.path.extension() == ".png" ? "image/png" : "image/jpeg";
               res.set_header("Cache-Control",
                              "public, max-age=31536000, immutable");
               res.set_header("ETag", "\"" + e.content_hash + "\"");
               res.set_content(ReadBytes(e.path), mime);
             }));

    http.Get(R"(/api/images/([^/]+)/annotations)",
             Guarded([this](const auto& req, auto& res) {
               const StoredDoc stored = workspace.GetAnnotations(req.matches[1]);
               SendJson(res, {{"doc", DocToJson(stored.doc)},
                              {"version", stored.version}});
             }));

    http.Put(R"(/api/images/([^/]+)/annotations)",
             Guarded([this](const auto& req, auto& res) {
               const json body = ParseBody(req);
               if (!body.is_object() || !body.contains("doc") ||
                   !body.contains("expected_version")) {
                 throw Error(ErrorCode::kParse,
                             "body needs 'doc' and 'expected_version'");
               }
               const long version = workspace.PutAnnotations(
                   req.matches[1], DocFromJson(body.at("doc")),
                   body.at("expected_version").get<long>());
               SendJson(res, {{"version", version}});
             }));

    http.Get("/api/config", Guarded([this](const auto&, auto& res) {
      SendJson(res, workspace.ontology().ToJson());
    }));

    http.Post("/api/export", Guarded([this](const auto& req, auto& res) {
      const ExportFormat format =
          ParseExportFormat(req.get_param_value("format"));
      YoloOptions yolo;
      yolo.drop_ignore = req.get_param_value("drop_ignore") == "1" ||
                         req.get_param_value("drop_ignore") == "true";
      const auto files = workspace.Export(format, yolo);
      res.set_header("Content-Disposition",
                     "attachment; filename=\"export-" +
                         req.get_param_value("format") + ".tar\"");
      res.set_content(WriteTar(files), "application/x-tar");
    }));

    http.Post("/api/validate", Guarded([this](const auto& req, auto& res) {
      const json body = ParseBody(req);
      const AnnotationDoc doc = DocFromJson(body.at("doc"));
      SendJson(res, {{"violations",
                      ViolationsToJson(ValidateDoc(doc, workspace.ontology()))}});
    }));

    http.Post("/api/rect/union", Guarded([](const auto& req, auto& res) {
      const json body = ParseBody(req);
      const Rect u = RectUnion(ValidRectFromJson(body.at("a")),
                               ValidRectFromJson(body.at("b")));
      SendJson(res, {{"rect", RectToJson(u)}});
    }));

    http.Post("/api/rect/subtract", Guarded([](const auto& req, auto& res) {
      const json body = ParseBody(req);
      json pieces = json::array();
      for (const Rect& r : RectSubtract(ValidRectFromJson(body.at("a")),
                                        ValidRectFromJson(body.at("b")))) {
        pieces.push_back(RectToJson(r));
      }
      SendJson(res, {{"pieces", pieces}});
    }));

    if (options.static_dir) {
      http.set_mount_point("/", options.static_dir->string());
    }
  }
};

AnnotationServer::AnnotationServer(Workspace& workspace, ServerOptions options)
    : impl_(std::make_unique<Impl>(workspace, std::move(options))) {}

AnnotationServer::~AnnotationServer() = default;

int AnnotationServer::Bind() {
  if (impl_->options.port == 0) {
    impl_->port = impl_->http.bind_to_any_port(impl_->options.host);
  } else if (impl_->http.bind_to_port(impl_->options.host,
                                      impl_->options.port)) {
    impl_->port = impl_->options.port;
  }
  if (impl_->port < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot bind " + impl_->options.host + ":" +
                    std::to_string(impl_->options.port));
  }
  return impl_->port;
}

void AnnotationServer::Run() { impl_->http.listen_after_bind(); }

void AnnotationServer::Stop() { impl_->http.stop(); }

}  // namespace charterlab::service
