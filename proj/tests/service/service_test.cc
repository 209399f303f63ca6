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

#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "charterlab/core/error.h"
#include "charterlab/service/image_probe.h"
#include "charterlab/service/server.h"
#include "charterlab/service/tar_archive.h"
#include "charterlab/service/workspace.h"
#include "httplib.h"
#include "image_fixtures.h"
#include "json.hpp"

namespace charterlab::service {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

AnnotationDoc DocFor(const std::string& id, int w, int h) {
  AnnotationDoc doc;
  doc.image_id = id;
  doc.image_width = w;
  doc.image_height = h;
  RectAnnotation wa;
  wa.rect = {2, 2, 60, 46};
  wa.class_id = ClassId::kWritableArea;
  RectAnnotation text;
  text.rect = {4.5, 5, 30, 12.25};
  text.class_id = ClassId::kOldText;
  text.transcription = "Anno domini";
  RectAnnotation ignore;
  ignore.rect = {50, 40, 55, 44};
  ignore.class_id = ClassId::kIgnore;
  ignore.comment = "smudge";
  doc.annotations = {wa, text, ignore};
  return doc;
}

class WorkspaceTest : public ::testing::Test {
 protected:
  void SetUp() override { root_ = testing_data::MakeSampleWorkspace(); }
  void TearDown() override { fs::remove_all(root_); }
  fs::path root_;
};

TEST(ImageProbeTest, ReadsHeaders) {
  const fs::path root = testing_data::MakeSampleWorkspace();
  const ImageInfo png = ProbeImage(root / "images" / "a.png");
  EXPECT_TRUE(png.decodable);
  EXPECT_EQ(png.width, 64);
  EXPECT_EQ(png.height, 48);
  EXPECT_EQ(png.mime_type, "image/png");
  const ImageInfo jpg = ProbeImage(root / "images" / "b.jpg");
  EXPECT_TRUE(jpg.decodable);
  EXPECT_EQ(jpg.width, 40);
  EXPECT_EQ(jpg.height, 30);
  const ImageInfo broken = ProbeImage(root / "images" / "broken.png");
  EXPECT_FALSE(broken.decodable);
  EXPECT_FALSE(broken.error.empty());
  EXPECT_TRUE(IsImageFile("x.JPEG"));
  EXPECT_FALSE(IsImageFile("notes.txt"));
  fs::remove_all(root);
}

TEST_F(WorkspaceTest, ListsImagesInIdOrder) {
  Workspace ws(root_);
  const auto images = ws.ListImages();
  ASSERT_EQ(images.size(), 3u);
  EXPECT_EQ(images[0].id, "a.png");
  EXPECT_EQ(images[1].id, "b.jpg");
  EXPECT_EQ(images[2].id, "broken.png");
  EXPECT_EQ(images[0].width, 64);
  EXPECT_FALSE(images[0].decode_error);
  EXPECT_TRUE(images[2].decode_error);
  EXPECT_EQ(images[0].content_hash.size(), 16u);
  EXPECT_NE(images[0].content_hash, images[1].content_hash);
  for (const auto& e : images) EXPECT_FALSE(e.annotated);
}

TEST_F(WorkspaceTest, UnknownImageAndMissingRoot) {
  Workspace ws(root_);
  try {
    ws.GetAnnotations("nope.png");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownImage);
  }
  try {
    Workspace missing(root_ / "does-not-exist");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWorkspaceUnreadable);
  }
}

TEST_F(WorkspaceTest, UnannotatedImageGivesEmptyDocAtVersionZero) {
  Workspace ws(root_);
  const StoredDoc s = ws.GetAnnotations("a.png");
  EXPECT_EQ(s.version, 0);
  EXPECT_EQ(s.doc.image_id, "a.png");
  EXPECT_EQ(s.doc.image_width, 64);
  EXPECT_TRUE(s.doc.annotations.empty());
}

TEST_F(WorkspaceTest, PutThenGetIsByteIdentical) {
  Workspace ws(root_);
  const AnnotationDoc doc = DocFor("a.png", 64, 48);
  EXPECT_EQ(ws.PutAnnotations("a.png", doc, 0), 1);
  const StoredDoc s = ws.GetAnnotations("a.png");
  EXPECT_EQ(s.version, 1);
  EXPECT_EQ(SerializeDoc(s.doc), SerializeDoc(doc));
  EXPECT_EQ(Slurp(root_ / "annotations" / "a.png.json"), SerializeDoc(doc));
  EXPECT_TRUE(ws.Image("a.png").annotated);

  // A fresh workspace over the same directory sees the stored version.
  Workspace reopened(root_);
  EXPECT_EQ(reopened.GetAnnotations("a.png").version, 1);
  EXPECT_EQ(reopened.PutAnnotations("a.png", doc, 1), 2);
}

TEST_F(WorkspaceTest, StaleVersionConflicts) {
  Workspace ws(root_);
  const AnnotationDoc doc = DocFor("a.png", 64, 48);
  ws.PutAnnotations("a.png", doc, 0);
  try {
    ws.PutAnnotations("a.png", doc, 0);
    FAIL();
  } catch (const VersionConflictError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kVersionConflict);
    EXPECT_EQ(e.current_version(), 1);
  }
  EXPECT_EQ(ws.GetAnnotations("a.png").version, 1);
}

TEST_F(WorkspaceTest, RejectsInvalidDocsWithoutWriting) {
  Workspace ws(root_);
  AnnotationDoc doc = DocFor("a.png", 64, 48);
  doc.annotations[0].rect = {2, 2, 100, 46};  // past the right edge
  try {
    ws.PutAnnotations("a.png", doc, 0);
    FAIL();
  } catch (const ValidationError& e) {
    ASSERT_EQ(e.violations().size(), 1u);
    EXPECT_EQ(e.violations()[0].rule, ViolationRule::kOutOfBounds);
  }
  EXPECT_THROW(ws.PutAnnotations("a.png", DocFor("b.jpg", 64, 48), 0),
               ValidationError);
  EXPECT_THROW(ws.PutAnnotations("a.png", DocFor("a.png", 65, 48), 0),
               ValidationError);
  EXPECT_FALSE(fs::exists(root_ / "annotations" / "a.png.json"));
}

TEST_F(WorkspaceTest, ConcurrentWritersWithSameBaseGetOneConflict) {
  Workspace ws(root_);
  const AnnotationDoc doc = DocFor("a.png", 64, 48);
  for (int round = 0; round < 20; ++round) {
    const long base = ws.GetAnnotations("a.png").version;
    std::atomic<int> ok{0};
    std::atomic<int> conflicts{0};
    std::vector<std::thread> writers;
    for (int t = 0; t < 2; ++t) {
      writers.emplace_back([&] {
        try {
          ws.PutAnnotations("a.png", doc, base);
          ++ok;
        } catch (const VersionConflictError&) {
          ++conflicts;
        }
      });
    }
    for (auto& w : writers) w.join();
    EXPECT_EQ(ok.load(), 1);
    EXPECT_EQ(conflicts.load(), 1);
    EXPECT_EQ(ws.GetAnnotations("a.png").version, base + 1);
  }
}

TEST_F(WorkspaceTest, ConcurrentWritersOnDifferentImages) {
  Workspace ws(root_);
  std::thread a([&] {
    for (long v = 0; v < 25; ++v) ws.PutAnnotations("a.png", DocFor("a.png", 64, 48), v);
  });
  std::thread b([&] {
    AnnotationDoc doc = DocFor("b.jpg", 40, 30);
    doc.annotations.resize(1);
    doc.annotations[0].rect = {1, 1, 39, 29};
    for (long v = 0; v < 25; ++v) ws.PutAnnotations("b.jpg", doc, v);
  });
  a.join();
  b.join();
  const json index = json::parse(Slurp(root_ / "index.json"));
  EXPECT_EQ(index["versions"]["a.png"], 25);
  EXPECT_EQ(index["versions"]["b.jpg"], 25);
}

TEST_F(WorkspaceTest, ExportsEachFormat) {
  Workspace ws(root_);
  EXPECT_THROW(ws.Export(ExportFormat::kCoco), Error);
  ws.PutAnnotations("a.png", DocFor("a.png", 64, 48), 0);

  const auto coco = ws.Export(ExportFormat::kCoco);
  ASSERT_EQ(coco.size(), 1u);
  EXPECT_EQ(coco[0].path, "annotations.json");
  const json c = json::parse(coco[0].content);
  EXPECT_EQ(c["images"].size(), 1u);
  EXPECT_EQ(c["annotations"].size(), 3u);

  const auto yolo = ws.Export(ExportFormat::kYolo);
  ASSERT_EQ(yolo.size(), 2u);
  EXPECT_EQ(yolo[0].path, "names.txt");
  EXPECT_EQ(yolo[1].path, "labels/a.txt");
  EXPECT_EQ(std::count(yolo[1].content.begin(), yolo[1].content.end(), '\n'), 3);
  YoloOptions drop;
  drop.drop_ignore = true;
  const auto dropped = ws.Export(ExportFormat::kYolo, drop);
  EXPECT_EQ(std::count(dropped[1].content.begin(), dropped[1].content.end(), '\n'),
            2);

  const auto page = ws.Export(ExportFormat::kPageXml);
  ASSERT_EQ(page.size(), 1u);
  EXPECT_EQ(page[0].path, "page/a.xml");
  EXPECT_NE(page[0].content.find("Anno domini"), std::string::npos);

  EXPECT_THROW(ParseExportFormat("tiff"), Error);
  EXPECT_EQ(ParseExportFormat("pagexml"), ExportFormat::kPageXml);
}

TEST_F(WorkspaceTest, ConfigOverridesLabels) {
  std::ofstream(root_ / "config.json")
      << R"({"preferences": {"autosave": true}})";
  Workspace ws(root_);
  EXPECT_EQ(ws.ontology().preferences().at("autosave"), true);
  EXPECT_EQ(ws.ontology().size(), kNumCharterClasses);
}

TEST(TarTest, RoundTripAndChecksum) {
  const std::vector<ArchiveEntry> entries = {
      {"annotations.json", "{}\n"},
      {"labels/a.txt", std::string(1500, 'x')},
      {"empty.txt", ""}};
  const std::string tar = WriteTar(entries);
  EXPECT_EQ(tar.size() % 512, 0u);
  EXPECT_EQ(ReadTar(tar), entries);
  EXPECT_EQ(WriteTar(entries), tar);  // deterministic

  std::string corrupt = tar;
  corrupt[10] ^= 1;
  EXPECT_THROW(ReadTar(corrupt), Error);
  EXPECT_THROW(WriteTar(std::vector<ArchiveEntry>{{std::string(101, 'p'), ""}}),
               Error);
}

// ---- HTTP -------------------------------------------------------------------

class ServerTest : public WorkspaceTest {
 protected:
  void SetUp() override {
    WorkspaceTest::SetUp();
    ws_ = std::make_unique<Workspace>(root_);
    ServerOptions opts;
    opts.port = 0;
    server_ = std::make_unique<AnnotationServer>(*ws_, opts);
    port_ = server_->Bind();
    thread_ = std::thread([this] { server_->Run(); });
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }
  void TearDown() override {
    server_->Stop();
    thread_.join();
    WorkspaceTest::TearDown();
  }

  std::unique_ptr<Workspace> ws_;
  std::unique_ptr<AnnotationServer> server_;
  std::unique_ptr<httplib::Client> client_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(ServerTest, ListsImagesAndServesFiles) {
  auto res = client_->Get("/api/images");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  const json body = json::parse(res->body);
  ASSERT_EQ(body["images"].size(), 3u);
  EXPECT_EQ(body["images"][0]["id"], "a.png");
  EXPECT_EQ(body["images"][2]["decode_error"], true);

  const std::string url = body["images"][0]["file_url"];
  auto file = client_->Get(url);
  ASSERT_TRUE(file);
  EXPECT_EQ(file->status, 200);
  EXPECT_EQ(file->body, Slurp(root_ / "images" / "a.png"));
  EXPECT_EQ(file->get_header_value("Content-Type"), "image/png");
  EXPECT_NE(file->get_header_value("Cache-Control").find("immutable"),
            std::string::npos);

  auto missing = client_->Get("/api/images/zzz.png/file");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
}

TEST_F(ServerTest, PutGetAndConflict) {
  const AnnotationDoc doc = DocFor("a.png", 64, 48);
  const json put = {{"doc", DocToJson(doc)}, {"expected_version", 0}};
  auto r1 = client_->Put("/api/images/a.png/annotations", put.dump(),
                         "application/json");
  ASSERT_TRUE(r1);
  EXPECT_EQ(r1->status, 200);
  EXPECT_EQ(json::parse(r1->body)["version"], 1);

  auto got = client_->Get("/api/images/a.png/annotations");
  ASSERT_TRUE(got);
  const json g = json::parse(got->body);
  EXPECT_EQ(g["version"], 1);
  EXPECT_EQ(SerializeDoc(DocFromJson(g["doc"])), SerializeDoc(doc));

  auto stale = client_->Put("/api/images/a.png/annotations", put.dump(),
                            "application/json");
  ASSERT_TRUE(stale);
  EXPECT_EQ(stale->status, 409);
  EXPECT_EQ(json::parse(stale->body)["current_version"], 1);

  AnnotationDoc bad = doc;
  bad.annotations[1].class_id = ClassId::kNoClass;
  const json bad_put = {{"doc", DocToJson(bad)}, {"expected_version", 1}};
  auto invalid = client_->Put("/api/images/a.png/annotations", bad_put.dump(),
                              "application/json");
  ASSERT_TRUE(invalid);
  EXPECT_EQ(invalid->status, 422);
  EXPECT_EQ(json::parse(invalid->body)["violations"].size(), 1u);

  auto garbage = client_->Put("/api/images/a.png/annotations", "{not json",
                              "application/json");
  ASSERT_TRUE(garbage);
  EXPECT_EQ(garbage->status, 400);
}

TEST_F(ServerTest, ExportReturnsTar) {
  auto none = client_->Post("/api/export?format=coco", "", "text/plain");
  ASSERT_TRUE(none);
  EXPECT_EQ(none->status, 404);

  ws_->PutAnnotations("a.png", DocFor("a.png", 64, 48), 0);
  auto res = client_->Post("/api/export?format=yolo&drop_ignore=1", "",
                           "text/plain");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/x-tar");
  const auto entries = ReadTar(res->body);
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[1].path, "labels/a.txt");
  EXPECT_EQ(std::count(entries[1].content.begin(), entries[1].content.end(), '\n'),
            2);

  auto unknown = client_->Post("/api/export?format=tiff", "", "text/plain");
  ASSERT_TRUE(unknown);
  EXPECT_EQ(unknown->status, 400);
  EXPECT_EQ(json::parse(unknown->body)["error"], "UnknownFormat");
}

TEST_F(ServerTest, ConfigValidateAndRectEndpoints) {
  auto cfg = client_->Get("/api/config");
  ASSERT_TRUE(cfg);
  EXPECT_EQ(json::parse(cfg->body)["labels"].size(), 11u);

  const json validate = {{"doc", DocToJson(DocFor("a.png", 10, 10))}};
  auto v = client_->Post("/api/validate", validate.dump(), "application/json");
  ASSERT_TRUE(v);
  EXPECT_EQ(v->status, 200);
  EXPECT_FALSE(json::parse(v->body)["violations"].empty());

  const json pair = {
      {"a", {{"left", 0}, {"top", 0}, {"right", 4}, {"bottom", 4}}},
      {"b", {{"left", 1}, {"top", 1}, {"right", 3}, {"bottom", 3}}}};
  auto u = client_->Post("/api/rect/union", pair.dump(), "application/json");
  ASSERT_TRUE(u);
  EXPECT_EQ(json::parse(u->body)["rect"]["right"], 4);
  auto s = client_->Post("/api/rect/subtract", pair.dump(), "application/json");
  ASSERT_TRUE(s);
  EXPECT_EQ(json::parse(s->body)["pieces"].size(), 4u);

  const json degenerate = {
      {"a", {{"left", 0}, {"top", 0}, {"right", 0}, {"bottom", 4}}},
      {"b", {{"left", 1}, {"top", 1}, {"right", 3}, {"bottom", 3}}}};
  auto d = client_->Post("/api/rect/union", degenerate.dump(),
                         "application/json");
  ASSERT_TRUE(d);
  EXPECT_EQ(d->status, 422);
}

}  // namespace
}  // namespace charterlab::service
