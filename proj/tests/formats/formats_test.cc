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

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <fstream>
#include <random>
#include <sstream>

#include "charterlab/core/error.h"
#include "charterlab/formats/coco.h"
#include "charterlab/formats/pagexml.h"
#include "charterlab/formats/yolo.h"
#include "golden_doc.h"
#include "oracles.h"

namespace charterlab {
namespace {

RectAnnotation Ann(Rect r, ClassId c,
                   std::optional<std::string> text = std::nullopt) {
  RectAnnotation a;
  a.rect = r;
  a.class_id = c;
  a.transcription = std::move(text);
  return a;
}

AnnotationDoc Doc(std::string id, int w, int h,
                  std::vector<RectAnnotation> anns) {
  AnnotationDoc doc;
  doc.image_id = std::move(id);
  doc.image_width = w;
  doc.image_height = h;
  doc.annotations = std::move(anns);
  return doc;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(CocoExportTest, BoxArithmeticAndIds) {
  const Ontology onto = Ontology::Default();
  const std::vector<AnnotationDoc> docs = {
      Doc("a.jpg", 100, 100,
          {Ann({10, 20, 30, 60}, ClassId::kSeal), Ann({1, 1, 2, 2}, ClassId::kFold),
           Ann({0, 0, 100, 100}, ClassId::kWritableArea)}),
      Doc("b.jpg", 50, 50, {}),
      Doc("c.jpg", 50, 50,
          {Ann({1, 1, 5, 5}, ClassId::kIgnore), Ann({2, 2, 4, 4}, ClassId::kOldText)})};
  const CocoBundle bundle = ExportCoco(docs, onto);

  ASSERT_EQ(bundle.images.size(), 3u);
  EXPECT_EQ(bundle.images[1].file_name, "b.jpg");
  ASSERT_EQ(bundle.annotations.size(), 5u);
  EXPECT_EQ(bundle.annotations[0].bbox, (std::array<double, 4>{10, 20, 20, 40}));
  for (std::size_t i = 0; i < bundle.annotations.size(); ++i) {
    EXPECT_EQ(bundle.annotations[i].id, static_cast<std::int64_t>(i + 1));
  }
  EXPECT_EQ(bundle.annotations[3].image_id, 3);
  EXPECT_EQ(bundle.annotations[0].category_id, 3);

  ASSERT_EQ(bundle.categories.size(), 10u);
  EXPECT_EQ(bundle.categories.front().id, 1);
  EXPECT_EQ(bundle.categories[1].name, "Img:CalibrationCard");
  EXPECT_EQ(bundle.categories[1].supercategory, "Img");
  EXPECT_EQ(bundle.categories.back().supercategory, "WrO");
}

TEST(CocoExportTest, Errors) {
  const Ontology onto = Ontology::Default();
  const std::vector<AnnotationDoc> dup = {Doc("a", 10, 10, {}), Doc("a", 10, 10, {})};
  EXPECT_EQ(CodeOf([&] { ExportCoco(dup, onto); }), ErrorCode::kDuplicateImageId);
  const std::vector<AnnotationDoc> reserved = {
      Doc("a", 10, 10, {Ann({1, 1, 2, 2}, ClassId::kNoClass)})};
  EXPECT_EQ(CodeOf([&] { ExportCoco(reserved, onto); }),
            ErrorCode::kValidationFailed);
  const std::vector<AnnotationDoc> sliver = {
      Doc("a", 10, 10, {Ann({1.1, 1, 1.3, 2}, ClassId::kSeal)})};
  EXPECT_EQ(CodeOf([&] { ExportCoco(sliver, onto); }),
            ErrorCode::kValidationFailed);
}

TEST(CocoExportTest, RoundsHalfUpAtExport) {
  const std::vector<AnnotationDoc> docs = {
      Doc("a", 10, 10, {Ann({1.5, 2.49, 4.5, 7.5}, ClassId::kSeal)})};
  const CocoBundle bundle = ExportCoco(docs, Ontology::Default());
  EXPECT_EQ(bundle.annotations[0].bbox, (std::array<double, 4>{2, 2, 3, 6}));
}

TEST(CocoImportTest, BasicsAndErrors) {
  const Ontology onto = Ontology::Default();
  CocoBundle bundle;
  bundle.images = {{7, "x.png", 20, 20}};
  bundle.categories = {{3, "Img:Seal", "Img"}};
  bundle.annotations = {{1, 7, 3, {0, 0, 10, 10}}};
  const auto docs = ImportCoco(bundle, onto);
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].image_id, "x.png");
  EXPECT_EQ(docs[0].annotations[0].rect, (Rect{0, 0, 10, 10}));
  EXPECT_EQ(docs[0].annotations[0].class_id, ClassId::kSeal);

  CocoBundle unknown = bundle;
  unknown.annotations[0].category_id = 99;
  EXPECT_EQ(CodeOf([&] { ImportCoco(unknown, onto); }), ErrorCode::kUnknownCategory);
  CocoBundle undeclared = bundle;
  undeclared.annotations[0].category_id = 4;  // in ontology, not in bundle
  EXPECT_EQ(CodeOf([&] { ImportCoco(undeclared, onto); }),
            ErrorCode::kUnknownCategory);
  CocoBundle orphan = bundle;
  orphan.annotations[0].image_id = 8;
  EXPECT_EQ(CodeOf([&] { ImportCoco(orphan, onto); }), ErrorCode::kMissingImage);
}

TEST(CocoRoundTripTest, RandomDocsSurviveThroughJsonText) {
  const Ontology onto = Ontology::Default();
  std::mt19937_64 rng(42);
  std::vector<AnnotationDoc> docs;
  for (int i = 0; i < 50; ++i) {
    docs.push_back(oracle::RandomDoc(rng, "charter_" + std::to_string(i) + ".jpg"));
  }
  const std::string text = CocoToJson(ExportCoco(docs, onto)).dump();
  const auto back = ImportCoco(CocoFromJson(nlohmann::json::parse(text)), onto);
  ASSERT_EQ(back.size(), docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    AnnotationDoc expected = docs[i];
    for (auto& a : expected.annotations) {
      a.transcription.reset();
      a.comment.reset();
    }
    EXPECT_EQ(back[i], expected) << "doc " << i;
  }
}

TEST(YoloTest, LineFormat) {
  const auto doc = Doc("a", 100, 200, {Ann({10, 20, 30, 60}, ClassId::kOldText, "test")});
  EXPECT_EQ(ExportYolo(doc),
            std::vector<std::string>{"5 0.200000 0.200000 0.200000 0.200000"});
  const auto full = Doc("a", 640, 480, {Ann({0, 0, 640, 480}, ClassId::kWritableArea)});
  EXPECT_EQ(ExportYolo(full),
            std::vector<std::string>{"4 0.500000 0.500000 1.000000 1.000000"});
}

TEST(YoloTest, IgnoreIsKeptUnlessDropped) {
  const auto doc = Doc("a", 10, 10, {Ann({1, 1, 2, 2}, ClassId::kIgnore),
                                     Ann({1, 1, 3, 3}, ClassId::kSeal)});
  EXPECT_EQ(ExportYolo(doc).size(), 2u);
  YoloOptions options;
  options.drop_ignore = true;
  const auto lines = ExportYolo(doc, options);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].substr(0, 2), "3 ");
}

TEST(YoloTest, RefusesUnvalidatedDocs) {
  EXPECT_THROW(ExportYolo(Doc("a", 10, 10, {Ann({1, 1, 2, 2}, ClassId::kNoClass)})),
               Error);
  EXPECT_THROW(ExportYolo(Doc("a", 10, 10, {Ann({1, 1, 20, 2}, ClassId::kSeal)})),
               Error);
}

TEST(YoloTest, ValuesNormalizedAndDenormalizeWithinHalfPixel) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 50; ++i) {
    const AnnotationDoc doc = oracle::RandomDoc(rng, "d");
    const auto lines = ExportYolo(doc);
    ASSERT_EQ(lines.size(), doc.annotations.size());
    for (std::size_t k = 0; k < lines.size(); ++k) {
      const YoloRecord r = ParseYoloLine(lines[k]);
      for (double v : {r.cx, r.cy, r.w, r.h}) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
      }
      EXPECT_EQ(r.class_id, doc.annotations[k].class_id);
      const Rect back = DenormalizeYolo(r, doc.image_width, doc.image_height);
      const Rect& orig = doc.annotations[k].rect;
      EXPECT_NEAR(back.left, orig.left, 0.5);
      EXPECT_NEAR(back.top, orig.top, 0.5);
      EXPECT_NEAR(back.right, orig.right, 0.5);
      EXPECT_NEAR(back.bottom, orig.bottom, 0.5);
    }
  }
}

TEST(YoloTest, ParseErrorsAndNamesFile) {
  EXPECT_THROW(ParseYoloLine("3 0.1 0.2"), Error);
  EXPECT_THROW(ParseYoloLine("3 0.1 0.2 0.3 0.4 0.5"), Error);
  const std::string names = YoloNamesFile(Ontology::Default());
  EXPECT_EQ(std::count(names.begin(), names.end(), '\n'), 11);
  EXPECT_EQ(names.substr(0, 16), "No Class\nIgnore\n");
}

TEST(PageXmlTest, RegionMapping) {
  const Ontology onto = Ontology::Default();
  const auto doc = Doc("p.jpg", 20, 20,
                       {Ann({1, 2, 5, 9}, ClassId::kOldText, "Wir Rudolf"),
                        Ann({3, 3, 8, 8}, ClassId::kSeal)});
  const PageXmlDoc page = ExportPageXml(doc, onto);
  ASSERT_EQ(page.regions.size(), 2u);
  EXPECT_EQ(page.regions[0].kind, PageRegion::Kind::kText);
  EXPECT_EQ(*page.regions[0].text, "Wir Rudolf");
  EXPECT_EQ(page.regions[0].polygon,
            (std::array<PagePoint, 4>{PagePoint{1, 2}, PagePoint{5, 2},
                                      PagePoint{5, 9}, PagePoint{1, 9}}));
  EXPECT_EQ(page.regions[1].kind, PageRegion::Kind::kCustom);
  EXPECT_EQ(page.regions[1].class_label, "Img:Seal");
  EXPECT_FALSE(page.regions[1].text.has_value());

  const std::string xml = PageXmlToString(page);
  EXPECT_NE(xml.find("<Unicode>Wir Rudolf</Unicode>"), std::string::npos);
  EXPECT_NE(xml.find("custom=\"structure {type:Img:Seal;}\""), std::string::npos);
  EXPECT_NE(xml.find("points=\"1,2 5,2 5,9 1,9\""), std::string::npos);
}

TEST(PageXmlTest, OnlyTheThreeTextClassesCarryText) {
  for (int id = 1; id <= 10; ++id) {
    const ClassId c = static_cast<ClassId>(id);
    EXPECT_EQ(IsPageTextClass(c), c == ClassId::kOldText ||
                                      c == ClassId::kOldNote ||
                                      c == ClassId::kNewText);
  }
}

TEST(PageXmlTest, OutputIsWellFormedWithFourPointsPerRegion) {
  namespace pt = boost::property_tree;
  const Ontology onto = Ontology::Default();
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const AnnotationDoc doc = oracle::RandomDoc(rng, "page & <co>.jpg");
    std::istringstream in(PageXmlToString(ExportPageXml(doc, onto)));
    pt::ptree tree;
    ASSERT_NO_THROW(pt::read_xml(in, tree));
    const auto& page = tree.get_child("PcGts.Page");
    EXPECT_EQ(page.get<std::string>("<xmlattr>.imageFilename"), "page & <co>.jpg");
    std::size_t regions = 0;
    for (const auto& [name, node] : page) {
      if (name == "<xmlattr>") continue;
      ASSERT_TRUE(name == "TextRegion" || name == "CustomRegion") << name;
      std::istringstream points(node.get<std::string>("Coords.<xmlattr>.points"));
      std::string point;
      int n = 0;
      while (points >> point) ++n;
      EXPECT_EQ(n, 4);
      const auto& a = doc.annotations[regions];
      if (name == "TextRegion" && a.transcription) {
        EXPECT_EQ(node.get<std::string>("TextEquiv.Unicode"), *a.transcription);
      }
      ++regions;
    }
    EXPECT_EQ(regions, doc.annotations.size());
  }
}

std::string ReadGolden(const std::string& name) {
  std::ifstream in(std::string(CHARTERLAB_GOLDEN_DIR) + "/" + name,
                   std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST(GoldenFileTest, Coco) {
  const std::vector<AnnotationDoc> docs = {testing_data::GoldenDoc()};
  EXPECT_EQ(CocoToJson(ExportCoco(docs, Ontology::Default())).dump(2) + "\n",
            ReadGolden("charter_0001.coco.json"));
}

TEST(GoldenFileTest, Yolo) {
  std::string text;
  for (const auto& line : ExportYolo(testing_data::GoldenDoc())) text += line + "\n";
  EXPECT_EQ(text, ReadGolden("charter_0001.txt"));
}

TEST(GoldenFileTest, PageXml) {
  EXPECT_EQ(PageXmlToString(
                ExportPageXml(testing_data::GoldenDoc(), Ontology::Default())),
            ReadGolden("charter_0001.xml"));
}

}  // namespace
}  // namespace charterlab
