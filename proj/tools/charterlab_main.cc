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

// charterlab: command-line front end for the annotation server, the format
// exporters, the resolution estimator and the evaluation metrics.

#include <pthread.h>
#include <signal.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "charterlab/core/annotation.h"
#include "charterlab/core/error.h"
#include "charterlab/core/ontology.h"
#include "charterlab/core/validation.h"
#include "charterlab/formats/coco.h"
#include "charterlab/formats/pagexml.h"
#include "charterlab/formats/yolo.h"
#include "charterlab/metrics/average_precision.h"
#include "charterlab/metrics/confusion.h"
#include "charterlab/metrics/detection.h"
#include "charterlab/metrics/regression.h"
#include "charterlab/resolution/resolution.h"
#include "charterlab/service/server.h"
#include "charterlab/service/tar_archive.h"
#include "charterlab/service/workspace.h"
#include "json.hpp"

namespace charterlab {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Thrown for bad input files; reported on stderr with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json ReadJson(const fs::path& path) {
  try {
    return json::parse(ReadText(path));
  } catch (const json::parse_error& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

void WriteText(const fs::path& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw UsageError("cannot write " + path.string());
}

Ontology LoadOntology(const std::string& config) {
  return config.empty() ? Ontology::Default() : Ontology::FromFile(config);
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// Writes `files` below `out`, or as one tar archive when `out` ends in .tar.
void WriteFiles(const std::vector<service::ArchiveEntry>& files,
                const fs::path& out) {
  if (out.extension() == ".tar") {
    WriteText(out, service::WriteTar(files));
    return;
  }
  for (const auto& f : files) WriteText(out / f.path, f.content);
}

// ---- serve ------------------------------------------------------------------

struct ServeArgs {
  std::string workspace;
  std::string config;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
};

int Serve(const ServeArgs& args) {
  // Block the stop signals before any thread starts so that only sigwait()
  // below sees them.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);

  std::optional<fs::path> config;
  if (!args.config.empty()) config = args.config;
  service::Workspace workspace(args.workspace, config);
  service::ServerOptions options;
  options.host = args.host;
  options.port = args.port;
  if (!args.static_dir.empty()) options.static_dir = args.static_dir;
  service::AnnotationServer server(workspace, options);
  const int port = server.Bind();
  std::cerr << "serving " << workspace.ListImages().size() << " images from "
            << args.workspace << " on http://" << args.host << ":" << port
            << "/\n";
  std::thread listener([&server] { server.Run(); });
  int signal_number = 0;
  sigwait(&stop_signals, &signal_number);
  server.Stop();
  listener.join();
  return 0;
}

// ---- export / convert / validate ----------------------------------------------

struct ExportArgs {
  std::string workspace;
  std::string config;
  std::string format;
  std::string out;
  bool drop_ignore = false;
};

int Export(const ExportArgs& args) {
  std::optional<fs::path> config;
  if (!args.config.empty()) config = args.config;
  service::Workspace workspace(args.workspace, config);
  YoloOptions yolo;
  yolo.drop_ignore = args.drop_ignore;
  const auto files =
      workspace.Export(service::ParseExportFormat(args.format), yolo);
  WriteFiles(files, args.out);
  std::cerr << "wrote " << files.size() << " file(s) to " << args.out << "\n";
  return 0;
}

struct ConvertArgs {
  std::vector<std::string> docs;
  std::string config;
  std::string format;
  std::string out;
  bool drop_ignore = false;
};

int Convert(const ConvertArgs& args) {
  const Ontology onto = LoadOntology(args.config);
  std::vector<AnnotationDoc> docs;
  for (const auto& path : args.docs) docs.push_back(LoadDoc(path));

  std::vector<service::ArchiveEntry> files;
  const auto stem = [](const AnnotationDoc& d) {
    return fs::path(d.image_id).stem().string();
  };
  switch (service::ParseExportFormat(args.format)) {
    case service::ExportFormat::kCoco:
      files.push_back(
          {"annotations.json", CocoToJson(ExportCoco(docs, onto)).dump(2) + "\n"});
      break;
    case service::ExportFormat::kYolo: {
      YoloOptions yolo;
      yolo.drop_ignore = args.drop_ignore;
      files.push_back({"names.txt", YoloNamesFile(onto)});
      for (const auto& d : docs) {
        std::string text;
        for (const auto& line : ExportYolo(d, yolo)) text += line + "\n";
        files.push_back({"labels/" + stem(d) + ".txt", text});
      }
      break;
    }
    case service::ExportFormat::kPageXml:
      for (const auto& d : docs) {
        files.push_back({"page/" + stem(d) + ".xml",
                         PageXmlToString(ExportPageXml(d, onto))});
      }
      break;
  }
  WriteFiles(files, args.out);
  return 0;
}

int ImportCocoCommand(const std::string& coco, const std::string& config,
                      const std::string& out_dir) {
  const Ontology onto = LoadOntology(config);
  const auto docs = ImportCoco(CocoFromJson(ReadJson(coco)), onto);
  fs::create_directories(out_dir);
  for (const auto& d : docs) SaveDoc(fs::path(out_dir) / (d.image_id + ".json"), d);
  std::cerr << "wrote " << docs.size() << " annotation file(s) to " << out_dir
            << "\n";
  return 0;
}

int Validate(const std::vector<std::string>& paths, const std::string& config) {
  const Ontology onto = LoadOntology(config);
  int bad = 0;
  for (const auto& path : paths) {
    const auto violations = ValidateDoc(LoadDoc(path), onto);
    for (const auto& v : violations) {
      std::cout << path << ": ";
      if (v.index != Violation::kDocumentLevel) {
        std::cout << "annotation " << v.index << ": ";
      }
      std::cout << ViolationRuleName(v.rule) << ": " << v.message << "\n";
    }
    bad += violations.empty() ? 0 : 1;
  }
  std::cerr << paths.size() - bad << "/" << paths.size() << " valid\n";
  return bad == 0 ? 0 : 1;
}

// ---- resolution ---------------------------------------------------------------

struct ResolutionArgs {
  std::vector<std::string> docs;
  double phi_deg = 45.0;
  double card_length_cm = 20.5;
  bool per_card = false;
};

int Resolution(const ResolutionArgs& args) {
  const resolution::ViewAngle phi(args.phi_deg);
  resolution::CalibrationCardSpec spec;
  spec.length_cm = args.card_length_cm;
  std::cout << "image_id,method,ppcm,low,high\n";
  for (const auto& path : args.docs) {
    const AnnotationDoc doc = LoadDoc(path);
    const auto result = resolution::EstimateFromCards(doc, phi, spec);
    if (!result.combined) {
      std::cerr << path << ": no calibration card annotated, skipped\n";
      continue;
    }
    std::vector<resolution::ResolutionEstimate> rows;
    if (args.per_card) {
      rows = result.per_card;
    } else {
      rows = {*result.combined};
    }
    for (const auto& est : result.per_card) {
      if (est.warning) {
        std::cerr << path << ": calibration card is nearly square, its "
                  << "orientation is ambiguous\n";
      }
    }
    for (const auto& est : rows) {
      std::cout << CsvField(doc.image_id) << ","
                << resolution::MethodName(est.method) << "," << Num(est.ppcm)
                << "," << Num(est.low) << "," << Num(est.high) << "\n";
    }
  }
  return 0;
}

// ---- eval detect ----------------------------------------------------------------

struct DetectArgs {
  std::string gt;
  std::string pred;
  std::string config;
  double iou = 0.5;
  double conf = metrics::kDefaultConfidenceThreshold;
  std::string ap_csv;
  std::string confusion_csv;
  std::string pr_csv;
};

int EvalDetect(const DetectArgs& args) {
  const Ontology onto = LoadOntology(args.config);
  const CocoBundle gt = CocoFromJson(ReadJson(args.gt));
  const auto scenes = metrics::ScenesFromCoco(gt, ReadJson(args.pred), onto);
  const auto report = metrics::ComputeMeanAp(scenes, args.iou);
  const auto confusion =
      metrics::ComputeConfusion(scenes, onto.size(), args.iou, args.conf);

  std::vector<std::string> axis;
  for (int c = 0; c < onto.size(); ++c) axis.push_back(onto.Label(static_cast<ClassId>(c)));
  axis.push_back("background");

  json per_class = json::array();
  std::string ap_csv = "class_id,label,num_ground_truth,ap\n";
  std::string pr_csv = "class_id,label,rank,precision,recall\n";
  for (const auto& [cls, curve] : report.per_class) {
    per_class.push_back({{"class_id", ToInt(cls)},
                         {"label", onto.Label(cls)},
                         {"num_ground_truth", curve.num_ground_truth},
                         {"ap", *curve.ap}});
    ap_csv += std::to_string(ToInt(cls)) + "," + CsvField(onto.Label(cls)) + "," +
              std::to_string(curve.num_ground_truth) + "," + Num(*curve.ap) + "\n";
    for (std::size_t i = 0; i < curve.precision.size(); ++i) {
      pr_csv += std::to_string(ToInt(cls)) + "," + CsvField(onto.Label(cls)) +
                "," + std::to_string(i + 1) + "," + Num(curve.precision[i]) + "," +
                Num(curve.recall[i]) + "\n";
    }
  }
  json matrix = json::array();
  std::string confusion_csv = "ground_truth";
  for (const auto& label : axis) confusion_csv += "," + CsvField(label);
  confusion_csv += "\n";
  for (int r = 0; r <= confusion.num_classes(); ++r) {
    json row = json::array();
    confusion_csv += CsvField(axis[r]);
    for (int c = 0; c <= confusion.num_classes(); ++c) {
      row.push_back(confusion.at(r, c));
      confusion_csv += "," + std::to_string(confusion.at(r, c));
    }
    matrix.push_back(row);
    confusion_csv += "\n";
  }

  const json out = {{"iou_threshold", args.iou},
                    {"confidence_threshold", args.conf},
                    {"num_images", scenes.size()},
                    {"map", report.map},
                    {"per_class", per_class},
                    {"confusion", {{"labels", axis}, {"matrix", matrix}}}};
  std::cout << out.dump(2) << "\n";
  if (!args.ap_csv.empty()) WriteText(args.ap_csv, ap_csv);
  if (!args.confusion_csv.empty()) WriteText(args.confusion_csv, confusion_csv);
  if (!args.pr_csv.empty()) WriteText(args.pr_csv, pr_csv);
  return 0;
}

// ---- eval regress -----------------------------------------------------------------

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const auto first = field.find_first_not_of(" \t\r\"");
    const auto last = field.find_last_not_of(" \t\r\"");
    fields.push_back(first == std::string::npos
                         ? ""
                         : field.substr(first, last - first + 1));
  }
  return fields;
}

// Reads prediction/ground-truth pairs. With a header the columns named "pred"
// and "gt" are used; without one, the first two columns.
void ReadPairs(const std::string& path, std::vector<double>& pred,
               std::vector<double>& gt) {
  std::istringstream in(ReadText(path));
  std::string line;
  std::size_t pred_col = 0;
  std::size_t gt_col = 1;
  bool first = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = SplitCsvLine(line);
    if (first) {
      first = false;
      std::map<std::string, std::size_t> names;
      for (std::size_t i = 0; i < fields.size(); ++i) names[fields[i]] = i;
      if (names.count("pred") && names.count("gt")) {
        pred_col = names["pred"];
        gt_col = names["gt"];
        continue;
      }
    }
    if (fields.size() <= std::max(pred_col, gt_col)) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": missing column");
    }
    try {
      std::size_t used_p = 0;
      std::size_t used_g = 0;
      const double p = std::stod(fields[pred_col], &used_p);
      const double g = std::stod(fields[gt_col], &used_g);
      if (used_p != fields[pred_col].size() || used_g != fields[gt_col].size()) {
        throw std::invalid_argument("trailing characters");
      }
      pred.push_back(p);
      gt.push_back(g);
    } catch (const std::logic_error&) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": not a number");
    }
  }
}

int EvalRegress(const std::string& pairs, const std::string& growth_csv) {
  std::vector<double> pred;
  std::vector<double> gt;
  ReadPairs(pairs, pred, gt);
  const auto report = metrics::InlierGrowthCurves(pred, gt);
  json out = {{"n", pred.size()}, {"mse", report.mse}, {"spearman", nullptr}};
  if (report.spearman) out["spearman"] = *report.spearman;
  std::cout << out.dump(2) << "\n";
  if (!growth_csv.empty()) {
    std::string csv = "n_included,mse,spearman\n";
    for (const auto& p : report.growth) {
      csv += std::to_string(p.n_included) + "," + Num(p.mse) + "," +
             (p.spearman ? Num(*p.spearman) : "") + "\n";
    }
    WriteText(growth_csv, csv);
  }
  return 0;
}

}  // namespace
}  // namespace charterlab

int main(int argc, char** argv) {
  using namespace charterlab;
  CLI::App app{"Charter image annotation, export and evaluation tools"};
  app.require_subcommand(1);

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the annotation HTTP server");
  serve_cmd->add_option("--workspace", serve.workspace, "Workspace directory")
      ->required();
  serve_cmd->add_option("--port", serve.port, "Port, 0 for any free port")
      ->capture_default_str();
  serve_cmd->add_option("--host", serve.host, "Listen address")
      ->capture_default_str();
  serve_cmd->add_option("--config", serve.config, "Ontology/preferences JSON");
  serve_cmd->add_option("--static", serve.static_dir,
                        "Directory served at / (browser UI bundle)");

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "Export a workspace");
  export_cmd->add_option("--workspace", exp.workspace)->required();
  export_cmd->add_option("--format", exp.format, "coco, yolo or pagexml")
      ->required();
  export_cmd->add_option("--out", exp.out, "Output directory or .tar file")
      ->required();
  export_cmd->add_option("--config", exp.config);
  export_cmd->add_flag("--drop-ignore", exp.drop_ignore,
                       "Leave Ignore boxes out of YOLO labels");

  ConvertArgs conv;
  auto* convert_cmd =
      app.add_subcommand("convert", "Convert annotation files to a format");
  convert_cmd->add_option("docs", conv.docs, "Annotation JSON files")
      ->required()
      ->check(CLI::ExistingFile);
  convert_cmd->add_option("--format", conv.format, "coco, yolo or pagexml")
      ->required();
  convert_cmd->add_option("--out", conv.out, "Output directory or .tar file")
      ->required();
  convert_cmd->add_option("--config", conv.config);
  convert_cmd->add_flag("--drop-ignore", conv.drop_ignore);

  std::string import_coco;
  std::string import_out;
  std::string import_config;
  auto* import_cmd = app.add_subcommand(
      "import-coco", "Split a COCO file into per-image annotation files");
  import_cmd->add_option("coco", import_coco)->required()->check(CLI::ExistingFile);
  import_cmd->add_option("--out", import_out, "Output directory")->required();
  import_cmd->add_option("--config", import_config);

  std::vector<std::string> validate_docs;
  std::string validate_config;
  auto* validate_cmd = app.add_subcommand("validate", "Check annotation files");
  validate_cmd->add_option("docs", validate_docs)
      ->required()
      ->check(CLI::ExistingFile);
  validate_cmd->add_option("--config", validate_config);

  ResolutionArgs res;
  auto* resolution_cmd = app.add_subcommand(
      "resolution", "Pixels per centimetre from annotated calibration cards");
  resolution_cmd->add_option("docs", res.docs)
      ->required()
      ->check(CLI::ExistingFile);
  resolution_cmd->add_option("--phi", res.phi_deg, "Camera view angle, degrees")
      ->capture_default_str();
  resolution_cmd->add_option("--card-length", res.card_length_cm,
                             "Calibration card length, cm")
      ->capture_default_str();
  resolution_cmd->add_flag("--per-card", res.per_card,
                           "One row per card instead of one per image");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate predictions");
  eval_cmd->require_subcommand(1);
  DetectArgs det;
  auto* detect_cmd = eval_cmd->add_subcommand("detect", "Detection mAP and confusion");
  detect_cmd->add_option("--gt", det.gt, "COCO ground truth")
      ->required()
      ->check(CLI::ExistingFile);
  detect_cmd->add_option("--pred", det.pred, "COCO results array")
      ->required()
      ->check(CLI::ExistingFile);
  detect_cmd->add_option("--iou", det.iou)->capture_default_str();
  detect_cmd->add_option("--conf", det.conf, "Confusion-matrix score cut-off")
      ->capture_default_str();
  detect_cmd->add_option("--config", det.config);
  detect_cmd->add_option("--ap-csv", det.ap_csv);
  detect_cmd->add_option("--confusion-csv", det.confusion_csv);
  detect_cmd->add_option("--pr-csv", det.pr_csv);

  std::string pairs;
  std::string growth_csv;
  auto* regress_cmd =
      eval_cmd->add_subcommand("regress", "Resolution regression MSE/Spearman");
  regress_cmd->add_option("--pairs", pairs, "CSV with pred,gt columns")
      ->required()
      ->check(CLI::ExistingFile);
  regress_cmd->add_option("--growth-csv", growth_csv,
                          "Inlier growth curve output, - for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*serve_cmd) return Serve(serve);
    if (*export_cmd) return Export(exp);
    if (*convert_cmd) return Convert(conv);
    if (*import_cmd) return ImportCocoCommand(import_coco, import_config, import_out);
    if (*validate_cmd) return Validate(validate_docs, validate_config);
    if (*resolution_cmd) return Resolution(res);
    if (*detect_cmd) return EvalDetect(det);
    if (*regress_cmd) return EvalRegress(pairs, growth_csv);
  } catch (const Error& e) {
    std::cerr << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
