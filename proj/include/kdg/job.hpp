#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kdg/dg.hpp"

namespace kdg {

using Json = nlohmann::json;

struct ModuleSpec {
  // either a cyclic module Q/(cyclic) or a cokernel presentation (relations as columns)
  std::vector<std::string> cyclic;
  std::vector<int> twists;
  std::vector<std::vector<std::string>> relations;
  bool is_cyclic = true;
};

struct DGSpec {
  enum class Kind { ring, trivial_extension, koszul };
  Kind kind = Kind::ring;
  std::vector<std::string> elements;  // koszul
  ModuleSpec module;                  // trivial_extension
  int shift = 0;                      // trivial_extension
  std::shared_ptr<DGSpec> over;       // koszul; null means the ring
};

struct MapSpec {
  std::vector<std::string> variables;
  std::vector<std::string> ideal;
  std::vector<std::string> images;
};

struct JobSpec {
  std::string name;
  std::string field = "F32003";
  std::vector<std::string> variables;
  std::string order = "grevlex";
  std::vector<std::string> ideal;
  DGSpec dg;
  std::vector<std::vector<std::string>> sequences;
  std::vector<std::vector<std::string>> alternates;
  std::optional<MapSpec> map;
  int split = 1;
  std::vector<std::string> tasks;
  std::map<std::string, std::string> expect;
  Json echo;  // the job as read
};

/// Throws InputError naming the JSON path of the offending field.
JobSpec parse_job(const Json& j);
/// Reads and parses a job file; JSON syntax errors carry the byte offset.
JobSpec load_job(const std::string& path);

struct RunOptions {
  std::optional<std::string> field;
  std::optional<int> degree_cap;
  std::optional<int> budget;
  int oracle_depth = 8;
};

/// The job's objects over the chosen field.
struct JobContext {
  Field field;
  RingPtr ring;
  QRingPtr q;
  DGRingPtr a;
  std::vector<std::vector<Polynomial>> sequences;
  std::vector<std::vector<Polynomial>> alternates;
  std::optional<RingMap> map;
  int split = 1;  // composition: first `split` elements, then the rest
};

JobContext instantiate(const JobSpec& spec, const RunOptions& options);

/// Polynomial from a job string, with the JSON path and character offset in the error.
Polynomial parse_at(const std::string& text, const RingPtr& ring, const std::string& path);

}  // namespace kdg
