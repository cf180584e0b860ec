// Copyright 2026 The pdlab Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Line-delimited JSON records. One record per line:
//
//   {"schema":1,"split":"train","instance":{...},"trajectory":{...},
//    "optimal":{...}|null}
//
// Doubles are written with 17 significant digits, so read(write(x)) == x.

#ifndef PDLAB_RECORDS_HPP_
#define PDLAB_RECORDS_HPP_

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdlab/common.hpp"
#include "pdlab/engine.hpp"
#include "pdlab/exact.hpp"
#include "pdlab/instance.hpp"

namespace pdlab {

inline constexpr int kRecordSchemaVersion = 1;

enum class Split { kTrain, kVal, kTest };

inline std::string_view SplitName(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kVal: return "val";
    case Split::kTest: return "test";
  }
  return "train";
}

inline Split ParseSplit(std::string_view s) {
  if (s == "train") return Split::kTrain;
  if (s == "val") return Split::kVal;
  if (s == "test") return Split::kTest;
  Fail(ErrorKind::kParse, "unknown split '" + std::string(s) + "'");
}

struct DatasetRecord {
  HittingSetInstance instance;
  Trajectory trajectory;
  std::optional<OptimalSolution> optimal;
  Split split = Split::kTrain;

  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

using Json = nlohmann::json;

inline Json ToJson(const HittingSetInstance& inst) {
  return Json{{"id", inst.id},
              {"task", TaskName(inst.task)},
              {"n_elements", inst.n_elements},
              {"weights", inst.weights},
              {"sets", inst.sets},
              {"meta", inst.meta}};
}

inline Json ToJson(const AlgoConfig& c) {
  return Json{{"uniform", c.uniform},
              {"epsilon", c.epsilon},
              {"tight_tol", c.tight_tol},
              {"max_steps", c.max_steps}};
}

inline Json ToJson(const StepRecord& s) {
  Json j{{"x", s.x}, {"r", s.r}, {"delta", s.delta}, {"set_active", s.set_active}};
  j["Delta"] = s.Delta ? Json(*s.Delta) : Json(nullptr);
  return j;
}

inline Json ToJson(const Solution& s) {
  return Json{{"chosen", s.chosen}, {"weight", s.weight}};
}

inline Json ToJson(const Trajectory& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(ToJson(s));
  return Json{{"algo", AlgoName(t.algo)},
              {"config", ToJson(t.config)},
              {"steps", std::move(steps)},
              {"solution", ToJson(t.final_solution)}};
}

inline Json ToJson(const OptimalSolution& o) {
  return Json{{"chosen", o.chosen},
              {"weight", o.weight},
              {"status", SolveStatusName(o.status)},
              {"nodes_explored", o.nodes_explored}};
}

inline Json ToJson(const DatasetRecord& r) {
  Json j{{"schema", kRecordSchemaVersion},
         {"split", SplitName(r.split)},
         {"instance", ToJson(r.instance)},
         {"trajectory", ToJson(r.trajectory)}};
  j["optimal"] = r.optimal ? ToJson(*r.optimal) : Json(nullptr);
  return j;
}

namespace internal {

inline const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) Fail(ErrorKind::kParse, std::string("expected object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) Fail(ErrorKind::kParse, std::string("missing field '") + key + "'");
  return *it;
}

template <typename T>
T Get(const Json& j, const char* key) {
  try {
    return Field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorKind::kParse, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace internal

inline HittingSetInstance InstanceFromJson(const Json& j) {
  using internal::Get;
  HittingSetInstance inst;
  inst.id = Get<std::string>(j, "id");
  inst.task = ParseTask(Get<std::string>(j, "task"));
  inst.n_elements = Get<std::size_t>(j, "n_elements");
  inst.weights = Get<std::vector<double>>(j, "weights");
  inst.sets = Get<std::vector<std::vector<Index>>>(j, "sets");
  inst.meta = Get<std::map<std::string, std::string>>(j, "meta");
  try {
    ValidateInstance(inst);
  } catch (const Error& e) {
    Fail(ErrorKind::kParse, std::string("instance: ") + e.what());
  }
  return inst;
}

inline Solution SolutionFromJson(const Json& j) {
  using internal::Get;
  return Solution{Get<std::vector<Index>>(j, "chosen"), Get<double>(j, "weight")};
}

inline Trajectory TrajectoryFromJson(const Json& j) {
  using internal::Field;
  using internal::Get;
  Trajectory t;
  t.algo = ParseAlgo(Get<std::string>(j, "algo"));
  const Json& c = Field(j, "config");
  t.config.uniform = Get<bool>(c, "uniform");
  t.config.epsilon = Get<double>(c, "epsilon");
  t.config.tight_tol = Get<double>(c, "tight_tol");
  t.config.max_steps = Get<std::size_t>(c, "max_steps");
  const Json& steps = Field(j, "steps");
  if (!steps.is_array()) Fail(ErrorKind::kParse, "'steps' must be an array");
  for (const Json& s : steps) {
    StepRecord rec;
    rec.x = Get<std::vector<std::uint8_t>>(s, "x");
    rec.r = Get<std::vector<double>>(s, "r");
    rec.delta = Get<std::vector<double>>(s, "delta");
    rec.set_active = Get<std::vector<std::uint8_t>>(s, "set_active");
    const Json& d = Field(s, "Delta");
    if (!d.is_null()) {
      if (!d.is_number()) Fail(ErrorKind::kParse, "'Delta' must be a number or null");
      rec.Delta = d.get<double>();
    }
    t.steps.push_back(std::move(rec));
  }
  t.final_solution = SolutionFromJson(Field(j, "solution"));
  return t;
}

inline OptimalSolution OptimalFromJson(const Json& j) {
  using internal::Get;
  OptimalSolution o;
  o.chosen = Get<std::vector<Index>>(j, "chosen");
  o.weight = Get<double>(j, "weight");
  o.status = ParseSolveStatus(Get<std::string>(j, "status"));
  o.nodes_explored = Get<std::uint64_t>(j, "nodes_explored");
  return o;
}

// Shape checks tying a trajectory to its instance.
inline void CheckTrajectoryShape(const HittingSetInstance& inst,
                                 const Trajectory& t) {
  if (t.steps.empty()) Fail(ErrorKind::kParse, "trajectory has no steps");
  for (const auto& s : t.steps) {
    if (s.x.size() != inst.n_elements || s.r.size() != inst.n_elements ||
        s.delta.size() != inst.num_sets() ||
        s.set_active.size() != inst.num_sets()) {
      Fail(ErrorKind::kParse, "trajectory step shape does not match instance");
    }
  }
}

inline DatasetRecord RecordFromJson(const Json& j) {
  using internal::Field;
  using internal::Get;
  const int schema = Get<int>(j, "schema");
  if (schema != kRecordSchemaVersion) {
    Fail(ErrorKind::kParse, "unsupported schema version " + std::to_string(schema));
  }
  DatasetRecord r;
  r.split = ParseSplit(Get<std::string>(j, "split"));
  r.instance = InstanceFromJson(Field(j, "instance"));
  r.trajectory = TrajectoryFromJson(Field(j, "trajectory"));
  CheckTrajectoryShape(r.instance, r.trajectory);
  const Json& o = Field(j, "optimal");
  if (!o.is_null()) r.optimal = OptimalFromJson(o);
  return r;
}

inline void DumpJson(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        DumpJson(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        DumpJson(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) Fail(ErrorKind::kInvalidArgument, "non-finite number");
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      if (std::string_view(buf).find_first_of(".e") == std::string_view::npos) out += ".0";
      break;
    }
    default:
      out += j.dump();
  }
}

inline std::string DumpJson(const Json& j) {
  std::string out;
  DumpJson(j, out);
  return out;
}

inline std::string SerializeRecord(const DatasetRecord& r) {
  return DumpJson(ToJson(r));
}

inline void WriteRecords(std::ostream& out, const std::vector<DatasetRecord>& records) {
  for (const auto& r : records) out << SerializeRecord(r) << '\n';
}

inline void WriteRecordsFile(const std::string& path,
                             const std::vector<DatasetRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorKind::kIo, "cannot open '" + path + "' for writing");
  WriteRecords(out, records);
  if (!out) Fail(ErrorKind::kIo, "write to '" + path + "' failed");
}

// Reads JSON lines with `parse` applied to each non-blank line; errors name
// the offending line.
template <typename T, typename Parse>
std::vector<T> ReadJsonLines(std::istream& in, const std::string& source, Parse parse) {
  std::vector<T> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse(Json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      Fail(ErrorKind::kParse, source + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const Error& e) {
      Fail(ErrorKind::kParse, source + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<DatasetRecord> ReadRecords(std::istream& in,
                                              const std::string& source = "<stream>") {
  return ReadJsonLines<DatasetRecord>(in, source, RecordFromJson);
}

inline std::vector<DatasetRecord> ReadRecordsFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kIo, "cannot open '" + path + "'");
  return ReadRecords(in, path);
}

// Lines holding either a full record or a bare {"instance": {...}} object.
inline std::vector<HittingSetInstance> ReadInstancesFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kIo, "cannot open '" + path + "'");
  return ReadJsonLines<HittingSetInstance>(in, path, [](const Json& j) {
    return InstanceFromJson(internal::Field(j, "instance"));
  });
}

}  // namespace pdlab

#endif  // PDLAB_RECORDS_HPP_
