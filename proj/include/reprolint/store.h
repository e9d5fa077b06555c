// Copyright 2026 The Reprolint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REPROLINT_STORE_H_
#define REPROLINT_STORE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "reprolint/app_model.h"
#include "reprolint/graph.h"

namespace reprolint {

enum class JobStatus { kQueued, kRunning, kDone, kFailed };

std::string_view JobStatusName(JobStatus status);

struct JobRecord {
  std::string id;
  JobStatus status = JobStatus::kQueued;
  std::string app_id;
  std::string report_object;  // hash of the submitted report text
  nlohmann::json config = nlohmann::json::object();
  std::string report_id;  // set when done
  std::string error;      // set when failed

  nlohmann::json ToJson() const;
  static JobRecord FromJson(const nlohmann::json& doc);
};

struct AppSummary {
  std::string app_id;
  std::string name;
  std::size_t screens = 0;
};

// Content-addressed files under one root:
//   objects/<sha256>   immutable blobs
//   jobs/<id>.json     job records
//   index.json         names -> object hashes
// Every write goes to a temporary file that is renamed into place.
class Store {
 public:
  explicit Store(std::filesystem::path root);

  // $REPROLINT_DATA_DIR, else ./reprolint-data.
  static std::filesystem::path DefaultRoot();

  const std::filesystem::path& root() const { return root_; }

  std::string PutObject(std::string_view bytes);
  std::optional<std::string> GetObject(const std::string& hash) const;

  // Validated model stored under "app_" + hash of its canonical form.
  std::string PutApp(const AppModel& model);
  // Re-validates on read; std::nullopt for unknown ids.
  std::optional<AppModel> GetApp(const std::string& app_id) const;
  std::vector<AppSummary> ListApps() const;

  void PutGraph(const std::string& key, const ExecutionGraph& graph);
  std::optional<ExecutionGraph> GetGraph(const std::string& key) const;

  void PutReport(const std::string& report_id, const std::string& json, const std::string& html);
  // format is "json" or "html".
  std::optional<std::string> GetReport(const std::string& report_id,
                                       const std::string& format) const;

  void PutWireframes(const std::map<std::string, std::string>& wireframes);
  std::optional<std::string> GetWireframe(const std::string& ref) const;

  // Creates a job with a fresh unique id.
  JobRecord CreateJob(JobRecord job);
  void PutJob(const JobRecord& job);
  std::optional<JobRecord> GetJob(const std::string& id) const;

 private:
  nlohmann::json ReadIndex() const;
  void WriteIndex(const nlohmann::json& index);
  void SetIndexEntry(const std::string& section, const std::string& key, nlohmann::json value);
  std::optional<nlohmann::json> IndexEntry(const std::string& section,
                                           const std::string& key) const;

  std::filesystem::path root_;
  mutable std::mutex mu_;
};

// Writes `bytes` to `path` through a temporary sibling and a rename.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view bytes);

// Whole file contents; throws InputError when unreadable.
std::string ReadFile(const std::filesystem::path& path);

}  // namespace reprolint

#endif  // REPROLINT_STORE_H_
