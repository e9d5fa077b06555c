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

#include "reprolint/store.h"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <utility>

#include "reprolint/error.h"
#include "reprolint/hash.h"

namespace reprolint {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kSections[] = {"apps", "graphs", "reports", "wireframes"};

std::optional<JobStatus> ParseJobStatus(std::string_view name) {
  for (JobStatus s : {JobStatus::kQueued, JobStatus::kRunning, JobStatus::kDone,
                      JobStatus::kFailed}) {
    if (JobStatusName(s) == name) return s;
  }
  return std::nullopt;
}

bool IsHex(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  }
  return true;
}

// Ids become file names; only plain tokens are accepted.
bool IsSafeId(std::string_view s) {
  if (s.empty() || s.size() > 128) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  }
  return true;
}

}  // namespace

std::string_view JobStatusName(JobStatus status) {
  switch (status) {
    case JobStatus::kQueued: return "queued";
    case JobStatus::kRunning: return "running";
    case JobStatus::kDone: return "done";
    case JobStatus::kFailed: return "failed";
  }
  return "?";
}

json JobRecord::ToJson() const {
  json j = {{"jobId", id},
            {"status", std::string(JobStatusName(status))},
            {"appId", app_id},
            {"reportObject", report_object},
            {"config", config}};
  if (!report_id.empty()) j["reportId"] = report_id;
  if (!error.empty()) j["error"] = error;
  return j;
}

JobRecord JobRecord::FromJson(const json& doc) {
  JobRecord job;
  try {
    job.id = doc.at("jobId").get<std::string>();
    auto status = ParseJobStatus(doc.at("status").get<std::string>());
    if (!status) throw InputError("job record: unknown status");
    job.status = *status;
    job.app_id = doc.at("appId").get<std::string>();
    job.report_object = doc.at("reportObject").get<std::string>();
    job.config = doc.at("config");
    job.report_id = doc.value("reportId", "");
    job.error = doc.value("error", "");
  } catch (const json::exception& e) {
    throw InputError(std::string("job record: ") + e.what());
  }
  return job;
}

void WriteFileAtomic(const fs::path& path, std::string_view bytes) {
  static std::atomic<std::uint64_t> sequence{0};
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(sequence++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Store::Store(fs::path root) : root_(std::move(root)) {
  fs::create_directories(root_ / "objects");
  fs::create_directories(root_ / "jobs");
}

fs::path Store::DefaultRoot() {
  if (const char* dir = std::getenv("REPROLINT_DATA_DIR"); dir && *dir) return dir;
  return "reprolint-data";
}

std::string Store::PutObject(std::string_view bytes) {
  std::string hash = Sha256Hex(bytes);
  fs::path path = root_ / "objects" / hash;
  if (!fs::exists(path)) WriteFileAtomic(path, bytes);
  return hash;
}

std::optional<std::string> Store::GetObject(const std::string& hash) const {
  if (!IsHex(hash)) return std::nullopt;
  fs::path path = root_ / "objects" / hash;
  if (!fs::exists(path)) return std::nullopt;
  return ReadFile(path);
}

json Store::ReadIndex() const {
  fs::path path = root_ / "index.json";
  json index = fs::exists(path) ? json::parse(ReadFile(path)) : json::object();
  for (const char* section : kSections) {
    if (!index.contains(section)) index[section] = json::object();
  }
  return index;
}

void Store::WriteIndex(const json& index) {
  WriteFileAtomic(root_ / "index.json", index.dump(1) + "\n");
}

void Store::SetIndexEntry(const std::string& section, const std::string& key, json value) {
  std::lock_guard lock(mu_);
  json index = ReadIndex();
  index[section][key] = std::move(value);
  WriteIndex(index);
}

std::optional<json> Store::IndexEntry(const std::string& section, const std::string& key) const {
  std::lock_guard lock(mu_);
  json index = ReadIndex();
  auto it = index[section].find(key);
  if (it == index[section].end()) return std::nullopt;
  return *it;
}

std::string Store::PutApp(const AppModel& model) {
  const std::string canonical = model.CanonicalText();
  const std::string app_id = "app_" + ShortHash(canonical);
  SetIndexEntry("apps", app_id,
                {{"name", model.app_name()},
                 {"screens", model.screens().size()},
                 {"object", PutObject(canonical)}});
  return app_id;
}

std::optional<AppModel> Store::GetApp(const std::string& app_id) const {
  auto entry = IndexEntry("apps", app_id);
  if (!entry) return std::nullopt;
  auto text = GetObject(entry->at("object").get<std::string>());
  if (!text) return std::nullopt;
  return AppModel::Parse(*text);
}

std::vector<AppSummary> Store::ListApps() const {
  std::lock_guard lock(mu_);
  std::vector<AppSummary> out;
  const json index = ReadIndex();
  for (const auto& [id, entry] : index.at("apps").items()) {
    out.push_back({id, entry.at("name").get<std::string>(),
                   entry.at("screens").get<std::size_t>()});
  }
  return out;
}

void Store::PutGraph(const std::string& key, const ExecutionGraph& graph) {
  SetIndexEntry("graphs", key, PutObject(graph.Serialize()));
}

std::optional<ExecutionGraph> Store::GetGraph(const std::string& key) const {
  auto entry = IndexEntry("graphs", key);
  if (!entry) return std::nullopt;
  auto text = GetObject(entry->get<std::string>());
  if (!text) return std::nullopt;
  return ExecutionGraph::FromJson(json::parse(*text));
}

void Store::PutReport(const std::string& report_id, const std::string& json_text,
                      const std::string& html) {
  SetIndexEntry("reports", report_id, {{"json", PutObject(json_text)}, {"html", PutObject(html)}});
}

std::optional<std::string> Store::GetReport(const std::string& report_id,
                                            const std::string& format) const {
  auto entry = IndexEntry("reports", report_id);
  if (!entry || !entry->contains(format)) return std::nullopt;
  return GetObject(entry->at(format).get<std::string>());
}

void Store::PutWireframes(const std::map<std::string, std::string>& wireframes) {
  std::map<std::string, std::string> hashes;
  for (const auto& [ref, svg] : wireframes) hashes[ref] = PutObject(svg);
  std::lock_guard lock(mu_);
  json index = ReadIndex();
  for (const auto& [ref, hash] : hashes) index["wireframes"][ref] = hash;
  WriteIndex(index);
}

std::optional<std::string> Store::GetWireframe(const std::string& ref) const {
  auto entry = IndexEntry("wireframes", ref);
  if (!entry) return std::nullopt;
  return GetObject(entry->get<std::string>());
}

JobRecord Store::CreateJob(JobRecord job) {
  static thread_local std::mt19937_64 ids{std::random_device{}()};
  std::lock_guard lock(mu_);
  do {
    job.id = "job_" + ShortHash(std::to_string(ids()));
  } while (fs::exists(root_ / "jobs" / (job.id + ".json")));
  WriteFileAtomic(root_ / "jobs" / (job.id + ".json"), job.ToJson().dump(1) + "\n");
  return job;
}

void Store::PutJob(const JobRecord& job) {
  if (!IsSafeId(job.id)) throw InputError("invalid job id");
  std::lock_guard lock(mu_);
  WriteFileAtomic(root_ / "jobs" / (job.id + ".json"), job.ToJson().dump(1) + "\n");
}

std::optional<JobRecord> Store::GetJob(const std::string& id) const {
  if (!IsSafeId(id)) return std::nullopt;
  std::lock_guard lock(mu_);
  fs::path path = root_ / "jobs" / (id + ".json");
  if (!fs::exists(path)) return std::nullopt;
  return JobRecord::FromJson(json::parse(ReadFile(path)));
}

}  // namespace reprolint
