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

#include "reprolint/service.h"

#include <utility>

#include "httplib.h"
#include "reprolint/error.h"
#include "reprolint/report.h"
#include "reprolint/text.h"

namespace reprolint {
namespace {

using nlohmann::json;

HttpResponse JsonResponse(int status, const json& body) {
  return {status, "application/json", body.dump(2) + "\n"};
}

HttpResponse ErrorResponse(int status, const std::string& message) {
  return JsonResponse(status, {{"error", {{"status", status}, {"message", message}}}});
}

std::vector<std::string> Segments(const std::string& path) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= path.size()) {
    std::size_t end = path.find('/', start);
    if (end == std::string::npos) end = path.size();
    if (end > start) out.push_back(path.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

class Service::HttpServer {
 public:
  httplib::Server server;
};

Service::Service(Store& store, Options options)
    : store_(store), options_(std::move(options)), http_(std::make_unique<HttpServer>()) {
  options_.defaults.Validate();
  const std::size_t n = options_.workers == 0 ? 1 : options_.workers;
  for (std::size_t i = 0; i < n; ++i) workers_.emplace_back([this] { WorkerLoop(); });

  auto bridge = [this](const httplib::Request& req, httplib::Response& res) {
    HttpRequest r;
    r.method = req.method;
    r.path = req.path;
    for (const auto& [k, v] : req.params) r.query[k] = v;
    r.accept = req.get_header_value("Accept");
    r.body = req.body;
    HttpResponse out = Handle(r);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  http_->server.Get(R"(/.*)", bridge);
  http_->server.Post(R"(/.*)", bridge);
}

Service::~Service() {
  Stop();
  {
    std::lock_guard lock(mu_);
    stopping_ = true;
  }
  work_cv_.notify_all();
  for (std::thread& t : workers_) t.join();
}

int Service::Bind(const std::string& host, int port) {
  if (port == 0) return http_->server.bind_to_any_port(host);
  return http_->server.bind_to_port(host, port) ? port : -1;
}

void Service::Listen() { http_->server.listen_after_bind(); }

void Service::Stop() { http_->server.stop(); }

HttpResponse Service::Handle(const HttpRequest& request) {
  try {
    const std::vector<std::string> seg = Segments(request.path);
    if (seg.size() < 3 || seg[0] != "api" || seg[1] != "v1") {
      return ErrorResponse(404, "no such endpoint: " + request.path);
    }
    const std::string& resource = seg[2];
    const bool get = request.method == "GET";
    const bool post = request.method == "POST";
    if (resource == "apps" && seg.size() == 3) {
      if (get) return ListApps();
      if (post) return PostApp(request);
    } else if (resource == "apps" && seg.size() == 4 && get) {
      return GetApp(seg[3]);
    } else if (resource == "assess" && seg.size() == 3 && post) {
      return PostAssess(request);
    } else if (resource == "jobs" && seg.size() == 4 && get) {
      return GetJob(seg[3]);
    } else if (resource == "reports" && seg.size() == 4 && get) {
      return GetReport(request, seg[3]);
    } else if (resource == "wireframes" && seg.size() == 4 && get) {
      return GetWireframe(seg[3]);
    } else if (seg.size() <= 4 && (resource == "apps" || resource == "assess" ||
                                   resource == "jobs" || resource == "reports" ||
                                   resource == "wireframes")) {
      return ErrorResponse(405, request.method + " is not allowed on " + request.path);
    }
    return ErrorResponse(404, "no such endpoint: " + request.path);
  } catch (const std::exception& e) {
    return ErrorResponse(500, e.what());
  }
}

HttpResponse Service::PostApp(const HttpRequest& request) {
  json doc;
  try {
    doc = json::parse(request.body);
  } catch (const json::parse_error& e) {
    return ErrorResponse(400, std::string("malformed JSON: ") + e.what());
  }
  try {
    AppModel model = AppModel::FromJson(doc);
    const std::string id = store_.PutApp(model);
    return JsonResponse(201, {{"appId", id}, {"name", model.app_name()}});
  } catch (const InputError& e) {
    return ErrorResponse(422, e.what());
  }
}

HttpResponse Service::ListApps() {
  json apps = json::array();
  for (const AppSummary& a : store_.ListApps()) {
    apps.push_back({{"appId", a.app_id}, {"name", a.name}, {"screens", a.screens}});
  }
  return JsonResponse(200, {{"apps", std::move(apps)}});
}

HttpResponse Service::GetApp(const std::string& id) {
  auto model = store_.GetApp(id);
  if (!model) return ErrorResponse(404, "unknown app " + id);
  return JsonResponse(200, model->ToJson());
}

HttpResponse Service::PostAssess(const HttpRequest& request) {
  json doc;
  try {
    doc = json::parse(request.body);
  } catch (const json::parse_error& e) {
    return ErrorResponse(400, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) return ErrorResponse(400, "expected a JSON object");
  auto report = doc.find("report");
  if (report == doc.end() || !report->is_string()) {
    return ErrorResponse(400, "\"report\" must be a string");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "report" && key != "appId" && key != "app" && key != "config") {
      return ErrorResponse(400, "unknown field \"" + key + "\"");
    }
  }
  JobRecord job;
  try {
    ParseReport(report->get<std::string>());
    if (auto app = doc.find("app"); app != doc.end()) {
      job.app_id = store_.PutApp(AppModel::FromJson(*app));
    } else if (auto id = doc.find("appId"); id != doc.end() && id->is_string()) {
      job.app_id = id->get<std::string>();
      if (!store_.GetApp(job.app_id)) return ErrorResponse(404, "unknown app " + job.app_id);
    } else {
      return ErrorResponse(400, "\"appId\" must be a string");
    }
    if (auto cfg = doc.find("config"); cfg != doc.end()) {
      AssessConfig::FromJson(*cfg, options_.defaults);
      job.config = *cfg;
    }
  } catch (const InputError& e) {
    return ErrorResponse(422, e.what());
  }
  job.report_object = store_.PutObject(report->get<std::string>());
  job = store_.CreateJob(std::move(job));
  Enqueue(job.id);
  return JsonResponse(202, {{"jobId", job.id}, {"status", "queued"}});
}

HttpResponse Service::GetJob(const std::string& id) {
  auto job = store_.GetJob(id);
  if (!job) return ErrorResponse(404, "unknown job " + id);
  json body = {{"jobId", job->id}, {"status", std::string(JobStatusName(job->status))}};
  if (!job->report_id.empty()) body["reportId"] = job->report_id;
  if (!job->error.empty()) body["error"] = job->error;
  return JsonResponse(200, body);
}

HttpResponse Service::GetReport(const HttpRequest& request, const std::string& id) {
  std::string format = "json";
  if (auto it = request.query.find("format"); it != request.query.end()) {
    format = it->second;
    if (format != "json" && format != "html") {
      return ErrorResponse(400, "format must be json or html");
    }
  } else if (request.accept.find("text/html") != std::string::npos) {
    format = "html";
  }
  auto body = store_.GetReport(id, format);
  if (!body) return ErrorResponse(404, "unknown report " + id);
  return {200, format == "html" ? "text/html; charset=utf-8" : "application/json",
          std::move(*body)};
}

HttpResponse Service::GetWireframe(const std::string& id) {
  auto svg = store_.GetWireframe(id);
  if (!svg) return ErrorResponse(404, "unknown wireframe " + id);
  return {200, "image/svg+xml", std::move(*svg)};
}

void Service::Enqueue(const std::string& job_id) {
  {
    std::lock_guard lock(mu_);
    queue_.push_back(job_id);
  }
  work_cv_.notify_one();
}

void Service::WaitIdle() {
  std::unique_lock lock(mu_);
  idle_cv_.wait(lock, [this] { return queue_.empty() && active_ == 0; });
}

void Service::WorkerLoop() {
  for (;;) {
    std::string id;
    {
      std::unique_lock lock(mu_);
      work_cv_.wait(lock, [this] { return stopping_ || !queue_.empty(); });
      if (queue_.empty()) return;
      id = std::move(queue_.front());
      queue_.pop_front();
      ++active_;
    }
    RunJob(id);
    {
      std::lock_guard lock(mu_);
      --active_;
    }
    idle_cv_.notify_all();
  }
}

ExecutionGraph Service::GraphFor(const std::string& app_id, const AppModel& model,
                                 std::size_t budget) {
  const std::string key = app_id + "-b" + std::to_string(budget);
  if (auto cached = store_.GetGraph(key)) return *std::move(cached);
  ExecutionGraph graph = ExploreGraph(model, budget);
  store_.PutGraph(key, graph);
  return graph;
}

void Service::RunJob(const std::string& job_id) {
  auto loaded = store_.GetJob(job_id);
  if (!loaded) return;
  JobRecord job = *std::move(loaded);
  job.status = JobStatus::kRunning;
  store_.PutJob(job);
  try {
    auto model = store_.GetApp(job.app_id);
    if (!model) throw InputError("unknown app " + job.app_id);
    auto text = store_.GetObject(job.report_object);
    if (!text) throw InputError("report text is missing from the store");
    const AssessConfig cfg = AssessConfig::FromJson(job.config, options_.defaults);
    const ExecutionGraph graph = GraphFor(job.app_id, *model, cfg.explore_budget);
    AssessmentArtifacts out = RunAssessment(*text, *model, &graph, cfg);
    store_.PutWireframes(out.report.wireframes);
    store_.PutReport(out.report.report_id, out.json, out.html);
    job.report_id = out.report.report_id;
    job.status = JobStatus::kDone;
  } catch (const std::exception& e) {
    job.status = JobStatus::kFailed;
    job.error = e.what();
  }
  store_.PutJob(job);
}

}  // namespace reprolint
