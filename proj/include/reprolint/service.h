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

#ifndef REPROLINT_SERVICE_H_
#define REPROLINT_SERVICE_H_

#include <condition_variable>
#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "reprolint/quality.h"
#include "reprolint/store.h"

namespace reprolint {

struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string accept;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// Versioned HTTP API over a Store. Handle() is socket-free; Listen() binds it
// to a port. Assessments run on a fixed pool of worker threads, each with its
// own session and graph copy.
class Service {
 public:
  struct Options {
    std::size_t workers = 2;
    AssessConfig defaults;  // applied under request-body overrides
  };

  Service(Store& store, Options options);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  HttpResponse Handle(const HttpRequest& request);

  // Blocks until no job is queued or running.
  void WaitIdle();

  // Binds to `port` (0 picks a free one) and returns the bound port.
  int Bind(const std::string& host, int port);
  // Serves until Stop(); call after Bind().
  void Listen();
  void Stop();

 private:
  class HttpServer;

  HttpResponse PostApp(const HttpRequest& request);
  HttpResponse ListApps();
  HttpResponse GetApp(const std::string& id);
  HttpResponse PostAssess(const HttpRequest& request);
  HttpResponse GetJob(const std::string& id);
  HttpResponse GetReport(const HttpRequest& request, const std::string& id);
  HttpResponse GetWireframe(const std::string& id);

  void Enqueue(const std::string& job_id);
  void WorkerLoop();
  void RunJob(const std::string& job_id);
  ExecutionGraph GraphFor(const std::string& app_id, const AppModel& model,
                          std::size_t budget);

  Store& store_;
  Options options_;
  std::mutex mu_;
  std::condition_variable work_cv_;
  std::condition_variable idle_cv_;
  std::deque<std::string> queue_;
  std::size_t active_ = 0;
  bool stopping_ = false;
  std::vector<std::thread> workers_;
  std::unique_ptr<HttpServer> http_;
};

}  // namespace reprolint

#endif  // REPROLINT_SERVICE_H_
