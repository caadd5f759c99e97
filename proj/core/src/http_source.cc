// Copyright 2026 The Taalwatch Authors.
//
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

#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "taalwatch/ingest.h"

namespace taalwatch {

namespace {

struct SplitUrl {
  std::string scheme_host_port;
  std::string path;
};

SplitUrl split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw DataError("URL lacks a scheme: " + url);
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http") {
    throw DataError("unsupported URL scheme '" + scheme + "' (only http is built in)");
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

bool retryable(int status) { return status == 429 || status >= 500; }

}  // namespace

std::vector<std::string> poll_http(const SourceConfig& cfg,
                                   const std::optional<std::string>& since_id) {
  validate(cfg);
  if (cfg.kind != SourceKind::kHttpJson) throw DataError("poll_http needs an http_json source");
  const SplitUrl url = split_url(cfg.location);

  httplib::Client client(url.scheme_host_port);
  client.set_connection_timeout(cfg.request_timeout);
  client.set_read_timeout(cfg.request_timeout);
  client.set_write_timeout(cfg.request_timeout);

  httplib::Params params;
  if (since_id) params.emplace("since_id", *since_id);
  params.emplace("limit", std::to_string(cfg.limit));

  std::string last_error;
  auto backoff = cfg.initial_backoff;
  for (int attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
    auto res = client.Get(url.path, params, httplib::Headers{});
    if (res && res->status >= 200 && res->status < 300) {
      nlohmann::json body;
      try {
        body = nlohmann::json::parse(res->body);
      } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("HTTP source returned invalid JSON: ") + e.what());
      }
      if (!body.is_array()) throw DataError("HTTP source did not return a JSON array");
      std::vector<std::string> records;
      records.reserve(body.size());
      for (const auto& element : body) records.push_back(element.dump());
      return records;
    }
    if (res) {
      last_error = "HTTP status " + std::to_string(res->status);
      if (!retryable(res->status)) break;
    } else {
      last_error = httplib::to_string(res.error());
    }
    if (attempt < cfg.max_attempts) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
  }
  throw IoError("GET " + cfg.location + " failed: " + last_error);
}

}  // namespace taalwatch
