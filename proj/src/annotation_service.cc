// Copyright 2026 The mctx Authors.
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

// Client for an HTTP annotation service.

#include <httplib.h>

#include <json.hpp>

#include "mctx/annotation.h"
#include "mctx/errors.h"

namespace mctx {
namespace {

struct Endpoint {
  std::string base;  // scheme://host[:port]
  std::string path;
};

Endpoint SplitEndpoint(const std::string &endpoint) {
  size_t scheme = endpoint.find("://");
  if (scheme == std::string::npos) {
    throw ConnectionError("endpoint must be an http:// URL: " + endpoint);
  }
  size_t slash = endpoint.find('/', scheme + 3);
  if (slash == std::string::npos) return {endpoint, "/"};
  return {endpoint.substr(0, slash), endpoint.substr(slash)};
}

}  // namespace

std::vector<Sentence> FetchAnnotations(std::string_view text,
                                       const std::string &endpoint,
                                       const ServiceOptions &options,
                                       const WarningSink &warn) {
  Endpoint target = SplitEndpoint(endpoint);
  httplib::Client client(target.base);
  if (!client.is_valid()) {
    throw ConnectionError("unsupported endpoint: " + endpoint);
  }
  const time_t sec = options.timeout_ms / 1000;
  const time_t usec = (options.timeout_ms % 1000) * 1000;
  client.set_connection_timeout(sec, usec);
  client.set_read_timeout(sec, usec);
  client.set_write_timeout(sec, usec);

  const std::string body = nlohmann::json{{"text", text}}.dump();
  httplib::Result result;
  for (int attempt = 0; attempt <= options.retries; ++attempt) {
    result = client.Post(target.path, body, "application/json");
    if (result && result->status < 500) break;
  }
  if (!result) {
    throw ConnectionError("cannot reach annotation service at " + endpoint +
                          ": " + httplib::to_string(result.error()));
  }
  if (result->status != 200) {
    throw HttpStatusError(result->status,
                          "annotation service at " + endpoint + " failed");
  }
  return ParseAnnotationJson(result->body, warn);
}

}  // namespace mctx
