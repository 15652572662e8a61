#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ontosearch/error.hpp"
#include "ontosearch/query_engine.hpp"

namespace httplib {
class Server;
}

namespace ontosearch {

struct ServiceConfig {
  std::filesystem::path kb_dir;
  std::string bind_address = "127.0.0.1:8080";
  std::optional<std::filesystem::path> static_dir;
};

struct HttpReply {
  int status;
  nlohmann::json body;
};

/// JSON API over one immutable SearchIndex. Handlers are const and touch no
/// shared mutable state, so any number of requests may run at once.
///
///   POST /api/query                    {"q": "..."}
///   GET  /api/ontology
///   GET  /api/classes/{name}/instances
///   GET  /api/instances/{name}
///   GET  /api/perf?r=&n_min=&n_max=&steps=
///   GET  /healthz
class QueryService {
public:
  explicit QueryService(std::shared_ptr<const SearchIndex> index);

  HttpReply query(std::string_view request_body) const;
  HttpReply ontology() const;
  HttpReply class_instances(std::string_view name) const;
  HttpReply instance(std::string_view name) const;
  HttpReply perf(const std::map<std::string, std::string>& params) const;
  HttpReply health() const;

  /// Installs the endpoint table on `server`, plus static files at `/` when
  /// `static_dir` is set.
  void mount(httplib::Server& server,
             const std::optional<std::filesystem::path>& static_dir = std::nullopt) const;

  const SearchIndex& index() const noexcept { return *index_; }

private:
  std::shared_ptr<const SearchIndex> index_;
};

/// HTTP status for an error code.
int http_status(ErrorCode code);

/// Splits "host:port". Returns std::nullopt when the port is missing or invalid.
std::optional<std::pair<std::string, int>> parse_bind_address(std::string_view address);

/// Loads the KB, binds, and serves until SIGINT/SIGTERM. Returns 0 after a
/// clean shutdown, 2 if the KB fails to load, 1 if the address cannot be bound.
int serve(const ServiceConfig& config, std::ostream& log);

}  // namespace ontosearch
