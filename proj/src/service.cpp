#include "ontosearch/service.hpp"

#include <httplib.h>
#include <pthread.h>
#include <signal.h>

#include <charconv>
#include <thread>

#include "ontosearch/json_codec.hpp"

namespace ontosearch {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxPayload = 64 * 1024;
constexpr std::size_t kMaxPerfSteps = 10000;

HttpReply fail(const Error& e) { return {http_status(e.code()), error_json(e)}; }

HttpReply bad_request(std::string_view message) {
  return {400, error_json("bad_request", message)};
}

void send(httplib::Response& res, const HttpReply& reply) {
  res.status = reply.status;
  res.set_content(reply.body.dump(), "application/json");
}

std::optional<double> parse_real(const std::string& text) {
  double value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedQuery:
    case ErrorCode::NoRelation:
      return 422;
    case ErrorCode::EmptyResult:
    case ErrorCode::UnknownClass:
    case ErrorCode::UnknownInstance:
    case ErrorCode::UnknownProperty:
      return 404;
    case ErrorCode::DomainError:
      return 400;
    default:
      return 500;
  }
}

QueryService::QueryService(std::shared_ptr<const SearchIndex> index) : index_(std::move(index)) {}

HttpReply QueryService::query(std::string_view request_body) const {
  json body = json::parse(request_body, nullptr, false);
  if (body.is_discarded() || !body.is_object()) return bad_request("body must be a JSON object");
  auto q = body.find("q");
  if (q == body.end() || !q->is_string()) return bad_request("field 'q' must be a string");
  const std::string text = q->get<std::string>();
  try {
    Extraction extraction = extract(index_->lexicon, text);
    Answer answer = resolve(index_->kb, extraction);
    return {200, answer_json(text, extraction, answer)};
  } catch (const Error& e) {
    return fail(e);
  }
}

HttpReply QueryService::ontology() const { return {200, ontology_json(index_->kb)}; }

HttpReply QueryService::class_instances(std::string_view name) const {
  auto n = Name::parse(name);
  if (!n) return fail(Error(ErrorCode::UnknownClass, "unknown class '" + std::string(name) + "'"));
  try {
    return {200, class_instances_json(index_->kb, *n)};
  } catch (const Error& e) {
    return fail(e);
  }
}

HttpReply QueryService::instance(std::string_view name) const {
  auto n = Name::parse(name);
  const InstanceRecord* rec = n ? index_->kb.find_instance(*n) : nullptr;
  if (!rec) {
    return fail(Error(ErrorCode::UnknownInstance, "unknown instance '" + std::string(name) + "'"));
  }
  return {200, instance_json(index_->kb, *rec)};
}

HttpReply QueryService::perf(const std::map<std::string, std::string>& params) const {
  std::map<std::string, double> values = {{"r", 50}, {"n_min", 10}, {"n_max", 1e6}, {"steps", 6}};
  for (const auto& [key, text] : params) {
    auto it = values.find(key);
    if (it == values.end()) return bad_request("unknown parameter '" + key + "'");
    auto v = parse_real(text);
    if (!v) return bad_request("parameter '" + key + "' must be a number");
    it->second = *v;
  }
  const double steps = values["steps"];
  if (steps != std::floor(steps) || steps < 2 || steps > double(kMaxPerfSteps)) {
    return fail(Error(ErrorCode::DomainError,
                      "steps must be an integer in [2, " + std::to_string(kMaxPerfSteps) + "]"));
  }
  try {
    auto rows = perf::emit_curves(values["n_min"], values["n_max"],
                                  static_cast<std::size_t>(steps), values["r"]);
    return {200, perf_json(values["r"], rows)};
  } catch (const Error& e) {
    return fail(e);
  }
}

HttpReply QueryService::health() const {
  return {200, {{"status", "ok"}, {"documents", index_->kb.doc_count()}}};
}

void QueryService::mount(httplib::Server& server,
                         const std::optional<std::filesystem::path>& static_dir) const {
  server.set_payload_max_length(kMaxPayload);
  server.Post("/api/query", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, query(req.body));
  });
  server.Get("/api/ontology",
             [this](const httplib::Request&, httplib::Response& res) { send(res, ontology()); });
  server.Get(R"(/api/classes/([^/]+)/instances)",
             [this](const httplib::Request& req, httplib::Response& res) {
               send(res, class_instances(req.matches[1].str()));
             });
  server.Get(R"(/api/instances/([^/]+))", [this](const httplib::Request& req,
                                                  httplib::Response& res) {
    send(res, instance(req.matches[1].str()));
  });
  server.Get("/api/perf", [this](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> params;
    for (const auto& [k, v] : req.params) params[k] = v;
    send(res, perf(params));
  });
  server.Get("/healthz",
             [this](const httplib::Request&, httplib::Response& res) { send(res, health()); });
  if (static_dir) server.set_mount_point("/", static_dir->string());
}

std::optional<std::pair<std::string, int>> parse_bind_address(std::string_view address) {
  auto colon = address.rfind(':');
  if (colon == std::string_view::npos || colon == 0) return std::nullopt;
  int port = 0;
  auto digits = address.substr(colon + 1);
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), port);
  if (ec != std::errc() || end != digits.data() + digits.size() || port < 0 || port > 65535) {
    return std::nullopt;
  }
  return std::pair{std::string(address.substr(0, colon)), port};
}

int serve(const ServiceConfig& config, std::ostream& log) {
  auto address = parse_bind_address(config.bind_address);
  if (!address) {
    log << "error: invalid bind address '" << config.bind_address << "' (expected host:port)\n";
    return 1;
  }
  std::shared_ptr<const SearchIndex> index;
  try {
    index = std::make_shared<const SearchIndex>(load_search_index(config.kb_dir));
  } catch (const Error& e) {
    log << "error: " << code_label(e.code()) << ": " << e.what() << "\n";
    return 2;
  }
  if (config.static_dir && !std::filesystem::is_directory(*config.static_dir)) {
    log << "error: static directory not found: " << config.static_dir->string() << "\n";
    return 1;
  }

  // Worker threads inherit this mask; a dedicated thread takes the signal.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  QueryService service(index);
  httplib::Server server;
  service.mount(server, config.static_dir);
  if (!server.bind_to_port(address->first, address->second)) {
    log << "error: cannot bind " << config.bind_address << "\n";
    return 1;
  }
  log << "serving " << index->kb.classes().size() << " classes, " << index->kb.instances().size()
      << " instances on " << config.bind_address << "\n";

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  server.listen_after_bind();
  waiter.join();
  log << "shut down\n";
  return 0;
}

}  // namespace ontosearch
