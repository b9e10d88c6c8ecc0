#pragma once

// HTTP classification service: /v1/classify (single + batch) and /v1/health,
// with an asynchronous webhook alert on high-confidence positive detections.
// Webhook payloads carry a salted hash of the text, never the text itself,
// and delivery failures are logged and counted but never surface to the
// classify caller.

#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <utility>

#include <httplib.h>
#include <json.hpp>

#include "sentinel/common.hpp"
#include "sentinel/model.hpp"
#include "sentinel/model_store.hpp"
#include "sentinel/sha256.hpp"

namespace sentinel {

struct ServiceConfig {
  int port = 8080;
  std::string model_path;
  bool preprocess = true;            // run summarize+normalize like training did
  double decision_threshold = 0.5;   // suicidal iff p(suicidal) >= threshold
  std::string webhook_url;           // empty = alerting off
  double webhook_min_confidence = 0.9;
  int max_request_chars = 20000;

  void validate() const {
    if (port < 1 || port > 65535)
      throw contract_error("service port must be in [1, 65535]");
    if (decision_threshold <= 0.0 || decision_threshold >= 1.0)
      throw contract_error("decision_threshold must be in (0, 1)");
    if (webhook_min_confidence <= 0.0 || webhook_min_confidence >= 1.0)
      throw contract_error("webhook_min_confidence must be in (0, 1)");
    if (max_request_chars < 1)
      throw contract_error("max_request_chars must be positive");
  }
};

inline ServiceConfig service_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw contract_error("service config must be a json object");
  ServiceConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "port") cfg.port = value.get<int>();
    else if (key == "model_path") cfg.model_path = value.get<std::string>();
    else if (key == "preprocess") cfg.preprocess = value.get<bool>();
    else if (key == "decision_threshold") cfg.decision_threshold = value.get<double>();
    else if (key == "webhook_url") cfg.webhook_url = value.get<std::string>();
    else if (key == "webhook_min_confidence") cfg.webhook_min_confidence = value.get<double>();
    else if (key == "max_request_chars") cfg.max_request_chars = value.get<int>();
    else throw contract_error("unknown service config key '" + key + "'");
  }
  return cfg;
}

inline ServiceConfig load_service_config(const std::string& path) {
  try {
    return service_config_from_json(nlohmann::json::parse(read_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw contract_error("service config is not valid json: " + std::string(e.what()));
  }
}

// Environment beats the config file. Only the documented variables exist.
inline void apply_env_overrides(ServiceConfig& cfg) {
  auto get = [](const char* name) -> const char* { return std::getenv(name); };
  if (const char* v = get("SENTINEL_PORT")) {
    try {
      cfg.port = std::stoi(v);
    } catch (const std::exception&) {
      throw contract_error("SENTINEL_PORT is not an integer: " + std::string(v));
    }
  }
  if (const char* v = get("SENTINEL_MODEL_PATH")) cfg.model_path = v;
  if (const char* v = get("SENTINEL_PREPROCESS")) {
    std::string s = to_lower_ascii(v);
    if (s == "1" || s == "true" || s == "yes" || s == "on") cfg.preprocess = true;
    else if (s == "0" || s == "false" || s == "no" || s == "off") cfg.preprocess = false;
    else throw contract_error("SENTINEL_PREPROCESS is not a boolean: " + std::string(v));
  }
  if (const char* v = get("SENTINEL_THRESHOLD")) {
    try {
      cfg.decision_threshold = std::stod(v);
    } catch (const std::exception&) {
      throw contract_error("SENTINEL_THRESHOLD is not a number: " + std::string(v));
    }
  }
  if (const char* v = get("SENTINEL_WEBHOOK_URL")) cfg.webhook_url = v;
}

namespace service_detail {

inline size_t utf8_length(const std::string& s) {
  size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

// "http://host:port/path" -> {"http://host:port", "/path"}
inline std::pair<std::string, std::string> split_url(const std::string& url) {
  auto scheme = url.find("://");
  if (scheme == std::string::npos)
    throw contract_error("webhook_url must include a scheme: " + url);
  auto slash = url.find('/', scheme + 3);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

}  // namespace service_detail

// Background queue worker: one delivery attempt plus one retry on connection
// failure, at-most-once per event beyond that.
class WebhookDispatcher {
public:
  explicit WebhookDispatcher(std::string url, std::string salt)
      : url_(std::move(url)), salt_(std::move(salt)) {
    if (!url_.empty()) worker_ = std::thread([this] { run(); });
  }

  ~WebhookDispatcher() {
    {
      std::lock_guard<std::mutex> lock(mu_);
      stop_ = true;
    }
    cv_.notify_all();
    if (worker_.joinable()) worker_.join();
  }

  bool enabled() const { return !url_.empty(); }

  void notify(const std::string& text, double confidence) {
    if (url_.empty()) return;
    Event e{sha256_hex(salt_ + text), confidence, utc_timestamp()};
    {
      std::lock_guard<std::mutex> lock(mu_);
      queue_.push_back(std::move(e));
    }
    cv_.notify_one();
  }

  // Blocks until every queued event has been attempted (for tests/shutdown).
  void drain() {
    std::unique_lock<std::mutex> lock(mu_);
    idle_cv_.wait(lock, [this] { return queue_.empty() && !busy_; });
  }

  uint64_t attempts() const { return attempts_.load(); }
  uint64_t delivered() const { return delivered_.load(); }
  uint64_t failed() const { return failed_.load(); }

private:
  struct Event {
    std::string text_hash;
    double confidence;
    std::string timestamp;
  };

  void run() {
    std::unique_lock<std::mutex> lock(mu_);
    while (true) {
      cv_.wait(lock, [this] { return stop_ || !queue_.empty(); });
      if (queue_.empty()) {
        if (stop_) return;
        continue;
      }
      Event e = std::move(queue_.front());
      queue_.pop_front();
      busy_ = true;
      lock.unlock();
      deliver(e);
      lock.lock();
      busy_ = false;
      idle_cv_.notify_all();
    }
  }

  void deliver(const Event& e) {
    nlohmann::ordered_json payload = {{"text_hash", e.text_hash},
                                      {"label", "suicidal"},
                                      {"confidence", e.confidence},
                                      {"timestamp", e.timestamp}};
    auto [base, path] = service_detail::split_url(url_);
    httplib::Client client(base);
    client.set_connection_timeout(2, 0);
    client.set_read_timeout(2, 0);
    std::string body = payload.dump();
    ++attempts_;
    auto res = client.Post(path, body, "application/json");
    if (!res) {  // connection-level failure: retry once
      ++attempts_;
      res = client.Post(path, body, "application/json");
    }
    if (res && res->status >= 200 && res->status < 300) {
      ++delivered_;
    } else {
      ++failed_;
      std::fprintf(stderr, "webhook delivery failed (hash %.12s..., status %d)\n",
                   e.text_hash.c_str(), res ? res->status : -1);
    }
  }

  std::string url_, salt_;
  std::thread worker_;
  std::mutex mu_;
  std::condition_variable cv_, idle_cv_;
  std::deque<Event> queue_;
  bool stop_ = false, busy_ = false;
  std::atomic<uint64_t> attempts_{0}, delivered_{0}, failed_{0};
};

class ClassifyService {
public:
  explicit ClassifyService(ServiceConfig cfg, std::string webhook_salt = "")
      : cfg_(std::move(cfg)) {
    cfg_.validate();
    if (webhook_salt.empty()) {
      // per-process salt: hashes are uncorrelatable across restarts
      std::random_device rd;
      webhook_salt = std::to_string(rd()) + "-" + std::to_string(rd());
    }
    webhook_ = std::make_unique<WebhookDispatcher>(cfg_.webhook_url, webhook_salt);
    install_routes();
  }

  const ServiceConfig& config() const { return cfg_; }

  // Loads from config().model_path; health turns 200 once this succeeds.
  void load_model_from_path() { attach_model(load_model(cfg_.model_path)); }

  void attach_model(std::unique_ptr<Classifier> model) {
    auto shared = std::shared_ptr<const Classifier>(std::move(model));
    std::lock_guard<std::mutex> lock(model_mu_);
    model_version_ = shared->version();
    model_ = std::move(shared);
  }

  struct Outcome {
    int status;
    nlohmann::ordered_json body;
  };

  Outcome classify_text(const std::string& text) const {
    if (text.empty()) return {400, {{"error", "empty_text"}}};
    if (service_detail::utf8_length(text) > static_cast<size_t>(cfg_.max_request_chars))
      return {413, {{"error", "text_too_long"}}};
    std::shared_ptr<const Classifier> model;
    std::string version;
    {
      std::lock_guard<std::mutex> lock(model_mu_);
      model = model_;
      version = model_version_;
    }
    if (!model) return {503, {{"error", "model_not_loaded"}}};
    auto p = model->predict(text, cfg_.preprocess);
    if (!p) return {422, {{"error", "unclassifiable_text"}}};
    double p1 = p->raw_scores[1];
    bool suicidal = p1 >= cfg_.decision_threshold;
    double confidence = suicidal ? p1 : 1.0 - p1;
    if (suicidal && confidence >= cfg_.webhook_min_confidence) webhook_->notify(text, confidence);
    return {200,
            {{"label", suicidal ? "suicidal" : "non_suicidal"},
             {"confidence", confidence},
             {"model_version", version}}};
  }

  httplib::Server& server() { return server_; }
  WebhookDispatcher& webhook() { return *webhook_; }

  // Production entry point; blocks until stop().
  bool listen() { return server_.listen("0.0.0.0", cfg_.port); }
  void stop() { server_.stop(); }

private:
  void respond(httplib::Response& res, const Outcome& o) const {
    res.status = o.status;
    res.set_content(o.body.dump(), "application/json");
  }

  void install_routes() {
    server_.Post("/v1/classify", [this](const httplib::Request& req, httplib::Response& res) {
      nlohmann::json body = nlohmann::json::parse(req.body, nullptr, false);
      if (body.is_discarded())
        return respond(res, {400, {{"error", "invalid_json"}}});
      if (!body.is_object() || !body.contains("text") || !body["text"].is_string())
        return respond(res, {400, {{"error", "empty_text"}}});
      respond(res, classify_text(body["text"].get<std::string>()));
    });

    server_.Post("/v1/classify/batch",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   nlohmann::json body = nlohmann::json::parse(req.body, nullptr, false);
                   if (body.is_discarded() || !body.is_object() || !body.contains("texts") ||
                       !body["texts"].is_array())
                     return respond(res, {400, {{"error", "invalid_json"}}});
                   const auto& texts = body["texts"];
                   if (texts.empty()) return respond(res, {400, {{"error", "empty_batch"}}});
                   if (texts.size() > 256)
                     return respond(res, {413, {{"error", "batch_too_large"}}});
                   nlohmann::ordered_json results = nlohmann::ordered_json::array();
                   for (const auto& item : texts) {
                     if (!item.is_string()) {
                       results.push_back({{"error", "invalid_text"}});
                       continue;
                     }
                     Outcome o = classify_text(item.get<std::string>());
                     if (o.status == 200) results.push_back(o.body);
                     else results.push_back({{"error", o.body["error"]}});
                   }
                   respond(res, {200, {{"results", std::move(results)}}});
                 });

    server_.Get("/v1/health", [this](const httplib::Request&, httplib::Response& res) {
      std::lock_guard<std::mutex> lock(model_mu_);
      if (!model_) return respond(res, {503, {{"status", "loading"}}});
      respond(res, {200, {{"status", "ok"}, {"model_version", model_version_}}});
    });
  }

  ServiceConfig cfg_;
  std::unique_ptr<WebhookDispatcher> webhook_;
  httplib::Server server_;
  mutable std::mutex model_mu_;
  std::shared_ptr<const Classifier> model_;
  std::string model_version_;
};

}  // namespace sentinel
