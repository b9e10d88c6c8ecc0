#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "sentinel/baseline.hpp"
#include "sentinel/service.hpp"

using namespace sentinel;

namespace {

// Tiny separable corpus: "die" marks positives, "play" negatives.
std::vector<ProcessedRecord> marker_corpus(size_t n) {
  std::vector<std::string> filler = {"night", "work", "friend", "alone", "dark",
                                     "game",  "fun",  "talk",   "walk",  "rain"};
  std::mt19937_64 rng(4242);
  std::vector<ProcessedRecord> out;
  for (size_t i = 0; i < n; ++i) {
    int label = static_cast<int>(i % 2);
    std::vector<std::string> ws;
    for (size_t j = 0, len = 3 + rng() % 3; j < len; ++j)
      ws.push_back(filler[rng() % filler.size()]);
    ws.push_back(label ? "die" : "play");
    ProcessedRecord r;
    r.cleaned = join(ws, " ");
    r.text = r.cleaned;
    r.summary = r.cleaned;
    r.label = label;
    out.push_back(std::move(r));
  }
  return out;
}

std::unique_ptr<Classifier> trained_model() {
  return std::make_unique<BaselineModel>(
      BaselineModel::train(marker_corpus(60), {1, 1, 1, 1.0, 1e-6, 300, 42}));
}

struct TestServer {
  ClassifyService& svc;
  int port;
  std::thread th;

  explicit TestServer(ClassifyService& s) : svc(s) {
    port = svc.server().bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    th = std::thread([this] { svc.server().listen_after_bind(); });
    svc.server().wait_until_ready();
  }
  ~TestServer() {
    svc.server().stop();
    th.join();
  }
};

struct Receiver {
  httplib::Server srv;
  int port = 0;
  std::thread th;
  std::mutex mu;
  std::vector<std::string> bodies;

  Receiver() {
    srv.Post("/alert", [this](const httplib::Request& req, httplib::Response& res) {
      std::lock_guard<std::mutex> lock(mu);
      bodies.push_back(req.body);
      res.set_content("{}", "application/json");
    });
    port = srv.bind_to_any_port("127.0.0.1");
    th = std::thread([this] { srv.listen_after_bind(); });
    srv.wait_until_ready();
  }
  ~Receiver() {
    srv.stop();
    th.join();
  }
  size_t count() {
    std::lock_guard<std::mutex> lock(mu);
    return bodies.size();
  }
};

struct EnvGuard {
  std::string name;
  EnvGuard(const std::string& n, const std::string& value) : name(n) {
    setenv(name.c_str(), value.c_str(), 1);
  }
  ~EnvGuard() { unsetenv(name.c_str()); }
};

}  // namespace

TEST_CASE("service config parsing and env overrides", "[service]") {
  auto cfg = service_config_from_json(nlohmann::json::parse(
      R"({"port": 9000, "model_path": "/m", "preprocess": false,
          "decision_threshold": 0.7, "webhook_url": "http://x/y",
          "webhook_min_confidence": 0.95, "max_request_chars": 100})"));
  CHECK(cfg.port == 9000);
  CHECK(cfg.model_path == "/m");
  CHECK_FALSE(cfg.preprocess);
  CHECK(cfg.decision_threshold == 0.7);
  CHECK(cfg.webhook_url == "http://x/y");
  CHECK(cfg.webhook_min_confidence == 0.95);
  CHECK(cfg.max_request_chars == 100);

  CHECK_THROWS_WITH(service_config_from_json(nlohmann::json::parse(R"({"prot": 1})")),
                    Catch::Matchers::ContainsSubstring("unknown service config key 'prot'"));

  SECTION("environment beats the file") {
    EnvGuard p("SENTINEL_PORT", "7777");
    EnvGuard t("SENTINEL_THRESHOLD", "0.25");
    EnvGuard w("SENTINEL_WEBHOOK_URL", "http://override/hook");
    EnvGuard m("SENTINEL_MODEL_PATH", "/other");
    EnvGuard pp("SENTINEL_PREPROCESS", "off");
    apply_env_overrides(cfg);
    CHECK(cfg.port == 7777);
    CHECK(cfg.decision_threshold == 0.25);
    CHECK(cfg.webhook_url == "http://override/hook");
    CHECK(cfg.model_path == "/other");
    CHECK_FALSE(cfg.preprocess);
  }

  SECTION("malformed environment values fail loudly") {
    EnvGuard p("SENTINEL_PORT", "not-a-port");
    CHECK_THROWS_WITH(apply_env_overrides(cfg),
                      Catch::Matchers::ContainsSubstring("SENTINEL_PORT"));
  }
  SECTION("malformed boolean fails loudly") {
    EnvGuard p("SENTINEL_PREPROCESS", "maybe");
    CHECK_THROWS_WITH(apply_env_overrides(cfg),
                      Catch::Matchers::ContainsSubstring("SENTINEL_PREPROCESS"));
  }

  SECTION("validation bounds") {
    ServiceConfig bad;
    bad.decision_threshold = 1.0;
    CHECK_THROWS_AS(bad.validate(), contract_error);
    bad = ServiceConfig{};
    bad.port = 0;
    CHECK_THROWS_AS(bad.validate(), contract_error);
    bad = ServiceConfig{};
    bad.webhook_min_confidence = 0.0;
    CHECK_THROWS_AS(bad.validate(), contract_error);
  }
}

TEST_CASE("classify_text outcomes cover the status contract", "[service]") {
  ServiceConfig cfg;
  cfg.preprocess = false;
  cfg.max_request_chars = 60;
  ClassifyService svc(cfg);

  SECTION("503 before a model is attached") {
    auto o = svc.classify_text("night work die");
    CHECK(o.status == 503);
    CHECK(o.body == nlohmann::json({{"error", "model_not_loaded"}}));
  }

  svc.attach_model(trained_model());

  auto ok = svc.classify_text("night work die");
  CHECK(ok.status == 200);
  REQUIRE(ok.body.size() == 3);
  CHECK(ok.body["label"] == "suicidal");
  CHECK(ok.body["confidence"].get<double>() > 0.5);
  CHECK(ok.body["model_version"].get<std::string>().starts_with("baseline:"));

  CHECK(svc.classify_text("play game fun").body["label"] == "non_suicidal");

  auto empty = svc.classify_text("");
  CHECK(empty.status == 400);
  CHECK(empty.body == nlohmann::json({{"error", "empty_text"}}));

  auto big = svc.classify_text(std::string(61, 'a'));
  CHECK(big.status == 413);
  CHECK(big.body == nlohmann::json({{"error", "text_too_long"}}));

  SECTION("max_request_chars counts code points, not bytes") {
    std::string two_byte = "é";  // 2 bytes, 1 code point
    REQUIRE(two_byte.size() == 2);
    std::string sixty;
    for (int i = 0; i < 60; ++i) sixty += two_byte;
    CHECK(svc.classify_text(sixty).status != 413);
  }

  SECTION("identical text yields identical bodies") {
    auto a = svc.classify_text("night work die");
    auto b = svc.classify_text("night work die");
    CHECK(a.body.dump() == b.body.dump());
  }

  SECTION("raising the threshold flips the label, never the reverse") {
    double p1 = ok.body["confidence"].get<double>();  // suicidal at 0.5
    ServiceConfig strict = cfg;
    strict.decision_threshold = std::min(p1 + 1e-3, 0.999);
    ClassifyService strict_svc(strict);
    strict_svc.attach_model(trained_model());
    auto o = strict_svc.classify_text("night work die");
    CHECK(o.body["label"] == "non_suicidal");
    CHECK(o.body["confidence"].get<double>() == Catch::Approx(1.0 - p1).margin(1e-12));

    ServiceConfig lax = cfg;
    lax.decision_threshold = 0.05;
    ClassifyService lax_svc(lax);
    lax_svc.attach_model(trained_model());
    CHECK(lax_svc.classify_text("night work die").body["label"] == "suicidal");
  }
}

TEST_CASE("preprocessing mode rejects text that normalizes to nothing", "[service]") {
  ServiceConfig cfg;  // preprocess defaults to true
  ClassifyService svc(cfg);
  svc.attach_model(trained_model());
  auto o = svc.classify_text("1234 !!!");
  CHECK(o.status == 422);
  CHECK(o.body == nlohmann::json({{"error", "unclassifiable_text"}}));
  CHECK(svc.classify_text("the and of").status == 422);
}

TEST_CASE("http endpoints honour the wire contract", "[service]") {
  ServiceConfig cfg;
  cfg.preprocess = false;
  ClassifyService svc(cfg);
  TestServer ts(svc);
  httplib::Client cli("127.0.0.1", ts.port);

  SECTION("health gates on model load and tracks hot swaps") {
    auto before = cli.Get("/v1/health");
    REQUIRE(before);
    CHECK(before->status == 503);
    CHECK(nlohmann::json::parse(before->body) == nlohmann::json({{"status", "loading"}}));

    svc.attach_model(trained_model());
    auto after = cli.Get("/v1/health");
    REQUIRE(after);
    CHECK(after->status == 200);
    auto body = nlohmann::json::parse(after->body);
    REQUIRE(body.size() == 2);
    CHECK(body["status"] == "ok");
    std::string v1 = body["model_version"].get<std::string>();

    auto other = std::make_unique<BaselineModel>(
        BaselineModel::train(marker_corpus(40), {1, 1, 1, 1.0, 1e-6, 300, 42}));
    svc.attach_model(std::move(other));
    auto swapped = nlohmann::json::parse(cli.Get("/v1/health")->body);
    CHECK(swapped["model_version"].get<std::string>() != v1);
  }

  svc.attach_model(trained_model());

  SECTION("single classify: success and machine-readable errors") {
    auto ok = cli.Post("/v1/classify", R"({"text": "night work die"})", "application/json");
    REQUIRE(ok);
    CHECK(ok->status == 200);
    auto body = nlohmann::json::parse(ok->body);
    REQUIRE(body.size() == 3);
    CHECK(body["label"] == "suicidal");
    CHECK(body.contains("confidence"));
    CHECK(body.contains("model_version"));

    auto empty = cli.Post("/v1/classify", R"({"text": ""})", "application/json");
    CHECK(empty->status == 400);
    CHECK(nlohmann::json::parse(empty->body) == nlohmann::json({{"error", "empty_text"}}));

    auto missing = cli.Post("/v1/classify", R"({"txet": "x"})", "application/json");
    CHECK(missing->status == 400);
    CHECK(nlohmann::json::parse(missing->body) == nlohmann::json({{"error", "empty_text"}}));

    auto garbage = cli.Post("/v1/classify", "{nope", "application/json");
    CHECK(garbage->status == 400);
    CHECK(nlohmann::json::parse(garbage->body) == nlohmann::json({{"error", "invalid_json"}}));

    auto big = cli.Post("/v1/classify",
                        nlohmann::json{{"text", std::string(20001, 'a')}}.dump(),
                        "application/json");
    CHECK(big->status == 413);
  }

  SECTION("batch preserves order, isolates failures, matches single") {
    nlohmann::json req = {{"texts", {"night work die", "", "play game fun"}}};
    auto res = cli.Post("/v1/classify/batch", req.dump(), "application/json");
    REQUIRE(res);
    CHECK(res->status == 200);
    auto body = nlohmann::json::parse(res->body);
    REQUIRE(body.contains("results"));
    const auto& results = body["results"];
    REQUIRE(results.size() == 3);
    CHECK(results[1] == nlohmann::json({{"error", "empty_text"}}));
    CHECK(results[0]["label"] == "suicidal");
    CHECK(results[2]["label"] == "non_suicidal");

    auto single = cli.Post("/v1/classify", R"({"text": "night work die"})", "application/json");
    CHECK(results[0] == nlohmann::json::parse(single->body));

    auto empty = cli.Post("/v1/classify/batch", R"({"texts": []})", "application/json");
    CHECK(empty->status == 400);
    CHECK(nlohmann::json::parse(empty->body) == nlohmann::json({{"error", "empty_batch"}}));

    nlohmann::json big;
    big["texts"] = std::vector<std::string>(257, "hello");
    auto over = cli.Post("/v1/classify/batch", big.dump(), "application/json");
    CHECK(over->status == 413);
    CHECK(nlohmann::json::parse(over->body) == nlohmann::json({{"error", "batch_too_large"}}));

    auto mixed = cli.Post("/v1/classify/batch", R"({"texts": ["night die", 42]})",
                          "application/json");
    CHECK(mixed->status == 200);
    CHECK(nlohmann::json::parse(mixed->body)["results"][1] ==
          nlohmann::json({{"error", "invalid_text"}}));
  }
}

TEST_CASE("webhook alerts fire only on qualifying detections", "[service]") {
  Receiver receiver;
  ServiceConfig cfg;
  cfg.preprocess = false;
  cfg.webhook_url = "http://127.0.0.1:" + std::to_string(receiver.port) + "/alert";
  cfg.webhook_min_confidence = 0.5;
  ClassifyService svc(cfg, "test-salt");
  svc.attach_model(trained_model());

  auto o = svc.classify_text("night work die die");
  REQUIRE(o.status == 200);
  REQUIRE(o.body["label"] == "suicidal");
  svc.webhook().drain();
  REQUIRE(receiver.count() == 1);

  auto payload = nlohmann::json::parse(receiver.bodies[0]);
  REQUIRE(payload.size() == 4);
  CHECK(payload["label"] == "suicidal");
  CHECK(payload["confidence"].get<double>() >= 0.5);
  std::string hash = payload["text_hash"].get<std::string>();
  CHECK(hash.size() == 64);
  CHECK(hash.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(hash == sha256_hex("test-salt" + std::string("night work die die")));
  // privacy: the payload never carries the post text
  CHECK(receiver.bodies[0].find("night work") == std::string::npos);
  std::string ts = payload["timestamp"].get<std::string>();
  CHECK(ts.size() == 20);
  CHECK(ts[4] == '-');
  CHECK(ts[10] == 'T');
  CHECK(ts[19] == 'Z');

  SECTION("negative classifications stay quiet") {
    svc.classify_text("play game fun");
    svc.webhook().drain();
    CHECK(receiver.count() == 1);
    CHECK(svc.webhook().delivered() == 1);
  }

  SECTION("below-threshold confidence stays quiet") {
    ServiceConfig strict = cfg;
    strict.webhook_min_confidence = 0.999999;
    ClassifyService quiet(strict, "test-salt");
    quiet.attach_model(trained_model());
    quiet.classify_text("night work die die");
    quiet.webhook().drain();
    CHECK(quiet.webhook().attempts() == 0);
  }
}

TEST_CASE("webhook failure never affects the response", "[service]") {
  ServiceConfig cfg;
  cfg.preprocess = false;
  cfg.webhook_url = "http://127.0.0.1:9/unreachable";  // discard port, nothing listens
  cfg.webhook_min_confidence = 0.5;
  ClassifyService svc(cfg, "s");
  svc.attach_model(trained_model());

  auto o = svc.classify_text("night work die die");
  CHECK(o.status == 200);
  CHECK(o.body["label"] == "suicidal");
  svc.webhook().drain();
  CHECK(svc.webhook().failed() == 1);
  CHECK(svc.webhook().attempts() == 2);  // one retry on connection failure
  CHECK(svc.webhook().delivered() == 0);
}

TEST_CASE("webhook stays silent when unset", "[service]") {
  ServiceConfig cfg;
  cfg.preprocess = false;
  ClassifyService svc(cfg);
  svc.attach_model(trained_model());
  CHECK_FALSE(svc.webhook().enabled());
  svc.classify_text("night work die die");
  svc.webhook().drain();
  CHECK(svc.webhook().attempts() == 0);
}
