#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "sentinel/electra.hpp"
#include "sentinel/model_store.hpp"

using namespace sentinel;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> toy_tokens() {
  return {"[PAD]", "[UNK]", "[CLS]", "[SEP]", "die",  "play", "night", "work",
          "friend", "alone", "dark",  "game",  "fun",  "talk", "walk",  "rain",
          "sun",    "moon",  "star",  "tree",  "book", "road", "fire",  "cold",
          "warm",   "wind",  "snow",  "leaf",  "bird", "fish", "stone", "cloud"};
}

TransformerConfig toy_config() {
  TransformerConfig t;
  t.vocabulary_size = 32;
  t.embedding_size = 32;
  t.hidden_size = 32;
  t.num_hidden_layers = 2;
  t.num_attention_heads = 2;
  t.intermediate_size = 64;
  t.max_position_embeddings = 32;
  return t;
}

// Marker-word corpus: "die" appears in every positive, "play" in every
// negative, everything else is neutral filler.
std::vector<ProcessedRecord> toy_corpus(size_t n, double positive_rate, uint64_t seed) {
  auto tokens = toy_tokens();
  std::mt19937_64 rng(seed);
  std::vector<ProcessedRecord> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    // period-20 pattern keeps the rate honest even for small n
    int label = (i % 20) < static_cast<size_t>(positive_rate * 20 + 0.5) ? 1 : 0;
    size_t len = 4 + rng() % 5;
    std::vector<std::string> ws;
    for (size_t j = 0; j < len; ++j) ws.push_back(tokens[6 + rng() % 26]);
    ws[rng() % ws.size()] = label ? "die" : "play";
    ProcessedRecord r;
    r.cleaned = join(ws, " ");
    r.text = r.cleaned;
    r.summary = r.cleaned;
    r.label = label;
    out.push_back(std::move(r));
  }
  return out;
}

fs::path scratch_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

double f1_via_predict(const Classifier& model, const std::vector<ProcessedRecord>& part) {
  long tp = 0, fp = 0, fn = 0;
  for (const auto& r : part) {
    auto p = model.predict(r.cleaned, false);
    REQUIRE(p.has_value());
    tp += static_cast<long>(p->label == 1 && r.label == 1);
    fp += static_cast<long>(p->label == 1 && r.label == 0);
    fn += static_cast<long>(p->label == 0 && r.label == 1);
  }
  double denom = static_cast<double>(2 * tp + fp + fn);
  return denom > 0 ? 2.0 * static_cast<double>(tp) / denom : 0.0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Subword tokenization

TEST_CASE("wordpiece applies greedy longest-prefix matching", "[wordpiece]") {
  auto vocab = WordpieceVocab::from_tokens({"[PAD]", "[UNK]", "[CLS]", "[SEP]", "want", "play",
                                            "##ing", "din", "##ner", "night", "un", "##believ",
                                            "##able", "a", "##bc"});
  WordpieceTokenizer tok(vocab);
  auto id = [&](const std::string& piece) { return vocab.index.at(piece); };

  CHECK(tok.tokenize_word("playing") == std::vector<int>{id("play"), id("##ing")});
  CHECK(tok.tokenize_word("dinner") == std::vector<int>{id("din"), id("##ner")});
  CHECK(tok.tokenize_word("unbelievable") ==
        std::vector<int>{id("un"), id("##believ"), id("##able")});
  CHECK(tok.tokenize_word("night") == std::vector<int>{id("night")});
  CHECK(tok.tokenize_word("abc") == std::vector<int>{id("a"), id("##bc")});

  // no matchable prefix, or an unmatchable tail, maps the whole word to [UNK]
  CHECK(tok.tokenize_word("xyz") == std::vector<int>{vocab.unk_id});
  CHECK(tok.tokenize_word("nightx") == std::vector<int>{vocab.unk_id});
  CHECK(tok.tokenize_word(std::string(101, 'a')) == std::vector<int>{vocab.unk_id});
}

TEST_CASE("wordpiece vocabulary validation", "[wordpiece]") {
  CHECK_THROWS_WITH(WordpieceVocab::from_tokens({"[PAD]", "[UNK]", "[CLS]", "a"}),
                    Catch::Matchers::ContainsSubstring("[SEP]"));
  CHECK_THROWS_WITH(WordpieceVocab::from_tokens({"[PAD]", "[UNK]", "[CLS]", "[SEP]", "a", "a"}),
                    Catch::Matchers::ContainsSubstring("duplicate"));

  auto dir = scratch_dir("sentinel_wp_vocab");
  write_file((dir / "vocab.txt").string(), "[PAD]\n[UNK]\n[CLS]\n[SEP]\nhello\n");
  auto v = WordpieceVocab::load((dir / "vocab.txt").string());
  CHECK(v.size() == 5);
  CHECK(v.index.at("hello") == 4);
  write_file((dir / "empty.txt").string(), "\n\n");
  CHECK_THROWS_AS(WordpieceVocab::load((dir / "empty.txt").string()), contract_error);
}

TEST_CASE("wordpiece encode wraps with specials and truncates silently", "[wordpiece]") {
  auto vocab = WordpieceVocab::from_tokens(toy_tokens());
  WordpieceTokenizer tok(vocab);
  auto id = [&](const std::string& piece) { return vocab.index.at(piece); };

  auto enc = tok.encode("want play night", 16);
  // "want" is not in the toy vocabulary
  CHECK(enc.ids == std::vector<int>{vocab.cls_id, vocab.unk_id, id("play"), id("night"),
                                    vocab.sep_id});
  CHECK_FALSE(enc.truncated);
  CHECK(tok.truncation_count() == 0);

  auto trunc = tok.encode("night work friend alone dark game fun talk walk rain", 6);
  CHECK(trunc.ids.size() == 6);
  CHECK(trunc.ids.front() == vocab.cls_id);
  CHECK(trunc.ids.back() == vocab.sep_id);
  CHECK(trunc.truncated);
  CHECK(tok.truncation_count() == 1);
  tok.encode("night work friend alone dark game fun talk walk rain", 6);
  CHECK(tok.truncation_count() == 2);

  auto empty = tok.encode("", 8);
  CHECK(empty.ids == std::vector<int>{vocab.cls_id, vocab.sep_id});
  CHECK_THROWS_AS(tok.encode("night", 1), contract_error);
}

// ---------------------------------------------------------------------------
// Network mechanics

TEST_CASE("analytic gradients match central finite differences", "[electra]") {
  TransformerConfig cfg;
  cfg.vocabulary_size = 24;
  cfg.embedding_size = 12;  // != hidden_size, so the projection path is on
  cfg.hidden_size = 16;
  cfg.num_hidden_layers = 2;
  cfg.num_attention_heads = 2;
  cfg.intermediate_size = 20;
  cfg.max_position_embeddings = 16;
  cfg.hidden_dropout = 0.0;
  cfg.attention_dropout = 0.0;
  cfg.summary_last_dropout = 0.0;

  ElectraNet<double> net(cfg);
  net.init_random(7);
  const std::vector<int> ids = {2, 5, 9, 17, 3, 11, 20};
  const int label = 1;

  net.zero_grad();
  ElectraNet<double>::Cache cache;
  net.loss_and_cache(ids, label, cache, nullptr);
  net.backward(cache, label);

  auto loss_at = [&]() {
    ElectraNet<double>::Cache c;
    return net.loss_and_cache(ids, label, c, nullptr);
  };

  std::mt19937_64 pick(99);
  size_t checked = 0;
  for (auto& p : net.params()) {
    for (int k = 0; k < 3; ++k) {
      long i = static_cast<long>(pick() % static_cast<uint64_t>(p.value.rows()));
      long j = static_cast<long>(pick() % static_cast<uint64_t>(p.value.cols()));
      const double saved = p.value(i, j), h = 1e-5;
      p.value(i, j) = saved + h;
      double up = loss_at();
      p.value(i, j) = saved - h;
      double down = loss_at();
      p.value(i, j) = saved;
      double numeric = (up - down) / (2 * h);
      INFO(p.name << "(" << i << "," << j << ")");
      CHECK_THAT(p.grad(i, j),
                 Catch::Matchers::WithinAbs(numeric, 1e-6 + 1e-5 * std::abs(numeric)));
      ++checked;
    }
  }
  CHECK(checked >= 100);  // every tensor got sampled
}

TEST_CASE("forward rejects out-of-contract sequences", "[electra]") {
  TransformerConfig bad;
  bad.hidden_size = 30;
  bad.num_attention_heads = 4;
  CHECK_THROWS_AS(bad.validate(), contract_error);

  TransformerConfig relu = toy_config();
  relu.hidden_activation = "relu";
  CHECK_THROWS_AS(ElectraNet<float>(relu), contract_error);

  ElectraNet<float> net(toy_config());
  net.init_random(1);
  CHECK_THROWS_AS(net.forward_logits({}, nullptr, nullptr), contract_error);
  CHECK_THROWS_AS(net.forward_logits({2, 99}, nullptr, nullptr), contract_error);
  CHECK_THROWS_AS(net.forward_logits(std::vector<int>(33, 2), nullptr, nullptr),
                  contract_error);
}

// ---------------------------------------------------------------------------
// Fine-tuning behaviour

TEST_CASE("zero-epoch fine-tune returns the checkpoint weights bitwise", "[electra]") {
  auto ckpt = scratch_dir("sentinel_electra_ckpt0");
  FinetuneConfig fcfg;
  fcfg.max_sequence_tokens = 16;
  auto fresh = ElectraModel::fresh(toy_config(), fcfg, WordpieceVocab::from_tokens(toy_tokens()),
                                   11);
  fresh.persist(ckpt.string());

  auto train = toy_corpus(8, 0.5, 3);
  auto val = toy_corpus(4, 0.5, 4);
  FinetuneConfig zero = fcfg;
  zero.epochs = 0;
  auto model = finetune_transformer(train, val, toy_config(), zero, ckpt.string());

  auto got = model.net().export_weights();
  auto want = ElectraModel::load(ckpt.string()).net().export_weights();
  REQUIRE(got.size() == want.size());
  for (const auto& [name, tensor] : got) {
    REQUIRE(want.count(name) == 1);
    CHECK(tensor.dims == want.at(name).dims);
    CHECK(tensor.f32 == want.at(name).f32);
  }
  CHECK(model.corpus_hash() == corpus_content_hash(train));
}

TEST_CASE("one epoch on a toy corpus beats the majority-class F1", "[electra]") {
  auto train = toy_corpus(800, 0.55, 20260815);
  auto val = toy_corpus(200, 0.55, 907);

  auto ckpt = scratch_dir("sentinel_electra_ckpt1");
  FinetuneConfig fcfg;
  fcfg.learning_rate = 3e-3;
  fcfg.batch_size = 16;
  fcfg.epochs = 1;
  fcfg.max_sequence_tokens = 16;
  ElectraModel::fresh(toy_config(), fcfg, WordpieceVocab::from_tokens(toy_tokens()), 11)
      .persist(ckpt.string());

  auto model = finetune_transformer(train, val, toy_config(), fcfg, ckpt.string());

  size_t val_pos = 0;
  for (const auto& r : val) val_pos += static_cast<size_t>(r.label == 1);
  double majority_f1 =
      2.0 * static_cast<double>(val_pos) / static_cast<double>(val_pos + val.size());
  double f1 = f1_via_predict(model, val);
  INFO("model F1 " << f1 << " vs majority " << majority_f1);
  CHECK(f1 > majority_f1);

  SECTION("same seed, same checkpoint, same result") {
    auto again = finetune_transformer(train, val, toy_config(), fcfg, ckpt.string());
    for (size_t i = 0; i < 20; ++i) {
      auto a = model.predict(val[i].cleaned, false);
      auto b = again.predict(val[i].cleaned, false);
      REQUIRE(a.has_value());
      REQUIRE(b.has_value());
      CHECK(a->raw_scores[0] == b->raw_scores[0]);
      CHECK(a->raw_scores[1] == b->raw_scores[1]);
    }
  }
}

TEST_CASE("fine-tune preconditions", "[electra]") {
  auto ckpt = scratch_dir("sentinel_electra_ckpt2");
  FinetuneConfig fcfg;
  fcfg.max_sequence_tokens = 16;
  fcfg.epochs = 1;
  ElectraModel::fresh(toy_config(), fcfg, WordpieceVocab::from_tokens(toy_tokens()), 11)
      .persist(ckpt.string());

  auto train = toy_corpus(20, 0.5, 5);
  auto val = toy_corpus(4, 0.5, 6);

  SECTION("missing checkpoint names the retrieval path") {
    CHECK_THROWS_WITH(
        finetune_transformer(train, val, toy_config(), fcfg, "/nonexistent/ckpt"),
        Catch::Matchers::ContainsSubstring("convert_hf_checkpoint.py") &&
            Catch::Matchers::ContainsSubstring(kDefaultCheckpointId));
    CHECK_THROWS_AS(finetune_transformer(train, val, toy_config(), fcfg, "/nonexistent/ckpt"),
                    env_error);
  }

  SECTION("single-class training set is rejected") {
    std::vector<ProcessedRecord> pos_only(train.begin(), train.end());
    for (auto& r : pos_only) r.label = 1;
    CHECK_THROWS_WITH(finetune_transformer(pos_only, val, toy_config(), fcfg, ckpt.string()),
                      Catch::Matchers::ContainsSubstring("non-suicidal (0)"));
    for (auto& r : pos_only) r.label = 0;
    CHECK_THROWS_WITH(finetune_transformer(pos_only, val, toy_config(), fcfg, ckpt.string()),
                      Catch::Matchers::ContainsSubstring("suicidal (1)"));
  }

  SECTION("empty validation set is rejected when training") {
    CHECK_THROWS_AS(finetune_transformer(train, {}, toy_config(), fcfg, ckpt.string()),
                    contract_error);
  }

  SECTION("architecture mismatch is rejected") {
    TransformerConfig other = toy_config();
    other.num_hidden_layers = 3;
    CHECK_THROWS_WITH(finetune_transformer(train, val, other, fcfg, ckpt.string()),
                      Catch::Matchers::ContainsSubstring("architecture"));
  }
}

// ---------------------------------------------------------------------------
// Classifier surface and persistence

TEST_CASE("electra predictions satisfy the probability contract", "[electra]") {
  FinetuneConfig fcfg;
  fcfg.max_sequence_tokens = 16;
  auto model = ElectraModel::fresh(toy_config(), fcfg,
                                   WordpieceVocab::from_tokens(toy_tokens()), 31);

  for (const std::string text : {"night walk alone die", "play game fun", "zzz qqq unseen"}) {
    auto p = model.predict(text, false);
    REQUIRE(p.has_value());
    CHECK(std::abs(p->raw_scores[0] + p->raw_scores[1] - 1.0) <= 1e-9);
    CHECK(p->label == (p->raw_scores[1] > p->raw_scores[0] ? 1 : 0));
    CHECK(p->confidence >= 0.5);
  }

  CHECK_FALSE(model.predict("", false).has_value());
  CHECK_FALSE(model.predict("   ", false).has_value());
  // full preprocessing reduces pure stopwords to nothing
  CHECK_FALSE(model.predict("the and of a", true).has_value());

  SECTION("long inputs are truncated and counted") {
    std::string lots;
    for (int i = 0; i < 40; ++i) lots += "night work friend ";
    CHECK(model.tokenizer().truncation_count() == 0);
    auto p = model.predict(lots, false);
    REQUIRE(p.has_value());
    CHECK(model.tokenizer().truncation_count() == 1);
  }
}

TEST_CASE("electra persist/load round-trips predictions exactly", "[electra]") {
  FinetuneConfig fcfg;
  fcfg.max_sequence_tokens = 16;
  auto model = ElectraModel::fresh(toy_config(), fcfg,
                                   WordpieceVocab::from_tokens(toy_tokens()), 47);
  model.set_corpus_hash("deadbeef");
  model.set_metrics({{"validation_f1", 0.5}});

  auto dir = scratch_dir("sentinel_electra_model");
  model.persist(dir.string());
  auto loaded = ElectraModel::load(dir.string());
  CHECK(loaded.corpus_hash() == "deadbeef");
  CHECK(loaded.kind() == "electra");
  CHECK(loaded.config().hidden_size == 32);
  CHECK(loaded.finetune_config().max_sequence_tokens == 16);

  auto texts = toy_corpus(20, 0.5, 77);
  for (const auto& r : texts) {
    auto a = model.predict(r.cleaned, false);
    auto b = loaded.predict(r.cleaned, false);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->raw_scores[0] == b->raw_scores[0]);
    CHECK(a->raw_scores[1] == b->raw_scores[1]);
    CHECK(a->label == b->label);
  }

  SECTION("corrupt manifests fail naming the offending field") {
    auto json = nlohmann::json::parse(read_file((dir / "manifest.json").string()));
    json["vocabulary_size"] = 9999;
    write_file((dir / "manifest.json").string(), json.dump(2));
    CHECK_THROWS_WITH(ElectraModel::load(dir.string()),
                      Catch::Matchers::ContainsSubstring("vocabulary_size"));

    json = nlohmann::json::parse(read_file((dir / "manifest.json").string()));
    json["vocabulary_size"] = 32;
    json["finetune"].erase("learning_rate");
    write_file((dir / "manifest.json").string(), json.dump(2));
    CHECK_THROWS_WITH(ElectraModel::load(dir.string()),
                      Catch::Matchers::ContainsSubstring("finetune.learning_rate"));

    write_file((dir / "manifest.json").string(), "not json at all");
    CHECK_THROWS_WITH(ElectraModel::load(dir.string()),
                      Catch::Matchers::ContainsSubstring("not valid json"));
  }

  SECTION("a truncated weights file is rejected") {
    auto blob = read_file((dir / "weights.bin").string());
    write_file((dir / "weights.bin").string(), blob.substr(0, blob.size() / 2));
    CHECK_THROWS_AS(ElectraModel::load(dir.string()), contract_error);
  }

  SECTION("loading from an empty directory fails") {
    auto empty = scratch_dir("sentinel_electra_empty");
    CHECK_THROWS_AS(ElectraModel::load(empty.string()), env_error);
  }
}

TEST_CASE("model store dispatches on manifest kind", "[electra]") {
  auto dir = scratch_dir("sentinel_store_electra");
  FinetuneConfig fcfg;
  fcfg.max_sequence_tokens = 16;
  ElectraModel::fresh(toy_config(), fcfg, WordpieceVocab::from_tokens(toy_tokens()), 3)
      .persist(dir.string());
  auto model = load_model(dir.string());
  CHECK(model->kind() == "electra");
  CHECK(model->predict("night walk die", false).has_value());

  auto bdir = scratch_dir("sentinel_store_baseline");
  auto corpus = toy_corpus(40, 0.5, 13);
  train_baseline(corpus, {1, 1, 1, 1.0, 1e-6, 200, 42}).persist(bdir.string());
  CHECK(load_model(bdir.string())->kind() == "baseline");

  auto udir = scratch_dir("sentinel_store_unknown");
  write_file((udir / "manifest.json").string(), "{\"kind\": \"frobnicator\"}");
  CHECK_THROWS_WITH(load_model(udir.string()),
                    Catch::Matchers::ContainsSubstring("unknown model kind"));
  CHECK_THROWS_AS(load_model("/nonexistent/model"), env_error);
}
