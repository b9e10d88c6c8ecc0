#pragma once

// WordPiece subword tokenization against a checkpoint vocabulary: greedy
// longest-prefix matching with "##" continuation pieces and the four special
// tokens. Sequences beyond the model's token budget are truncated silently;
// the tokenizer keeps a running count so callers can log it.

#include <atomic>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "sentinel/common.hpp"

namespace sentinel {

struct WordpieceVocab {
  std::vector<std::string> tokens;
  std::unordered_map<std::string, int> index;
  int cls_id = -1, sep_id = -1, unk_id = -1, pad_id = -1;

  static WordpieceVocab from_tokens(std::vector<std::string> toks) {
    WordpieceVocab v;
    v.tokens = std::move(toks);
    for (size_t i = 0; i < v.tokens.size(); ++i) {
      if (!v.index.emplace(v.tokens[i], static_cast<int>(i)).second)
        throw contract_error("subword vocabulary has duplicate token '" + v.tokens[i] + "'");
    }
    auto special = [&](const char* name) {
      auto it = v.index.find(name);
      if (it == v.index.end())
        throw contract_error(std::string("subword vocabulary lacks special token ") + name);
      return it->second;
    };
    v.pad_id = special("[PAD]");
    v.unk_id = special("[UNK]");
    v.cls_id = special("[CLS]");
    v.sep_id = special("[SEP]");
    return v;
  }

  static WordpieceVocab load(const std::string& path) {
    std::vector<std::string> toks;
    for (const auto& line : split(read_file(path), '\n'))
      if (!line.empty()) toks.push_back(line);
    if (toks.empty()) throw contract_error("subword vocabulary is empty: " + path);
    return from_tokens(std::move(toks));
  }

  size_t size() const { return tokens.size(); }
};

struct EncodedSequence {
  std::vector<int> ids;  // [CLS] pieces... [SEP]
  bool truncated = false;
};

class WordpieceTokenizer {
public:
  explicit WordpieceTokenizer(WordpieceVocab vocab, int max_word_chars = 100)
      : vocab_(std::move(vocab)), max_word_chars_(max_word_chars) {}

  // Greedy longest match; a word with no matchable prefix maps to [UNK].
  std::vector<int> tokenize_word(const std::string& word) const {
    if (word.size() > static_cast<size_t>(max_word_chars_)) return {vocab_.unk_id};
    std::vector<int> out;
    size_t start = 0;
    while (start < word.size()) {
      size_t end = word.size();
      int found = -1;
      while (end > start) {
        std::string piece = (start == 0 ? "" : "##") + word.substr(start, end - start);
        auto it = vocab_.index.find(piece);
        if (it != vocab_.index.end()) {
          found = it->second;
          break;
        }
        --end;
      }
      if (found < 0) return {vocab_.unk_id};
      out.push_back(found);
      start = end;
    }
    return out;
  }

  EncodedSequence encode(const std::string& text, int max_tokens) const {
    if (max_tokens < 2) throw contract_error("encode needs room for [CLS] and [SEP]");
    EncodedSequence seq;
    seq.ids.push_back(vocab_.cls_id);
    for (const auto& word : split_ws(text)) {
      if (seq.ids.size() >= static_cast<size_t>(max_tokens - 1)) {
        seq.truncated = true;
        break;
      }
      for (int id : tokenize_word(word)) {
        if (seq.ids.size() >= static_cast<size_t>(max_tokens - 1)) {
          seq.truncated = true;
          break;
        }
        seq.ids.push_back(id);
      }
    }
    seq.ids.push_back(vocab_.sep_id);
    if (seq.truncated) ++truncations_;
    return seq;
  }

  const WordpieceVocab& vocab() const { return vocab_; }
  uint64_t truncation_count() const { return truncations_.load(); }

private:
  WordpieceVocab vocab_;
  int max_word_chars_;
  mutable std::atomic<uint64_t> truncations_{0};
};

}  // namespace sentinel
