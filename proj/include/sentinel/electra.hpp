#pragma once

// Transformer encoder with a two-class head: embeddings -> N post-norm
// attention/FFN blocks -> CLS classification head. Forward and backward are
// hand-written per sequence and templated on the scalar so the gradient path
// can be verified against finite differences in double precision. Training
// is AdamW with linear warmup/decay, weight decay off biases and LayerNorm,
// and a best-on-validation-F1 weight snapshot.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "sentinel/common.hpp"
#include "sentinel/corpus.hpp"
#include "sentinel/model.hpp"
#include "sentinel/summarize.hpp"
#include "sentinel/weights_io.hpp"
#include "sentinel/wordpiece.hpp"

namespace sentinel {

namespace electra_detail {

// Explicit 53-bit mapping keeps the stream identical across standard
// libraries; distributions from <random> are implementation-defined.
inline double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

inline double normal(std::mt19937_64& rng) {
  double u1 = uniform01(rng), u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

template <typename Scalar>
Scalar gelu(Scalar x) {
  return Scalar(0.5) * x * (Scalar(1) + std::erf(x * Scalar(0.7071067811865475)));
}

template <typename Scalar>
Scalar gelu_grad(Scalar x) {
  Scalar cdf = Scalar(0.5) * (Scalar(1) + std::erf(x * Scalar(0.7071067811865475)));
  Scalar pdf = std::exp(Scalar(-0.5) * x * x) * Scalar(0.3989422804014327);
  return cdf + x * pdf;
}

}  // namespace electra_detail

template <typename Scalar>
struct Param {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  std::string name;
  Mat value, grad;
  bool decay = true;  // weight decay applies (off for biases and LayerNorm)

  Param(std::string n, long rows, long cols, bool dec)
      : name(std::move(n)), value(Mat::Zero(rows, cols)), grad(Mat::Zero(rows, cols)),
        decay(dec) {}
};

template <typename Scalar>
class ElectraNet {
public:
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Col = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

  explicit ElectraNet(TransformerConfig config) : cfg_(std::move(config)) {
    cfg_.validate();
    if (cfg_.hidden_activation != "gelu" || cfg_.summary_activation != "gelu")
      throw contract_error("only gelu activations are supported");
    long v = cfg_.vocabulary_size, e = cfg_.embedding_size, h = cfg_.hidden_size;
    long p = cfg_.max_position_embeddings, inter = cfg_.intermediate_size;

    params_.emplace_back("embeddings.word", v, e, true);
    params_.emplace_back("embeddings.position", p, e, true);
    params_.emplace_back("embeddings.token_type", 2, e, true);
    params_.emplace_back("embeddings.ln.gamma", 1, e, false);
    params_.emplace_back("embeddings.ln.beta", 1, e, false);
    if (e != h) {
      params_.emplace_back("embeddings.project.weight", e, h, true);
      params_.emplace_back("embeddings.project.bias", 1, h, false);
    }
    for (int l = 0; l < cfg_.num_hidden_layers; ++l) {
      std::string pre = "encoder." + std::to_string(l) + ".";
      for (const char* part : {"attn.query", "attn.key", "attn.value", "attn.output"}) {
        params_.emplace_back(pre + part + ".weight", h, h, true);
        params_.emplace_back(pre + part + ".bias", 1, h, false);
      }
      params_.emplace_back(pre + "ln1.gamma", 1, h, false);
      params_.emplace_back(pre + "ln1.beta", 1, h, false);
      params_.emplace_back(pre + "ffn.intermediate.weight", h, inter, true);
      params_.emplace_back(pre + "ffn.intermediate.bias", 1, inter, false);
      params_.emplace_back(pre + "ffn.output.weight", inter, h, true);
      params_.emplace_back(pre + "ffn.output.bias", 1, h, false);
      params_.emplace_back(pre + "ln2.gamma", 1, h, false);
      params_.emplace_back(pre + "ln2.beta", 1, h, false);
    }
    params_.emplace_back("head.dense.weight", h, h, true);
    params_.emplace_back("head.dense.bias", 1, h, false);
    params_.emplace_back("head.out_proj.weight", h, 2, true);
    params_.emplace_back("head.out_proj.bias", 1, 2, false);

    for (size_t i = 0; i < params_.size(); ++i) index_.emplace(params_[i].name, i);
    for (auto& p2 : params_)
      if (p2.name.find("ln") != std::string::npos && p2.name.ends_with("gamma"))
        p2.value.setOnes();
  }

  const TransformerConfig& config() const { return cfg_; }

  Param<Scalar>& param(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) throw contract_error("no parameter named '" + name + "'");
    return params_[it->second];
  }
  const Param<Scalar>& param(const std::string& name) const {
    return const_cast<ElectraNet*>(this)->param(name);
  }
  std::vector<Param<Scalar>>& params() { return params_; }
  const std::vector<Param<Scalar>>& params() const { return params_; }

  void zero_grad() {
    for (auto& p : params_) p.grad.setZero();
  }

  // Truncated-normal-free init: plain normal(0, 0.02), LayerNorm untouched.
  void init_random(uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (auto& p : params_) {
      if (p.name.find(".ln") != std::string::npos || p.name.ends_with(".bias")) continue;
      for (long i = 0; i < p.value.rows(); ++i)
        for (long j = 0; j < p.value.cols(); ++j)
          p.value(i, j) = static_cast<Scalar>(0.02 * electra_detail::normal(rng));
    }
  }

  // -------------------------------------------------------------------
  // Forward/backward. One sequence at a time; no padding, no mask.

  struct LayerNormCache {
    Mat xhat;
    Col inv_s;
  };

  struct LayerCache {
    Mat x, q, k, v;                 // inputs and projections
    std::vector<Mat> probs;         // per-head softmax rows (pre-dropout)
    std::vector<Mat> prob_mask;     // attention dropout factors (empty = off)
    Mat context;                    // concatenated head outputs
    Mat attn_mask, ffn_mask;        // hidden dropout factors
    Mat n1, y1, g;                  // post-LN1, FFN pre-activation, gelu output
    LayerNormCache ln1, ln2;
  };

  struct Cache {
    std::vector<int> ids;
    Mat emb_sum;
    LayerNormCache emb_ln;
    Mat emb_mask;
    Mat proj_in;                    // projection input (post-dropout, E != H only)
    std::vector<LayerCache> layers;
    Mat final_hidden;
    RowVec cls_in, head_pre;        // dense input (post-dropout) and pre-activation
    RowVec head_act;                // out_proj input (post-dropout gelu output)
    Mat head_mask0, head_mask1;
    RowVec probs;                   // softmax over logits
  };

  // rng == nullptr runs in eval mode (no dropout).
  RowVec forward_logits(const std::vector<int>& ids, Cache* cache,
                        std::mt19937_64* rng) const {
    const long t = static_cast<long>(ids.size());
    if (t == 0) throw contract_error("forward requires at least one token");
    if (t > cfg_.max_position_embeddings)
      throw contract_error("sequence length exceeds max_position_embeddings");
    for (int id : ids)
      if (id < 0 || id >= cfg_.vocabulary_size)
        throw contract_error("token id out of vocabulary range: " + std::to_string(id));

    const auto& word = param("embeddings.word").value;
    const auto& pos = param("embeddings.position").value;
    const auto& type = param("embeddings.token_type").value;

    Mat x(t, cfg_.embedding_size);
    for (long i = 0; i < t; ++i)
      x.row(i) = word.row(ids[i]) + pos.row(i) + type.row(0);
    if (cache) {
      cache->ids = ids;
      cache->emb_sum = x;
    }
    x = layer_norm(x, "embeddings.ln", cache ? &cache->emb_ln : nullptr);
    x = dropout(std::move(x), cfg_.hidden_dropout, rng, cache ? &cache->emb_mask : nullptr);
    if (cfg_.embedding_size != cfg_.hidden_size) {
      if (cache) cache->proj_in = x;
      x = dense(x, "embeddings.project");
    }

    if (cache) cache->layers.resize(static_cast<size_t>(cfg_.num_hidden_layers));
    for (int l = 0; l < cfg_.num_hidden_layers; ++l)
      x = layer_forward(std::move(x), l, cache ? &cache->layers[static_cast<size_t>(l)] : nullptr,
                        rng);
    if (cache) cache->final_hidden = x;

    RowVec cls = x.row(0);
    Mat cls_m = dropout(Mat(cls), cfg_.summary_last_dropout, rng,
                        cache ? &cache->head_mask0 : nullptr);
    if (cache) cache->cls_in = cls_m.row(0);
    RowVec pre = dense(cls_m, "head.dense").row(0);
    if (cache) cache->head_pre = pre;
    RowVec act = pre.unaryExpr([](Scalar s) { return electra_detail::gelu(s); });
    Mat act_m = dropout(Mat(act), cfg_.summary_last_dropout, rng,
                        cache ? &cache->head_mask1 : nullptr);
    if (cache) cache->head_act = act_m.row(0);
    return dense(act_m, "head.out_proj").row(0);
  }

  // Cross-entropy against the gold label; fills cache->probs.
  Scalar loss_and_cache(const std::vector<int>& ids, int label, Cache& cache,
                        std::mt19937_64* rng) const {
    RowVec logits = forward_logits(ids, &cache, rng);
    Scalar mx = logits.maxCoeff();
    RowVec ex = (logits.array() - mx).exp().matrix();
    cache.probs = ex / ex.sum();
    return -std::log(std::max(cache.probs(label), Scalar(1e-30)));
  }

  // Accumulates parameter gradients for one cached sequence.
  void backward(const Cache& cache, int label) {
    RowVec dlogits = cache.probs;
    dlogits(label) -= Scalar(1);

    Mat dact_m = dense_backward(Mat(cache.head_act), Mat(dlogits), "head.out_proj");
    dact_m = dropout_backward(std::move(dact_m), cache.head_mask1);
    RowVec dpre = dact_m.row(0).cwiseProduct(
        cache.head_pre.unaryExpr([](Scalar s) { return electra_detail::gelu_grad(s); }));
    Mat dcls_m = dense_backward(Mat(cache.cls_in), Mat(dpre), "head.dense");
    dcls_m = dropout_backward(std::move(dcls_m), cache.head_mask0);

    Mat dx = Mat::Zero(cache.final_hidden.rows(), cache.final_hidden.cols());
    dx.row(0) = dcls_m.row(0);

    for (int l = cfg_.num_hidden_layers - 1; l >= 0; --l)
      dx = layer_backward(std::move(dx), l, cache.layers[static_cast<size_t>(l)]);

    if (cfg_.embedding_size != cfg_.hidden_size)
      dx = dense_backward(cache.proj_in, std::move(dx), "embeddings.project");
    dx = dropout_backward(std::move(dx), cache.emb_mask);
    dx = layer_norm_backward(std::move(dx), "embeddings.ln", cache.emb_ln);

    auto& word = param("embeddings.word");
    auto& pos = param("embeddings.position");
    auto& type = param("embeddings.token_type");
    for (long i = 0; i < dx.rows(); ++i) {
      word.grad.row(cache.ids[static_cast<size_t>(i)]) += dx.row(i);
      pos.grad.row(i) += dx.row(i);
      type.grad.row(0) += dx.row(i);
    }
  }

  // -------------------------------------------------------------------
  // Weights interchange (always float32 on disk).

  WeightsMap export_weights() const {
    WeightsMap out;
    for (const auto& p : params_) {
      Tensor t;
      t.dims = {static_cast<uint64_t>(p.value.rows()), static_cast<uint64_t>(p.value.cols())};
      t.f32.reserve(static_cast<size_t>(p.value.size()));
      for (long i = 0; i < p.value.rows(); ++i)
        for (long j = 0; j < p.value.cols(); ++j)
          t.f32.push_back(static_cast<float>(p.value(i, j)));
      out.emplace(p.name, std::move(t));
    }
    return out;
  }

  void import_weights(const WeightsMap& weights) {
    for (auto& p : params_) {
      auto it = weights.find(p.name);
      if (it == weights.end())
        throw contract_error("weights file missing tensor '" + p.name + "'");
      const Tensor& t = it->second;
      if (t.dims.size() != 2 || static_cast<long>(t.dims[0]) != p.value.rows() ||
          static_cast<long>(t.dims[1]) != p.value.cols())
        throw contract_error("tensor '" + p.name + "' has mismatched shape");
      const size_t n = static_cast<size_t>(p.value.size());
      if (t.f32.size() == n) {
        size_t k = 0;
        for (long i = 0; i < p.value.rows(); ++i)
          for (long j = 0; j < p.value.cols(); ++j) p.value(i, j) = Scalar(t.f32[k++]);
      } else if (t.f64.size() == n) {
        size_t k = 0;
        for (long i = 0; i < p.value.rows(); ++i)
          for (long j = 0; j < p.value.cols(); ++j) p.value(i, j) = Scalar(t.f64[k++]);
      } else {
        throw contract_error("tensor '" + p.name + "' has mismatched payload");
      }
    }
  }

private:
  Mat dense(const Mat& x, const std::string& prefix) const {
    const auto& w = param(prefix + ".weight").value;
    const auto& b = param(prefix + ".bias").value;
    Mat y = x * w;
    y.rowwise() += b.row(0);
    return y;
  }

  Mat dense_backward(const Mat& x, const Mat& dy, const std::string& prefix) {
    auto& w = param(prefix + ".weight");
    auto& b = param(prefix + ".bias");
    w.grad += x.transpose() * dy;
    b.grad.row(0) += dy.colwise().sum();
    return dy * w.value.transpose();
  }

  Mat layer_norm(const Mat& x, const std::string& prefix, LayerNormCache* cache) const {
    const Scalar eps = Scalar(1e-12);
    Col mu = x.rowwise().mean();
    Mat xc = x.colwise() - mu;
    Col var = xc.array().square().rowwise().mean().matrix();
    Col inv_s = (var.array() + eps).rsqrt().matrix();
    Mat xhat = (xc.array().colwise() * inv_s.array()).matrix();
    const auto& gamma = param(prefix + ".gamma").value;
    const auto& beta = param(prefix + ".beta").value;
    Mat y = xhat;
    for (long j = 0; j < y.cols(); ++j)
      y.col(j) = xhat.col(j) * gamma(0, j) + Col::Constant(y.rows(), beta(0, j));
    if (cache) {
      cache->xhat = std::move(xhat);
      cache->inv_s = std::move(inv_s);
    }
    return y;
  }

  Mat layer_norm_backward(const Mat& dy, const std::string& prefix,
                          const LayerNormCache& cache) {
    auto& gamma = param(prefix + ".gamma");
    auto& beta = param(prefix + ".beta");
    gamma.grad.row(0) += (dy.array() * cache.xhat.array()).colwise().sum().matrix();
    beta.grad.row(0) += dy.colwise().sum();

    Mat g = dy;
    for (long j = 0; j < g.cols(); ++j) g.col(j) *= gamma.value(0, j);
    Col mg = g.rowwise().mean();
    Col mgx = (g.array() * cache.xhat.array()).rowwise().mean().matrix();
    Mat dx = g;
    dx.colwise() -= mg;
    dx.array() -= cache.xhat.array().colwise() * mgx.array();
    dx.array().colwise() *= cache.inv_s.array();
    return dx;
  }

  // Returns x scaled by kept-mask when training; identity (empty mask) when
  // rng is null or the rate is zero.
  Mat dropout(Mat x, double rate, std::mt19937_64* rng, Mat* mask_out) const {
    if (!rng || rate <= 0.0) {
      if (mask_out) mask_out->resize(0, 0);
      return x;
    }
    Scalar scale = Scalar(1.0 / (1.0 - rate));
    Mat mask(x.rows(), x.cols());
    for (long i = 0; i < x.rows(); ++i)
      for (long j = 0; j < x.cols(); ++j)
        mask(i, j) = electra_detail::uniform01(*rng) < rate ? Scalar(0) : scale;
    x = x.cwiseProduct(mask);
    if (mask_out) *mask_out = std::move(mask);
    else throw contract_error("training dropout requires a cache");
    return x;
  }

  static Mat dropout_backward(Mat dy, const Mat& mask) {
    if (mask.size() == 0) return dy;
    return dy.cwiseProduct(mask);
  }

  static void softmax_rows(Mat& m) {
    for (long i = 0; i < m.rows(); ++i) {
      Scalar mx = m.row(i).maxCoeff();
      m.row(i) = (m.row(i).array() - mx).exp().matrix();
      m.row(i) /= m.row(i).sum();
    }
  }

  Mat layer_forward(Mat x, int layer, LayerCache* cache, std::mt19937_64* rng) const {
    std::string pre = "encoder." + std::to_string(layer) + ".";
    const int heads = cfg_.num_attention_heads;
    const long dk = cfg_.hidden_size / heads;
    const Scalar inv_sqrt_dk = Scalar(1.0 / std::sqrt(static_cast<double>(dk)));

    Mat q = dense(x, pre + "attn.query");
    Mat k = dense(x, pre + "attn.key");
    Mat v = dense(x, pre + "attn.value");

    Mat context(x.rows(), cfg_.hidden_size);
    if (cache) {
      cache->x = x;
      cache->q = q;
      cache->k = k;
      cache->v = v;
      cache->probs.resize(static_cast<size_t>(heads));
      cache->prob_mask.resize(static_cast<size_t>(heads));
    }
    for (int h = 0; h < heads; ++h) {
      auto qh = q.middleCols(h * dk, dk);
      auto kh = k.middleCols(h * dk, dk);
      auto vh = v.middleCols(h * dk, dk);
      Mat scores = qh * kh.transpose() * inv_sqrt_dk;
      softmax_rows(scores);
      Mat probs = scores;
      Mat* mask_slot = cache ? &cache->prob_mask[static_cast<size_t>(h)] : nullptr;
      scores = dropout(std::move(scores), cfg_.attention_dropout, rng, mask_slot);
      context.middleCols(h * dk, dk) = scores * vh;
      if (cache) cache->probs[static_cast<size_t>(h)] = std::move(probs);
    }
    if (cache) cache->context = context;

    Mat attn_out = dense(context, pre + "attn.output");
    attn_out = dropout(std::move(attn_out), cfg_.hidden_dropout, rng,
                       cache ? &cache->attn_mask : nullptr);
    Mat n1 = layer_norm(x + attn_out, pre + "ln1", cache ? &cache->ln1 : nullptr);
    if (cache) cache->n1 = n1;

    Mat y1 = dense(n1, pre + "ffn.intermediate");
    if (cache) cache->y1 = y1;
    Mat g = y1.unaryExpr([](Scalar s) { return electra_detail::gelu(s); });
    if (cache) cache->g = g;
    Mat f = dense(g, pre + "ffn.output");
    f = dropout(std::move(f), cfg_.hidden_dropout, rng, cache ? &cache->ffn_mask : nullptr);
    return layer_norm(n1 + f, pre + "ln2", cache ? &cache->ln2 : nullptr);
  }

  Mat layer_backward(Mat dout, int layer, const LayerCache& cache) {
    std::string pre = "encoder." + std::to_string(layer) + ".";
    const int heads = cfg_.num_attention_heads;
    const long dk = cfg_.hidden_size / heads;
    const Scalar inv_sqrt_dk = Scalar(1.0 / std::sqrt(static_cast<double>(dk)));

    Mat dr2 = layer_norm_backward(std::move(dout), pre + "ln2", cache.ln2);
    Mat df = dropout_backward(dr2, cache.ffn_mask);
    Mat dg = dense_backward(cache.g, df, pre + "ffn.output");
    Mat dy1 = dg.cwiseProduct(
        cache.y1.unaryExpr([](Scalar s) { return electra_detail::gelu_grad(s); }));
    Mat dn1 = dr2 + dense_backward(cache.n1, dy1, pre + "ffn.intermediate");

    Mat dr1 = layer_norm_backward(std::move(dn1), pre + "ln1", cache.ln1);
    Mat dattn = dropout_backward(dr1, cache.attn_mask);
    Mat dcontext = dense_backward(cache.context, dattn, pre + "attn.output");

    Mat dq(cache.q.rows(), cache.q.cols()), dk_m(cache.k.rows(), cache.k.cols()),
        dv(cache.v.rows(), cache.v.cols());
    for (int h = 0; h < heads; ++h) {
      auto qh = cache.q.middleCols(h * dk, dk);
      auto kh = cache.k.middleCols(h * dk, dk);
      auto vh = cache.v.middleCols(h * dk, dk);
      const Mat& probs = cache.probs[static_cast<size_t>(h)];
      const Mat& mask = cache.prob_mask[static_cast<size_t>(h)];

      Mat dch = dcontext.middleCols(h * dk, dk);
      Mat dropped = mask.size() ? Mat(probs.cwiseProduct(mask)) : probs;
      dv.middleCols(h * dk, dk) = dropped.transpose() * dch;
      Mat dprobs_dropped = dch * vh.transpose();
      Mat dprobs = dropout_backward(std::move(dprobs_dropped), mask);

      // softmax backward per row
      Mat dscores(probs.rows(), probs.cols());
      for (long r = 0; r < probs.rows(); ++r) {
        Scalar dot = dprobs.row(r).dot(probs.row(r));
        dscores.row(r) =
            probs.row(r).cwiseProduct((dprobs.row(r).array() - dot).matrix());
      }
      dscores *= inv_sqrt_dk;
      dq.middleCols(h * dk, dk) = dscores * kh;
      dk_m.middleCols(h * dk, dk) = dscores.transpose() * qh;
    }

    Mat dx = dr1;
    dx += dense_backward(cache.x, dq, pre + "attn.query");
    dx += dense_backward(cache.x, dk_m, pre + "attn.key");
    dx += dense_backward(cache.x, dv, pre + "attn.value");
    return dx;
  }

  TransformerConfig cfg_;
  std::vector<Param<Scalar>> params_;
  std::map<std::string, size_t> index_;
};

// ---------------------------------------------------------------------------
// AdamW with a linear warmup/decay schedule.

template <typename Scalar>
class AdamW {
public:
  AdamW(ElectraNet<Scalar>& net, double learning_rate, double weight_decay, long total_steps,
        double warmup_fraction)
      : net_(net), lr_(learning_rate), wd_(weight_decay), total_steps_(std::max(total_steps, 1L)),
        warmup_steps_(static_cast<long>(warmup_fraction * static_cast<double>(total_steps))) {
    for (auto& p : net_.params()) {
      m_.emplace_back(p.value.rows(), p.value.cols());
      v_.emplace_back(p.value.rows(), p.value.cols());
      m_.back().setZero();
      v_.back().setZero();
    }
  }

  double scheduled_lr() const {
    double s = static_cast<double>(step_);
    if (warmup_steps_ > 0 && step_ < warmup_steps_)
      return lr_ * (s + 1.0) / static_cast<double>(warmup_steps_);
    double rest = static_cast<double>(total_steps_ - warmup_steps_);
    if (rest <= 0) return lr_;
    return lr_ * std::max(0.0, static_cast<double>(total_steps_ - step_) / rest);
  }

  void step() {
    const double b1 = 0.9, b2 = 0.999, eps = 1e-8;
    const double lr = scheduled_lr();
    ++step_;
    const double bc1 = 1.0 - std::pow(b1, static_cast<double>(step_));
    const double bc2 = 1.0 - std::pow(b2, static_cast<double>(step_));
    auto& params = net_.params();
    for (size_t i = 0; i < params.size(); ++i) {
      auto& p = params[i];
      m_[i] = Scalar(b1) * m_[i] + Scalar(1 - b1) * p.grad;
      v_[i] = Scalar(b2) * v_[i] + Scalar(1 - b2) * p.grad.cwiseProduct(p.grad);
      auto mhat = (m_[i] / Scalar(bc1)).array();
      auto vhat = (v_[i] / Scalar(bc2)).array();
      p.value.array() -= Scalar(lr) * (mhat / (vhat.sqrt() + Scalar(eps)));
      if (p.decay && wd_ > 0) p.value.array() -= Scalar(lr * wd_) * p.value.array();
    }
  }

private:
  ElectraNet<Scalar>& net_;
  double lr_, wd_;
  long total_steps_, warmup_steps_;
  long step_ = 0;
  std::vector<typename ElectraNet<Scalar>::Mat> m_, v_;
};

// ---------------------------------------------------------------------------
// Classifier wrapper: float net + subword tokenizer + directory persistence.

class ElectraModel final : public Classifier {
public:
  // Random initialization -- the starting point for toy checkpoints in tests;
  // real deployments load converted published weights instead.
  static ElectraModel fresh(const TransformerConfig& tcfg, FinetuneConfig fcfg,
                            WordpieceVocab vocab, uint64_t init_seed) {
    fcfg.validate(tcfg);
    if (vocab.size() != static_cast<size_t>(tcfg.vocabulary_size))
      throw contract_error("vocabulary_size (" + std::to_string(tcfg.vocabulary_size) +
                           ") does not match the subword vocabulary (" +
                           std::to_string(vocab.size()) + " tokens)");
    ElectraModel m;
    m.net_ = std::make_unique<ElectraNet<float>>(tcfg);
    m.net_->init_random(init_seed);
    m.tokenizer_ = std::make_unique<WordpieceTokenizer>(std::move(vocab));
    m.fcfg_ = fcfg;
    return m;
  }

  std::optional<Prediction> predict(const std::string& text, bool preprocess) const override {
    std::string cleaned = preprocess ? preprocess_for_prediction(text) : text;
    if (trim(cleaned).empty()) return std::nullopt;
    EncodedSequence enc = tokenizer_->encode(cleaned, fcfg_.max_sequence_tokens);
    auto logits = net_->forward_logits(enc.ids, nullptr, nullptr);
    double p1 = 1.0 / (1.0 + std::exp(static_cast<double>(logits(0)) -
                                      static_cast<double>(logits(1))));
    return make_prediction(1.0 - p1, p1);
  }

  std::string kind() const override { return "electra"; }

  std::string version() const override {
    return kind() + ":" + (corpus_hash_.empty() ? "unversioned" : corpus_hash_.substr(0, 12));
  }

  void set_metrics(std::map<std::string, double> metrics) { metrics_ = std::move(metrics); }
  void set_corpus_hash(std::string hash) { corpus_hash_ = std::move(hash); }

  void persist(const std::string& dir) const override {
    const TransformerConfig& t = net_->config();
    nlohmann::ordered_json m;
    m["kind"] = kind();
    m["version"] = 1;
    m["config"] = {{"vocabulary_size", t.vocabulary_size},
                   {"embedding_size", t.embedding_size},
                   {"hidden_size", t.hidden_size},
                   {"num_hidden_layers", t.num_hidden_layers},
                   {"num_attention_heads", t.num_attention_heads},
                   {"intermediate_size", t.intermediate_size},
                   {"max_position_embeddings", t.max_position_embeddings},
                   {"hidden_activation", t.hidden_activation},
                   {"hidden_dropout", t.hidden_dropout},
                   {"attention_dropout", t.attention_dropout},
                   {"summary_activation", t.summary_activation},
                   {"summary_last_dropout", t.summary_last_dropout}};
    m["finetune"] = {{"learning_rate", fcfg_.learning_rate},
                     {"batch_size", fcfg_.batch_size},
                     {"epochs", fcfg_.epochs},
                     {"weight_decay", fcfg_.weight_decay},
                     {"warmup_fraction", fcfg_.warmup_fraction},
                     {"max_sequence_tokens", fcfg_.max_sequence_tokens},
                     {"seed", fcfg_.seed}};
    m["vocabulary_size"] = tokenizer_->vocab().size();
    m["corpus_hash"] = corpus_hash_;
    m["metrics"] = metrics_;
    m["created_at"] = utc_timestamp();
    write_file(dir + "/manifest.json", m.dump(2) + "\n");

    std::string vocab;
    for (const auto& tok : tokenizer_->vocab().tokens) {
      vocab += tok;
      vocab += '\n';
    }
    write_file(dir + "/vocab.txt", vocab);
    write_weights(dir + "/weights.bin", net_->export_weights());
  }

  static ElectraModel load(const std::string& dir) {
    nlohmann::json m;
    try {
      m = nlohmann::json::parse(read_file(dir + "/manifest.json"));
    } catch (const nlohmann::json::exception& e) {
      throw contract_error("model manifest is not valid json: " + std::string(e.what()));
    }
    auto need = [&](const char* field) -> const nlohmann::json& {
      if (!m.contains(field))
        throw contract_error(std::string("model manifest missing field '") + field + "'");
      return m[field];
    };
    if (need("kind").get<std::string>() != "electra")
      throw contract_error("model manifest field 'kind' is not 'electra'");
    if (need("version").get<int>() != 1)
      throw contract_error("model manifest field 'version' unsupported: " +
                           m["version"].dump());

    const auto& cfg = need("config");
    auto cfg_get = [&](const char* field, auto def) {
      if (!cfg.contains(field))
        throw contract_error(std::string("model manifest missing field 'config.") + field + "'");
      return cfg[field].get<decltype(def)>();
    };
    TransformerConfig t;
    t.vocabulary_size = cfg_get("vocabulary_size", int{});
    t.embedding_size = cfg_get("embedding_size", int{});
    t.hidden_size = cfg_get("hidden_size", int{});
    t.num_hidden_layers = cfg_get("num_hidden_layers", int{});
    t.num_attention_heads = cfg_get("num_attention_heads", int{});
    t.intermediate_size = cfg_get("intermediate_size", int{});
    t.max_position_embeddings = cfg_get("max_position_embeddings", int{});
    t.hidden_activation = cfg_get("hidden_activation", std::string{});
    t.hidden_dropout = cfg_get("hidden_dropout", double{});
    t.attention_dropout = cfg_get("attention_dropout", double{});
    t.summary_activation = cfg_get("summary_activation", std::string{});
    t.summary_last_dropout = cfg_get("summary_last_dropout", double{});

    const auto& fin = need("finetune");
    auto fin_get = [&](const char* field, auto def) {
      if (!fin.contains(field))
        throw contract_error(std::string("model manifest missing field 'finetune.") + field +
                             "'");
      return fin[field].get<decltype(def)>();
    };
    FinetuneConfig f;
    f.learning_rate = fin_get("learning_rate", double{});
    f.batch_size = fin_get("batch_size", int{});
    f.epochs = fin_get("epochs", int{});
    f.weight_decay = fin_get("weight_decay", double{});
    f.warmup_fraction = fin_get("warmup_fraction", double{});
    f.max_sequence_tokens = fin_get("max_sequence_tokens", int{});
    f.seed = fin_get("seed", uint64_t{});
    f.validate(t);

    WordpieceVocab vocab = WordpieceVocab::load(dir + "/vocab.txt");
    size_t expected = need("vocabulary_size").get<size_t>();
    if (vocab.size() != expected || static_cast<size_t>(t.vocabulary_size) != expected)
      throw contract_error("model manifest field 'vocabulary_size' (" + std::to_string(expected) +
                           ") does not match artifact contents");

    ElectraModel model;
    model.net_ = std::make_unique<ElectraNet<float>>(t);
    model.net_->import_weights(read_weights(dir + "/weights.bin"));
    model.tokenizer_ = std::make_unique<WordpieceTokenizer>(std::move(vocab));
    model.fcfg_ = f;
    model.corpus_hash_ = need("corpus_hash").get<std::string>();
    return model;
  }

  ElectraNet<float>& net() { return *net_; }
  const ElectraNet<float>& net() const { return *net_; }
  const WordpieceTokenizer& tokenizer() const { return *tokenizer_; }
  const TransformerConfig& config() const { return net_->config(); }
  const FinetuneConfig& finetune_config() const { return fcfg_; }
  const std::string& corpus_hash() const { return corpus_hash_; }

private:
  ElectraModel() = default;

  std::unique_ptr<ElectraNet<float>> net_;
  std::unique_ptr<WordpieceTokenizer> tokenizer_;
  FinetuneConfig fcfg_;
  std::string corpus_hash_;
  std::map<std::string, double> metrics_;
};

// ---------------------------------------------------------------------------
// Fine-tuning: start from a persisted checkpoint, run AdamW over shuffled
// mini-batches, snapshot weights whenever validation F1 improves, and return
// the best snapshot. epochs = 0 returns the checkpoint weights untouched.

inline ElectraModel finetune_transformer(const std::vector<ProcessedRecord>& train,
                                         const std::vector<ProcessedRecord>& validation,
                                         const TransformerConfig& tcfg, FinetuneConfig fcfg,
                                         const std::string& checkpoint_dir) {
  fcfg.validate(tcfg);
  if (!file_exists(checkpoint_dir + "/manifest.json"))
    throw env_error("checkpoint not found at '" + checkpoint_dir +
                    "'; fetch the published weights first, e.g.\n  python3 "
                    "tools/convert_hf_checkpoint.py --id " +
                    std::string(kDefaultCheckpointId) + " --out " + checkpoint_dir);
  ElectraModel model = ElectraModel::load(checkpoint_dir);
  {
    const TransformerConfig& c = model.config();
    if (c.vocabulary_size != tcfg.vocabulary_size || c.embedding_size != tcfg.embedding_size ||
        c.hidden_size != tcfg.hidden_size || c.num_hidden_layers != tcfg.num_hidden_layers ||
        c.num_attention_heads != tcfg.num_attention_heads ||
        c.intermediate_size != tcfg.intermediate_size ||
        c.max_position_embeddings != tcfg.max_position_embeddings)
      throw contract_error("checkpoint architecture does not match the requested config");
  }
  model.set_corpus_hash(corpus_content_hash(train));
  if (fcfg.epochs == 0) return model;

  if (train.empty()) throw contract_error("fine-tuning requires a non-empty training set");
  if (validation.empty())
    throw contract_error("fine-tuning requires a non-empty validation set");
  size_t pos = 0;
  for (const auto& r : train) pos += static_cast<size_t>(r.label == 1);
  if (pos == 0) throw contract_error("training set lacks class suicidal (1)");
  if (pos == train.size()) throw contract_error("training set lacks class non-suicidal (0)");

  ElectraNet<float>& net = model.net();
  const WordpieceTokenizer& tok = model.tokenizer();
  auto encode_all = [&](const std::vector<ProcessedRecord>& recs) {
    std::vector<std::vector<int>> out;
    out.reserve(recs.size());
    for (const auto& r : recs) out.push_back(tok.encode(r.cleaned, fcfg.max_sequence_tokens).ids);
    return out;
  };
  std::vector<std::vector<int>> train_ids = encode_all(train);
  std::vector<std::vector<int>> val_ids = encode_all(validation);

  const long steps_per_epoch =
      static_cast<long>((train.size() + static_cast<size_t>(fcfg.batch_size) - 1) /
                        static_cast<size_t>(fcfg.batch_size));
  AdamW<float> adam(net, fcfg.learning_rate, fcfg.weight_decay,
                    steps_per_epoch * fcfg.epochs, fcfg.warmup_fraction);
  std::mt19937_64 dropout_rng(fcfg.seed * 0x9e3779b97f4a7c15ULL + 1);

  auto validation_f1 = [&]() {
    long tp = 0, fp = 0, fn = 0;
    for (size_t i = 0; i < val_ids.size(); ++i) {
      auto logits = net.forward_logits(val_ids[i], nullptr, nullptr);
      int pred = logits(1) > logits(0) ? 1 : 0;
      int gold = validation[i].label;
      tp += static_cast<long>(pred == 1 && gold == 1);
      fp += static_cast<long>(pred == 1 && gold == 0);
      fn += static_cast<long>(pred == 0 && gold == 1);
    }
    double denom = static_cast<double>(2 * tp + fp + fn);
    return denom > 0 ? 2.0 * static_cast<double>(tp) / denom : 0.0;
  };

  double best_f1 = -1.0;
  std::vector<ElectraNet<float>::Mat> best_weights;
  std::vector<size_t> order(train.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (int epoch = 0; epoch < fcfg.epochs; ++epoch) {
    std::mt19937_64 order_rng(fcfg.seed + static_cast<uint64_t>(epoch));
    corpus_detail::deterministic_shuffle(order, order_rng);
    for (size_t start = 0; start < order.size(); start += static_cast<size_t>(fcfg.batch_size)) {
      size_t stop = std::min(order.size(), start + static_cast<size_t>(fcfg.batch_size));
      net.zero_grad();
      for (size_t i = start; i < stop; ++i) {
        ElectraNet<float>::Cache cache;
        net.loss_and_cache(train_ids[order[i]], train[order[i]].label, cache, &dropout_rng);
        net.backward(cache, train[order[i]].label);
      }
      float inv = 1.0f / static_cast<float>(stop - start);
      for (auto& p : net.params()) p.grad *= inv;
      adam.step();
    }
    double f1 = validation_f1();
    if (f1 > best_f1) {
      best_f1 = f1;
      best_weights.clear();
      for (const auto& p : net.params()) best_weights.push_back(p.value);
    }
  }
  if (!best_weights.empty())
    for (size_t i = 0; i < best_weights.size(); ++i)
      net.params()[i].value = std::move(best_weights[i]);
  model.set_metrics({{"validation_f1", best_f1}});
  return model;
}

}  // namespace sentinel
