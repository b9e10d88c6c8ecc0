#!/usr/bin/env python3
"""Converts a published ELECTRA sequence-classification checkpoint into the
native model directory consumed by `sentinel train --model transformer` and
`finetune_transformer` (manifest.json + vocab.txt + weights.bin).

Typical use:

    python3 tools/convert_hf_checkpoint.py \
        --id gooojy/suicidal-electra --out checkpoints/electra-base

Works from a local snapshot too (no network):

    python3 tools/convert_hf_checkpoint.py \
        --local /path/to/snapshot --out checkpoints/electra-base

The snapshot (local or downloaded) must contain config.json, vocab.txt, and
either model.safetensors or pytorch_model.bin. Reading .safetensors needs the
`safetensors` package; .bin needs `torch`. Everything else is stdlib + numpy.

Weight-layout notes, pinned by the C++ loader:
  * linear layers compute y = x @ W with W shaped [in, out], so transformer
    linear weights (stored [out, in]) are transposed here;
  * embedding tables keep their [rows, dim] orientation;
  * biases and layer-norm vectors are written as [1, n] row vectors;
  * logit column 1 must be the positive (suicidal) class, which matches the
    LABEL_1 convention of the published checkpoint. Verify id2label in
    config.json if converting anything else.
"""

import argparse
import datetime
import json
import os
import struct
import sys
import urllib.request

import numpy as np

HUB = "https://huggingface.co/{id}/resolve/main/{name}"
SNAPSHOT_FILES = ["config.json", "vocab.txt", "model.safetensors", "pytorch_model.bin"]

FINETUNE_DEFAULTS = {
    "learning_rate": 2e-5,
    "batch_size": 32,
    "epochs": 3,
    "weight_decay": 0.01,
    "warmup_fraction": 0.1,
    "max_sequence_tokens": 512,
    "seed": 42,
}


def fetch_snapshot(model_id, cache_dir):
    os.makedirs(cache_dir, exist_ok=True)
    have_weights = False
    for name in SNAPSHOT_FILES:
        dest = os.path.join(cache_dir, name)
        if os.path.exists(dest):
            have_weights = have_weights or name.endswith((".safetensors", ".bin"))
            continue
        url = HUB.format(id=model_id, name=name)
        try:
            print(f"fetching {url}")
            urllib.request.urlretrieve(url, dest)
            have_weights = have_weights or name.endswith((".safetensors", ".bin"))
        except Exception as e:  # weight files are alternatives; one may 404
            if name in ("config.json", "vocab.txt"):
                raise SystemExit(f"cannot download required file {name}: {e}")
            print(f"  skipped ({e})")
    if not have_weights:
        raise SystemExit("no weight file (model.safetensors or pytorch_model.bin) available")
    return cache_dir


def load_state_dict(snapshot):
    st_path = os.path.join(snapshot, "model.safetensors")
    pt_path = os.path.join(snapshot, "pytorch_model.bin")
    if os.path.exists(st_path):
        from safetensors.numpy import load_file

        return {k: np.asarray(v) for k, v in load_file(st_path).items()}
    if os.path.exists(pt_path):
        import torch

        state = torch.load(pt_path, map_location="cpu", weights_only=True)
        return {k: v.numpy() for k, v in state.items()}
    raise SystemExit(f"no weight file found under {snapshot}")


def transformer_config(hf):
    return {
        "vocabulary_size": hf["vocab_size"],
        "embedding_size": hf.get("embedding_size", hf["hidden_size"]),
        "hidden_size": hf["hidden_size"],
        "num_hidden_layers": hf["num_hidden_layers"],
        "num_attention_heads": hf["num_attention_heads"],
        "intermediate_size": hf["intermediate_size"],
        "max_position_embeddings": hf["max_position_embeddings"],
        "hidden_activation": hf.get("hidden_act", "gelu"),
        "hidden_dropout": hf.get("hidden_dropout_prob", 0.1),
        "attention_dropout": hf.get("attention_probs_dropout_prob", 0.1),
        "summary_activation": hf.get("summary_activation") or "gelu",
        "summary_last_dropout": hf.get("summary_last_dropout", 0.1),
    }


def rename_map(num_layers, project):
    """HF parameter name -> (native name, transpose?)."""
    m = {
        "electra.embeddings.word_embeddings.weight": ("embeddings.word", False),
        "electra.embeddings.position_embeddings.weight": ("embeddings.position", False),
        "electra.embeddings.token_type_embeddings.weight": ("embeddings.token_type", False),
        "electra.embeddings.LayerNorm.weight": ("embeddings.ln.gamma", False),
        "electra.embeddings.LayerNorm.bias": ("embeddings.ln.beta", False),
        "classifier.dense.weight": ("head.dense.weight", True),
        "classifier.dense.bias": ("head.dense.bias", False),
        "classifier.out_proj.weight": ("head.out_proj.weight", True),
        "classifier.out_proj.bias": ("head.out_proj.bias", False),
    }
    if project:
        m["electra.embeddings_project.weight"] = ("embeddings.project.weight", True)
        m["electra.embeddings_project.bias"] = ("embeddings.project.bias", False)
    for l in range(num_layers):
        hf = f"electra.encoder.layer.{l}."
        ours = f"encoder.{l}."
        for theirs, mine in [
            ("attention.self.query", "attn.query"),
            ("attention.self.key", "attn.key"),
            ("attention.self.value", "attn.value"),
            ("attention.output.dense", "attn.output"),
            ("intermediate.dense", "ffn.intermediate"),
            ("output.dense", "ffn.output"),
        ]:
            m[hf + theirs + ".weight"] = (ours + mine + ".weight", True)
            m[hf + theirs + ".bias"] = (ours + mine + ".bias", False)
        m[hf + "attention.output.LayerNorm.weight"] = (ours + "ln1.gamma", False)
        m[hf + "attention.output.LayerNorm.bias"] = (ours + "ln1.beta", False)
        m[hf + "output.LayerNorm.weight"] = (ours + "ln2.gamma", False)
        m[hf + "output.LayerNorm.bias"] = (ours + "ln2.beta", False)
    return m


def write_weights(path, tensors):
    """tensors: name -> 2-D float32 array, written in the SNTW v1 layout."""
    with open(path, "wb") as fh:
        fh.write(b"SNTW")
        fh.write(struct.pack("<II", 1, len(tensors)))
        for name, arr in sorted(tensors.items()):
            arr = np.ascontiguousarray(arr, dtype="<f4")
            assert arr.ndim == 2, name
            encoded = name.encode()
            fh.write(struct.pack("<I", len(encoded)))
            fh.write(encoded)
            fh.write(struct.pack("<BI", 0, 2))
            fh.write(struct.pack("<QQ", arr.shape[0], arr.shape[1]))
            fh.write(arr.tobytes())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--id", default="gooojy/suicidal-electra", help="hub model id")
    ap.add_argument("--out", required=True, help="output model directory")
    ap.add_argument("--local", help="existing snapshot directory (skips download)")
    ap.add_argument("--cache", default="checkpoints/.hub-cache", help="download cache")
    args = ap.parse_args()

    snapshot = args.local or fetch_snapshot(args.id, os.path.join(args.cache, *args.id.split("/")))
    with open(os.path.join(snapshot, "config.json")) as fh:
        hf_config = json.load(fh)
    config = transformer_config(hf_config)

    id2label = hf_config.get("id2label")
    if id2label and str(id2label.get("1", "LABEL_1")).upper() not in ("LABEL_1", "SUICIDAL", "1"):
        raise SystemExit(f"refusing to convert: logit column 1 is {id2label!r}, not the positive class")

    state = load_state_dict(snapshot)
    project = config["embedding_size"] != config["hidden_size"]
    mapping = rename_map(config["num_hidden_layers"], project)

    tensors = {}
    skipped = []
    for hf_name, arr in state.items():
        if hf_name not in mapping:
            skipped.append(hf_name)
            continue
        ours, transpose = mapping[hf_name]
        arr = np.asarray(arr, dtype=np.float32)
        if transpose:
            arr = arr.T
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        tensors[ours] = arr
    missing = sorted(set(name for name, _ in mapping.values()) - set(tensors))
    if missing:
        raise SystemExit(f"checkpoint is missing {len(missing)} tensors, e.g. {missing[:4]}")
    if skipped:
        print(f"ignored {len(skipped)} non-model tensors (buffers/heads): {skipped[:4]} ...")

    with open(os.path.join(snapshot, "vocab.txt")) as fh:
        vocab = [line.rstrip("\n") for line in fh if line.strip()]
    if len(vocab) != config["vocabulary_size"]:
        raise SystemExit(
            f"vocab.txt has {len(vocab)} tokens but config says {config['vocabulary_size']}")

    finetune = dict(FINETUNE_DEFAULTS)
    finetune["max_sequence_tokens"] = min(finetune["max_sequence_tokens"],
                                          config["max_position_embeddings"])

    os.makedirs(args.out, exist_ok=True)
    manifest = {
        "kind": "electra",
        "version": 1,
        "config": config,
        "finetune": finetune,
        "vocabulary_size": len(vocab),
        "corpus_hash": "",
        "metrics": {},
        "created_at": datetime.datetime.now(datetime.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
    }
    with open(os.path.join(args.out, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
    with open(os.path.join(args.out, "vocab.txt"), "w") as fh:
        fh.write("\n".join(vocab) + "\n")
    write_weights(os.path.join(args.out, "weights.bin"), tensors)
    print(f"wrote {args.out}: {len(tensors)} tensors, vocab {len(vocab)}")


if __name__ == "__main__":
    main()
