#!/usr/bin/env python3
# Copyright 2026 The Infostat Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Encoder server for the pretrained_contextual backend.

Speaks the line-delimited JSON protocol of the subprocess encoder on
stdin/stdout and wraps a Hugging Face transformer. Marker and separator
words are registered as special tokens, so each costs exactly one position.
"""

import hashlib
import json
import sys

import torch
from transformers import AutoModel, AutoTokenizer


class TooLong(Exception):
    pass


class Encoder:
    def __init__(self, model, special_tokens, seed, max_seq_len):
        torch.manual_seed(seed)
        torch.use_deterministic_algorithms(True, warn_only=True)
        try:
            self.tok = AutoTokenizer.from_pretrained(model, use_fast=True, add_prefix_space=True)
        except TypeError:
            self.tok = AutoTokenizer.from_pretrained(model, use_fast=True)
        if not self.tok.is_fast:
            raise ValueError("a fast tokenizer is required")
        added = self.tok.add_special_tokens(
            {"additional_special_tokens": list(special_tokens)})
        self.model = AutoModel.from_pretrained(model)
        if added:
            self.model.resize_token_embeddings(len(self.tok))
        limit = getattr(self.model.config, "max_position_embeddings", None) or max_seq_len
        # roberta-style position ids start after the padding index
        if getattr(self.model.config, "model_type", "") in ("roberta", "xlm-roberta"):
            limit -= 2
        self.max_len = min(max_seq_len, limit)
        self.opt = None

    @property
    def hidden_dim(self):
        return self.model.config.hidden_size

    def _encode_words(self, batch):
        words = [item["words"] for item in batch]
        enc = self.tok(words, is_split_into_words=True, padding=True, return_tensors="pt",
                       truncation=False)
        positions = []
        for i, item in enumerate(batch):
            ids = enc.word_ids(i)
            length = int(enc["attention_mask"][i].sum())
            if length > self.max_len:
                raise TooLong(f"sequence of {length} tokens exceeds the budget of {self.max_len}")
            first = {}
            for pos, w in enumerate(ids):
                if w is not None and w not in first:
                    first[w] = pos
            positions.append((first[item["open"]], first[item["close"]]))
        return enc, positions

    def lengths(self, batch):
        out = []
        for item in batch:
            enc = self.tok(item["words"], is_split_into_words=True, truncation=False)
            out.append(len(enc["input_ids"]))
        return out

    def _states(self, batch):
        enc, positions = self._encode_words(batch)
        hidden = self.model(**enc).last_hidden_state
        opens = torch.stack([hidden[i, p[0]] for i, p in enumerate(positions)])
        closes = torch.stack([hidden[i, p[1]] for i, p in enumerate(positions)])
        return opens, closes

    def encode(self, batch):
        self.model.eval()
        with torch.no_grad():
            opens, closes = self._states(batch)
        return [{"open": o.double().tolist(), "close": c.double().tolist()}
                for o, c in zip(opens, closes)]

    def train_step(self, batch, grads, lr):
        self.model.train()
        if self.opt is None:
            self.opt = torch.optim.AdamW(self.model.parameters(), lr=lr)
        for group in self.opt.param_groups:
            group["lr"] = lr
        opens, closes = self._states(batch)
        g_open = torch.tensor([g["open"] for g in grads], dtype=opens.dtype)
        g_close = torch.tensor([g["close"] for g in grads], dtype=closes.dtype)
        # d(loss)/d(states) is given; sum <g, h> has exactly that gradient.
        surrogate = (opens * g_open).sum() + (closes * g_close).sum()
        self.opt.zero_grad()
        surrogate.backward()
        self.opt.step()

    def save(self, path):
        self.model.save_pretrained(path)
        self.tok.save_pretrained(path)

    def fingerprint(self):
        h = hashlib.sha256()
        for name, tensor in sorted(self.model.state_dict().items()):
            h.update(name.encode())
            h.update(tensor.detach().cpu().contiguous().numpy().tobytes())
        return h.hexdigest()[:16]


def handle(encoder, req):
    op = req["op"]
    if op == "init":
        enc = Encoder(req["model"], req.get("special_tokens", []), req.get("seed", 1),
                      req.get("max_seq_len", 512))
        return enc, {"hidden_dim": enc.hidden_dim, "supports_training": True}
    if encoder is None:
        raise ValueError("encoder not initialized")
    if op == "lengths":
        return encoder, {"lengths": encoder.lengths(req["batch"])}
    if op == "encode":
        return encoder, {"states": encoder.encode(req["batch"])}
    if op == "train_step":
        encoder.train_step(req["batch"], req["grads"], req["lr"])
        return encoder, {}
    if op == "save":
        encoder.save(req["dir"])
        return encoder, {}
    if op == "fingerprint":
        return encoder, {"fingerprint": encoder.fingerprint()}
    raise ValueError(f"unknown op '{op}'")


def main():
    encoder = None
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        try:
            req = json.loads(line)
            if req.get("op") == "shutdown":
                break
            encoder, extra = handle(encoder, req)
            reply = {"ok": True, **extra}
        except TooLong as e:
            reply = {"ok": False, "kind": "too_long", "error": str(e)}
        except Exception as e:  # reported to the client, which raises
            reply = {"ok": False, "error": f"{type(e).__name__}: {e}"}
        sys.stdout.write(json.dumps(reply) + "\n")
        sys.stdout.flush()


if __name__ == "__main__":
    main()
