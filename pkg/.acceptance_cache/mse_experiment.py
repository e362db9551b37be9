"""Measure corpus-wide depth-MSE ratio vs tokenizer training frame budget."""
import os
import sys
import time

import numpy as np

sys.path.insert(0, "src")
from tinyfoley import corpus, rvq, wavio

pipe = os.path.join(".acceptance_cache", "pipeline_333554028652")
corpus_dir = os.path.join(pipe, "corpus")
rows_all = corpus.read_manifest(os.path.join(corpus_dir, "manifest.jsonl"))
rows_tr = corpus.accepted_rows(corpus_dir, split="train")

print("pooling train latents...")
lats = []
for r in rows_tr:
    wave = wavio.read_wav_8k(os.path.join(corpus_dir, r["wav"]))
    lats.append(rvq.frame_transform(wave).frames)
pool = [l for l in lats]
print("train frames", sum(len(l) for l in pool))

probe_rows = list(np.random.default_rng(99).choice(rows_all, size=400, replace=False))
probe = []
for r in probe_rows:
    wave = wavio.read_wav_8k(os.path.join(corpus_dir, r["wav"]))
    probe.append(rvq.frame_transform(wave).frames.astype(np.float64))


def ratio(books):
    cb = books.codebooks.astype(np.float64)
    sums = {1: 0.0, 4: 0.0, 8: 0.0}
    n = 0
    for frames in probe:
        res = frames.copy()
        for j in range(books.K):
            idx = rvq._pairwise_sq(res, cb[j]).argmin(axis=1)
            res -= cb[j][idx]
            if j + 1 in sums:
                sums[j + 1] += float((res**2).sum())
        n += res.size
    return {k: v / n for k, v in sums.items()}


base = rvq.load_codebooks(os.path.join(pipe, "codebooks.frvq"))
m = ratio(base)
print("base 65536fr: mse1 %.5f mse4 %.5f mse8 %.5f ratio %.3f"
      % (m[1], m[4], m[8], m[8] / m[1]))

for mp in (131072, 196608):
    t0 = time.time()
    books = rvq.train_codebooks(pool, K=8, D=256, iters=50, seed=0, max_points=mp)
    dt = time.time() - t0
    m = ratio(books)
    print("%dfr (%.0f s): mse1 %.5f mse4 %.5f mse8 %.5f ratio %.3f"
          % (mp, dt, m[1], m[4], m[8], m[8] / m[1]), flush=True)
