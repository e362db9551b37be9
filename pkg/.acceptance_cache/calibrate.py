"""Build the token cache for the default config and time a few train steps."""
import os
import sys
import time

sys.path.insert(0, "src")

from tinyfoley import config as config_mod
from tinyfoley import corpus, data, model, rvq

cfg = config_mod.default_config()
chash = config_mod.config_hash(cfg)
pipe = os.path.join(".acceptance_cache", "pipeline_%s" % chash[:12])
run = os.path.join(pipe, "run")
os.makedirs(run, exist_ok=True)

books = rvq.load_codebooks(os.path.join(pipe, "codebooks.frvq"))
corpus_dir = os.path.join(pipe, "corpus")
rows_tr = corpus.accepted_rows(corpus_dir, split="train")
rows_va = corpus.accepted_rows(corpus_dir, split="val")
print("train rows %d, val rows %d" % (len(rows_tr), len(rows_va)))

tok_path = os.path.join(run, "tokens.bin")
t0 = time.time()
if not os.path.exists(tok_path):
    data.build_token_cache(corpus_dir, rows_tr + rows_va, books, tok_path, chash)
grids, _ = data.load_token_cache(tok_path)
print("token cache: %.1f s (%d grids)" % (time.time() - t0, len(grids)))

mcfg = config_mod.model_config(cfg)
tr = cfg["train"]
scripts_tr = [data.load_script(corpus_dir, r) for r in rows_tr]
scripts_va = [data.load_script(corpus_dir, r) for r in rows_va]
n_val = tr["val_batches"] * tr["batch_size"]
val_batches = data.make_eval_batches(
    mcfg, rows_va[:n_val], scripts_va[:n_val], grids, max_batch=tr["batch_size"]
)

params = model.init_params(mcfg, cfg["seed"])
opt = model.OptState(params)
v0 = data.validation_loss(params, mcfg, val_batches)
print("step 0 val loss %.4f" % v0)

t0 = time.time()
for step in range(1, 41):
    batch, batch_id = data.make_train_batch(
        mcfg, rows_tr, scripts_tr, grids, step, cfg["seed"], tr
    )
    loss, per_head = model.train_step(
        params, opt, mcfg, batch, lr=tr["lr"], batch_id=batch_id
    )
    if step % 10 == 0:
        rate = (time.time() - t0) / step
        print("step %d loss %.4f (%.3f s/step)" % (step, loss, rate))
rate = (time.time() - t0) / 40
print("5000 steps would take %.1f min" % (rate * 5000 / 60.0))
v1 = data.validation_loss(params, mcfg, val_batches)
print("val loss after 40 steps %.4f (from %.4f)" % (v1, v0))
