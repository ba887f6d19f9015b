"""Demo 4: majority voting and latency accounting.

Shows how 100-verdict votes suppress window-level errors and how the
detection latency decomposes into signal acquisition plus compute time.
"""

import numpy as np

from coexist.detector import DetectorVerdict
from coexist.voting import VoteAccumulator, VoteConfig, latency

FS = 1.024e6


def verdict_stream(rng, n, error_rate, truth):
    for i in range(n):
        wrong = rng.random() < error_rate
        label = (1 - truth) if wrong else truth
        yield DetectorVerdict(i * 1024, int(label), float(label), "demo")


def main():
    cfg = VoteConfig()  # 100 verdicts per vote, batches of 10
    rng = np.random.default_rng(0)

    print("[1] vote error rate vs per-window error rate (truth: no radar)")
    for p in (0.05, 0.2, 0.35, 0.45):
        acc = VoteAccumulator(cfg, FS)
        wrong_votes = total = 0
        batch = []
        for v in verdict_stream(rng, 20_000, p, truth=0):
            batch.append(v)
            if len(batch) == cfg.batch_size:
                d = acc.accumulate(batch)
                batch = []
                if d:
                    total += 1
                    wrong_votes += int(d.radar_present)
        print(f"    window error {p:4.0%} -> vote error {wrong_votes / total:7.3%} "
              f"({total} votes)")

    print("[2] latency accounting (f_s = 1.024 MS/s, vote = 100 windows)")
    acc = VoteAccumulator(cfg, FS)
    decision = None
    for i in range(10):
        batch = [
            DetectorVerdict(1024 * (10 * i + j), 1, 1.0, "demo") for j in range(10)
        ]
        decision = acc.accumulate(batch, compute_time_ms=0.5) or decision
    print(f"    vote span samples: {decision.window_span}")
    print(f"    signal time: {decision.signal_time_ms:.1f} ms, "
          f"compute: {decision.compute_time_ms:.1f} ms")
    for onset_window in (0, 50):
        onset = onset_window * 1024
        ms = latency(decision, onset, FS)
        print(f"    radar onset at window {onset_window:3d} -> latency {ms:.1f} ms")


if __name__ == "__main__":
    main()
