"""Demo 5: the full 120 s coexistence timeline.

Traffic runs from 0 s; the radar ship transmits from 50 s to 90 s; the
detector votes every 100 ms and the controller vacates/resumes the BS.
Produces the two-panel picture: sensed-band spectrogram on top, BS state
and per-UE throughput below, plus the exported report directory.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from coexist.control import ExperimentConfig, TimelineConfig, export_report, run_experiment
from coexist.detector import EnergyDetector, calibrate_energy_threshold
from coexist.framing import WINDOW_LEN, window_stream
from coexist.scenario import load_default_scenario
from coexist.sensing import SensingConfig, synthesize_sensed

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def main():
    scn = load_default_scenario()
    print("[1] calibrate the energy detector on the radar-absent mix")
    clean = synthesize_sensed(scn, 0.0, 2000 * WINDOW_LEN, [], True,
                              SensingConfig(), seeds=(1, 2, 3))
    threshold = calibrate_energy_threshold(window_stream(clean), 0.01)
    print(f"    threshold = {threshold:.5f}")

    print("[2] run the default timeline (radar on 50..90 s)")
    report = run_experiment(
        scn, TimelineConfig(), EnergyDetector(threshold), ExperimentConfig(), seed=1
    )
    for t, kind, detail in report.events:
        print(f"    t={t:7.1f} s  {kind:15s} {detail}")
    if report.detections:
        print(f"    detection latency: {report.detections[0]['latency_ms']:.1f} ms")

    run_dir = OUT / "experiment"
    export_report(report, run_dir)
    print(f"    report -> {run_dir}")

    print("[3] draw the timeline figure")
    frames = report.spectrogram
    mags = np.stack([m for _, m in frames.frames])
    times = np.array([t for t, _ in frames.frames])
    fig, axes = plt.subplots(2, 1, figsize=(11, 7), sharex=True,
                             gridspec_kw={"height_ratios": [2, 1]})
    extent = [times[0], times[-1], -scn.sample_rate_hz / 2e3, scn.sample_rate_hz / 2e3]
    axes[0].imshow(mags.T, aspect="auto", origin="lower", extent=extent,
                   cmap="viridis", vmin=np.percentile(mags, 60))
    axes[0].set_ylabel("baseband frequency [kHz]")
    axes[0].set_title("sensed band at the BS (downlink 0..50 s, radar pulses 50..90 s)")

    ue_ids = sorted({u for _, u, _ in report.throughput_trace})
    for ue in ue_ids:
        pts = [(t, r) for t, u, r in report.throughput_trace if u == ue]
        axes[1].plot([t for t, _ in pts], [r for _, r in pts], lw=0.8)
    for t, mode in report.bs_trace[1:]:
        color = "red" if mode == "vacated" else "green"
        axes[1].axvline(t, color=color, ls="--", lw=1)
    axes[1].set_xlabel("time [s]")
    axes[1].set_ylabel("per-UE throughput [Mbps]")
    axes[1].set_title("BS shutdown on detection (red) and resume after the band clears (green)")
    fig.tight_layout()
    fig.savefig(OUT / "experiment.png", dpi=120)
    print(f"    figure -> {OUT / 'experiment.png'}")


if __name__ == "__main__":
    main()
