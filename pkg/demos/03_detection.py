"""Demo 3: window-level radar detection.

Calibrates the energy detector on the radar-absent sensing mix, sweeps
the radar gain to trace detection rate vs received level, and runs the
CNN engine once to show the verdict interface (random weights here;
train real ones with the trainer package).
"""

import pathlib

import numpy as np

from coexist.cnn import random_model
from coexist.detector import (
    CnnDetector,
    EnergyDetector,
    calibrate_energy_threshold,
    classify_batch,
    window_energy,
)
from coexist.framing import WINDOW_LEN, window_stream
from coexist.scenario import load_default_scenario
from coexist.sensing import SensingConfig, synthesize_sensed

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def main():
    scn = load_default_scenario()
    sense = SensingConfig()

    print("[1] calibrate on 2000 radar-absent windows (downlink + noise)")
    clean = synthesize_sensed(scn, 0.0, 2000 * WINDOW_LEN, [], True, sense,
                              seeds=(1, 2, 3))
    threshold = calibrate_energy_threshold(window_stream(clean), target_pfa=0.01)
    print(f"    threshold = {threshold:.5f} (pfa 1%)")

    print("[2] detection rate vs radar gain (ship at t = 55 s)")
    for gain_db in (-30.0, -20.0, -10.0, 0.0):
        span = 200 * WINDOW_LEN
        sensed = synthesize_sensed(
            scn, 55.0, span, [(0.0, 1e9)], True, sense,
            radar_gain_db=gain_db, seeds=(4, 5, 6),
        )
        windows = window_stream(sensed)
        hits = sum(1 for w in windows if window_energy(w) >= threshold)
        print(f"    radar {gain_db:+6.1f} dB -> {hits / len(windows):5.1%} of windows flagged")

    print("[3] verdict interface, energy vs CNN (random weights)")
    sensed = synthesize_sensed(scn, 55.0, 10 * WINDOW_LEN, [(0.0, 1e9)], True,
                               sense, seeds=(7, 8, 9))
    batch = window_stream(sensed)
    for det in (EnergyDetector(threshold), CnnDetector(random_model(0))):
        verdicts = classify_batch(det, batch)
        labels = "".join(str(v.label) for v in verdicts)
        print(f"    {verdicts[0].detector_id:6s} labels={labels} "
              f"scores[0]={verdicts[0].score:.3f}")
    print("    (the CNN is untrained here; see trainer/ for the real weights)")


if __name__ == "__main__":
    main()
