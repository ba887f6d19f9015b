"""Demo 1: synthesize the three signal classes and mix them.

Generates the pulsed-chirp radar, the CP-OFDM downlink, and the noise
floor, mixes them at chosen gains, and saves a time/spectrum figure plus
an .iqb capture you can feed to `coexist detect`.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from coexist.waveforms import (
    CellularWaveformConfig,
    RadarWaveformConfig,
    gen_awgn,
    gen_cellular,
    gen_radar,
    mix,
    write_iqb,
)

FS = 1.024e6
OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def main():
    duration = 0.01  # 10 ms

    print("[1] pulsed linear-FM radar (PRI 1 ms, pulse 100 us, 200 kHz sweep)")
    radar_cfg = RadarWaveformConfig(burst_spans=((0.0, duration),))
    radar = gen_radar(radar_cfg, duration, FS, seed=1)
    duty = np.count_nonzero(np.abs(radar.samples) > 0) / len(radar)
    print(f"    {len(radar)} samples, measured duty cycle {duty:.3f}")

    print("[2] CP-OFDM downlink (1024-FFT, 600 subcarriers, QPSK)")
    cell_cfg = CellularWaveformConfig(amplitude=0.3)
    cellular = gen_cellular(cell_cfg, duration, FS, seed=2)
    rms = float(np.sqrt(np.mean(np.abs(cellular.samples) ** 2)))
    print(f"    {len(cellular)} samples, RMS {rms:.3f}")

    print("[3] noise floor and mixing at per-part gains")
    noise = gen_awgn(1e-4, len(radar), seed=3, sample_rate_hz=FS)
    sensed = mix([(radar, -20.0), (cellular, 0.0), (noise, 0.0)])
    print(f"    mixed {len(sensed)} samples "
          f"(radar -20 dB, cellular 0 dB, noise 0 dB)")

    capture = OUT / "mixed.iqb"
    write_iqb(sensed, capture, metadata={"description": "radar+OFDM+noise demo mix"})
    print(f"    wrote {capture}")

    fig, axes = plt.subplots(2, 1, figsize=(10, 6))
    t_ms = np.arange(len(sensed)) / FS * 1e3
    axes[0].plot(t_ms, np.abs(sensed.samples), lw=0.4)
    axes[0].set_xlabel("time [ms]")
    axes[0].set_ylabel("|IQ|")
    axes[0].set_title("mixed baseband envelope (radar pulses over OFDM)")

    spec = np.fft.fftshift(np.fft.fft(sensed.samples.astype(np.complex128)))
    freqs = np.fft.fftshift(np.fft.fftfreq(len(sensed), 1 / FS)) / 1e3
    axes[1].plot(freqs, 20 * np.log10(np.abs(spec) + 1e-12), lw=0.4)
    axes[1].set_xlabel("frequency [kHz]")
    axes[1].set_ylabel("magnitude [dB]")
    axes[1].set_title("mixed spectrum (OFDM band + chirp)")
    fig.tight_layout()
    fig.savefig(OUT / "waveforms.png", dpi=120)
    print(f"    figure -> {OUT / 'waveforms.png'}")


if __name__ == "__main__":
    main()
