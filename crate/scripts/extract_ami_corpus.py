#!/usr/bin/env python3
"""Cut a small multi-speaker corpus out of the AMI meeting excerpts that ship
with the pyannote.audio source distribution (tests/data, MIT; AMI audio is
CC BY 4.0).

Only annotated single-speaker stretches are kept: each RTTM turn minus every
region where another speaker talks. Stretches of at least 1.5 s are split
into pieces of at most 6 s, peak-normalized to 0.5 and written as 16 kHz
mono 16-bit PCM to <out>/<speaker>/<nn>.wav.

    curl -O <pyannote_audio-4.0.7.tar.gz from PyPI> && tar xzf pyannote_audio-4.0.7.tar.gz
    python3 scripts/extract_ami_corpus.py pyannote_audio-4.0.7/tests/data crates/cli/tests/data/ami
"""
import collections
import sys
import unicodedata
from pathlib import Path

import numpy as np
from scipy.io import wavfile

MIN_SECONDS = 1.5
MAX_SECONDS = 6.0
PEAK = 0.5


def read_turns(data):
    turns = collections.defaultdict(list)
    for rttm in sorted(data.glob("*.rttm")):
        for line in rttm.read_text(encoding="utf-8").splitlines():
            f = line.split()
            if f and f[0] == "SPEAKER":
                start = float(f[3])
                turns[f[1]].append((start, start + float(f[4]), f[7]))
    return turns


def solo_stretches(turns):
    out = collections.defaultdict(list)
    for uri, ts in sorted(turns.items()):
        for start, end, spk in ts:
            pieces = [(start, end)]
            for s2, e2, other in ts:
                if other == spk:
                    continue
                kept = []
                for a, b in pieces:
                    if e2 <= a or s2 >= b:
                        kept.append((a, b))
                        continue
                    if s2 > a:
                        kept.append((a, s2))
                    if e2 < b:
                        kept.append((e2, b))
                pieces = kept
            out[spk].extend((uri, a, b) for a, b in pieces if b - a >= MIN_SECONDS)
    return out


def ascii_id(spk):
    return unicodedata.normalize("NFKD", spk).encode("ascii", "ignore").decode()


def main(data, out):
    # the annotation says trn00 where the file is named trñ00
    audio = {ascii_id(p.stem): p for p in data.glob("*.wav")}
    stretches = solo_stretches(read_turns(data))
    for spk, items in sorted(stretches.items()):
        target = out / ascii_id(spk)
        target.mkdir(parents=True, exist_ok=True)
        n = 0
        for uri, a, b in sorted(items):
            rate, x = wavfile.read(audio[ascii_id(uri)])
            assert rate == 16000, (uri, rate)
            x = x.astype(np.float64)
            pieces = int(np.ceil((b - a) / MAX_SECONDS))
            edges = np.linspace(a, b, pieces + 1)
            for lo, hi in zip(edges[:-1], edges[1:]):
                seg = x[int(round(lo * rate)):int(round(hi * rate))]
                seg = seg - seg.mean()
                seg = PEAK * seg / np.max(np.abs(seg))
                pcm = np.round(seg * 32767).astype(np.int16)
                path = target / f"{n:02d}.wav"
                wavfile.write(path, rate, pcm)
                print(path, f"{len(pcm) / rate:.2f} s")
                n += 1


if __name__ == "__main__":
    main(Path(sys.argv[1]), Path(sys.argv[2] if len(sys.argv) > 2 else "corpus"))
