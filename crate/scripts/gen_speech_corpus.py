#!/usr/bin/env python3
"""Synthesize a small multi-speaker speech corpus with espeak-ng.

Layout: <out>/<speaker>/<nn>.wav, 16 kHz mono 16-bit PCM.

    pip install espeakng-loader scipy numpy
    python3 scripts/gen_speech_corpus.py crates/cli/tests/data/tts
"""
import ctypes
import sys
import wave
from pathlib import Path

import numpy as np
from scipy.signal import resample_poly

import espeakng_loader

SENTENCES = [
    "The birch canoe slid on the smooth planks. Glue the sheet to the dark blue background.",
    "It is easy to tell the depth of a well. These days a chicken leg is a rare dish.",
    "Rice is often served in round bowls. The juice of lemons makes fine punch.",
    "The box was thrown beside the parked truck. The hogs were fed chopped corn and garbage.",
    "Four hours of steady work faced us. A large size in stockings is hard to sell.",
    "The boy was there when the sun rose. A rod is used to catch pink salmon.",
    "The source of the huge river is the clear spring. Kick the ball straight and follow through.",
    "Help the woman get back to her feet. A pot of tea helps to pass the evening.",
    "Smoky fires lack flame and heat. The soft cushion broke the man's fall.",
    "The salt breeze came across from the sea. The girl at the booth sold fifty bonds.",
    "The small pup gnawed a hole in the sock. The fish twisted and turned on the bent hook.",
    "Press the pants and sew a button on the vest. The swan dive was far short of perfect.",
]

# (voice variant, base pitch 0-100, pitch range, words per minute)
SPEAKERS = [
    ("en-us+m1", 35, 60, 165),
    ("en-us+f2", 70, 70, 170),
    ("en+m3", 45, 50, 155),
    ("en+f4", 80, 60, 160),
    ("en-us+m7", 25, 40, 175),
    ("en+f1", 60, 80, 150),
]

RECORDINGS_PER_SPEAKER = 2
TARGET_RATE = 16000

SYNTH_CB = ctypes.CFUNCTYPE(ctypes.c_int, ctypes.POINTER(ctypes.c_short), ctypes.c_int, ctypes.c_void_p)


def main(out_dir: Path) -> None:
    lib = ctypes.cdll.LoadLibrary(espeakng_loader.get_library_path())
    data = espeakng_loader.get_data_path().encode()
    # AUDIO_OUTPUT_RETRIEVAL = 1
    rate = lib.espeak_Initialize(1, 0, ctypes.c_char_p(data), 0)
    chunks = []

    @SYNTH_CB
    def on_audio(wav, n, events):
        if n > 0:
            chunks.append(np.ctypeslib.as_array(wav, shape=(n,)).copy())
        return 0

    lib.espeak_SetSynthCallback(on_audio)
    sentence = 0
    for s_idx, (voice, pitch, prange, wpm) in enumerate(SPEAKERS):
        lib.espeak_SetVoiceByName(voice.encode())
        lib.espeak_SetParameter(1, wpm, 0)  # espeakRATE
        lib.espeak_SetParameter(3, pitch, 0)  # espeakPITCH
        lib.espeak_SetParameter(4, prange, 0)  # espeakRANGE
        spk_dir = out_dir / f"speaker{s_idx:02d}"
        spk_dir.mkdir(parents=True, exist_ok=True)
        for r in range(RECORDINGS_PER_SPEAKER):
            text = SENTENCES[sentence % len(SENTENCES)].encode()
            sentence += 1
            chunks.clear()
            # POS_CHARACTER = 1, espeakCHARS_AUTO = 0, espeakSSML off
            lib.espeak_Synth(ctypes.c_char_p(text), len(text) + 1, 0, 1, 0, 0, None, None)
            lib.espeak_Synchronize()
            pcm = np.concatenate(chunks).astype(np.float64) / 32768.0
            pcm = resample_poly(pcm, TARGET_RATE, rate)
            pcm *= 0.5 / max(np.max(np.abs(pcm)), 1e-9)
            out = np.clip(np.round(pcm * 32767.0), -32768, 32767).astype("<i2")
            with wave.open(str(spk_dir / f"{r:02d}.wav"), "wb") as w:
                w.setnchannels(1)
                w.setsampwidth(2)
                w.setframerate(TARGET_RATE)
                w.writeframes(out.tobytes())
            print(spk_dir / f"{r:02d}.wav", len(out) / TARGET_RATE, "s")


if __name__ == "__main__":
    main(Path(sys.argv[1] if len(sys.argv) > 1 else "corpus"))
