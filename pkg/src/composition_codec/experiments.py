"""Sweep harnesses behind the ``experiment`` CLI subcommand.

Each mode runs a batch of independent trials and aggregates an
:class:`ExperimentReport`.  Trials are deterministic: exhaustive modes
enumerate, sampled modes derive every per-trial seed from the master seed,
and aggregation sorts failures canonically, so reports are byte-identical
across runs and worker counts.  Wall time is kept out of the report body
for the same reason.
"""

from __future__ import annotations

import json
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import channel, codebook, ecc
from .compositions import fragment, multiset_difference_size, sigma_direct

EXHAUSTIVE_MESSAGE_LIMIT = 1 << 16


@dataclass
class ExperimentReport:
    mode: str
    parameters: dict
    trials: int
    successes: int
    failures: list[dict]
    wall_time_s: float

    def to_doc(self) -> dict:
        return {
            "mode": self.mode,
            "parameters": self.parameters,
            "counters": {
                "trials": self.trials,
                "successes": self.successes,
                "failures": len(self.failures),
            },
            "failures": self.failures,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_doc(), indent=2) + "\n"

    def summary(self) -> str:
        head = (
            f"mode={self.mode} trials={self.trials} "
            f"successes={self.successes} failures={len(self.failures)}"
        )
        lines = [head]
        for failure in self.failures[:20]:
            lines.append("  failure: " + json.dumps(failure, sort_keys=True))
        if len(self.failures) > 20:
            lines.append(f"  ... {len(self.failures) - 20} more")
        return "\n".join(lines)


def worker_count() -> int:
    """Pool size; the COMPOSITION_CODEC_THREADS env var caps it (default 1)."""
    raw = os.environ.get("COMPOSITION_CODEC_THREADS", "")
    try:
        requested = int(raw)
    except ValueError:
        requested = 1
    return max(1, min(requested if raw else 1, os.cpu_count() or 1))


def _failure_key(entry: dict) -> str:
    return json.dumps(entry, sort_keys=True)


def _finish(mode, parameters, results, started) -> ExperimentReport:
    trials = sum(r[0] for r in results)
    failures = sorted((f for r in results for f in r[1]), key=_failure_key)
    return ExperimentReport(
        mode=mode,
        parameters=parameters,
        trials=trials,
        successes=trials - len(failures),
        failures=failures,
        wall_time_s=time.perf_counter() - started,
    )


def _run_tasks(task, args_list, workers):
    if workers <= 1 or len(args_list) <= 1:
        return [task(args) for args in args_list]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(task, args_list))


def _messages(k: int, trials: int, seed: int) -> list[str]:
    """All 2^k messages, or ``trials`` seeded draws when sampling is on."""
    if trials <= 0:
        if 1 << k > EXHAUSTIVE_MESSAGE_LIMIT:
            raise ValueError(
                f"2^{k} messages is too many to enumerate; pass a trial count"
            )
        return [format(r, f"0{k}b") for r in range(1 << k)]
    rng = random.Random(1_000_003 * seed + k)
    return [format(rng.getrandbits(k), f"0{k}b") for _ in range(trials)]


def _trial_seed(seed: int, k: int, index: int) -> int:
    state = np.random.SeedSequence([seed, k, index]).generate_state(1, dtype=np.uint64)
    return int(state[0])


def _roundtrip_task(args) -> tuple[int, list[dict]]:
    k, messages = args
    failures = []
    for message in messages:
        decoded = codebook.decode(fragment(codebook.encode(message)), k)
        if decoded != message:
            failures.append({"k": k, "message": message})
    return len(messages), failures


def run_roundtrip(k_range=(1, 10), trials=0, seed=0) -> ExperimentReport:
    """Encode, fragment, reconstruct, and compare, over a range of k."""
    started = time.perf_counter()
    lo, hi = k_range
    args = [(k, _messages(k, trials, seed)) for k in range(lo, hi + 1)]
    results = _run_tasks(_roundtrip_task, args, worker_count())
    return _finish(
        "roundtrip",
        {"k_range": [lo, hi], "trials": trials, "seed": seed},
        results,
        started,
    )


def _ecc_exhaustive_task(args) -> tuple[int, list[dict]]:
    k, message = args
    clean = fragment(ecc.encode(message))
    trials = 0
    failures = []
    for spec, corrupted in channel.enumerate_errors(clean):
        trials += 1
        entry = {"k": k, "message": message, "error": spec.render()}
        try:
            decoded, diagnostics = ecc.decode(corrupted, k)
        except Exception as exc:  # any decode failure is a reportable trial
            entry["outcome"] = f"{type(exc).__name__}: {exc}"
            failures.append(entry)
            continue
        if decoded != message or diagnostics.corrupted_class != spec.length:
            entry["outcome"] = (
                f"decoded={decoded} corrected_class={diagnostics.corrupted_class}"
            )
            failures.append(entry)
    return trials, failures


def _ecc_sampled_task(args) -> tuple[int, list[dict]]:
    k, message, trial_seed = args
    clean = fragment(ecc.encode(message))
    spec, corrupted = channel.random_error(clean, trial_seed)
    entry = {"k": k, "message": message, "seed": trial_seed, "error": spec.render()}
    try:
        decoded, diagnostics = ecc.decode(corrupted, k)
    except Exception as exc:
        entry["outcome"] = f"{type(exc).__name__}: {exc}"
        return 1, [entry]
    if decoded != message or diagnostics.corrupted_class != spec.length:
        entry["outcome"] = (
            f"decoded={decoded} corrected_class={diagnostics.corrupted_class}"
        )
        return 1, [entry]
    return 1, []


def run_ecc_sweep(k_range=(1, 5), trials=0, seed=0) -> ExperimentReport:
    """Corrupt-and-correct sweep: exhaustive errors, or seeded samples."""
    started = time.perf_counter()
    lo, hi = k_range
    if trials <= 0:
        args = [
            (k, message)
            for k in range(lo, hi + 1)
            for message in _messages(k, 0, seed)
        ]
        results = _run_tasks(_ecc_exhaustive_task, args, worker_count())
    else:
        args = []
        for k in range(lo, hi + 1):
            for index, message in enumerate(_messages(k, trials, seed)):
                args.append((k, message, _trial_seed(seed, k, index)))
        results = _run_tasks(_ecc_sampled_task, args, worker_count())
    return _finish(
        "ecc_sweep",
        {"k_range": [lo, hi], "trials": trials, "seed": seed},
        results,
        started,
    )


def plain_redundancy_bound(k: int) -> float:
    return (0.5 * math.log2(k) if k > 1 else 0.0) + 6


def ecc_redundancy_bound(k: int) -> float:
    return 0.5 * math.log2(k) + 12


def run_redundancy_table(k_range=(1, 4096)) -> ExperimentReport:
    """Check the selected lengths against both redundancy bounds."""
    started = time.perf_counter()
    lo, hi = k_range
    results = []
    max_plain = (float("-inf"), None)
    max_ecc = (float("-inf"), None)
    for k in range(lo, hi + 1):
        failures = []
        plain = codebook.params(k)
        slack = plain.redundancy - (0.5 * math.log2(k) if k > 1 else 0.0)
        if slack > max_plain[0]:
            max_plain = (slack, k)
        if plain.redundancy > plain_redundancy_bound(k):
            failures.append(
                {"code": "plain", "k": k, "n": plain.n, "redundancy": plain.redundancy}
            )
        if k >= 2:
            corrective = ecc.params(k)
            slack = corrective.redundancy - 0.5 * math.log2(k)
            if slack > max_ecc[0]:
                max_ecc = (slack, k)
            if corrective.redundancy > ecc_redundancy_bound(k):
                failures.append(
                    {
                        "code": "ecc",
                        "k": k,
                        "n": corrective.n,
                        "redundancy": corrective.redundancy,
                    }
                )
        results.append((1, failures))
    parameters = {
        "k_range": [lo, hi],
        "max_slack_plain": round(max_plain[0], 9),
        "max_slack_plain_at_k": max_plain[1],
        "max_slack_ecc": round(max_ecc[0], 9) if max_ecc[1] else None,
        "max_slack_ecc_at_k": max_ecc[1],
    }
    return _finish("redundancy_table", parameters, results, started)


def run_distance_check(n=11) -> ExperimentReport:
    """Pairwise multiset distance >= 4 inside every equal-pair-sum group."""
    started = time.perf_counter()
    codewords = ecc.enumerate_codewords(n)
    groups: dict[tuple, list[str]] = {}
    for word in codewords:
        groups.setdefault(sigma_direct(word), []).append(word)
    fragments = {word: fragment(word) for word in codewords}
    results = []
    for members in groups.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                distance = multiset_difference_size(
                    fragments[members[i]], fragments[members[j]]
                )
                failure = []
                if distance < 4:
                    failure = [
                        {
                            "n": n,
                            "first": members[i],
                            "second": members[j],
                            "distance": distance,
                        }
                    ]
                results.append((1, failure))
    parameters = {"n": n, "codewords": len(codewords), "groups": len(groups)}
    return _finish("distance_check", parameters, results, started)
