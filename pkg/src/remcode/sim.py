"""Channel models and the Monte-Carlo / exhaustive decoder simulator.

Per-trial randomness is derived from (master_seed, trial_index) through a
splitmix64 mixing step, so trials are independent of execution order and a
report is reproducible byte for byte from the seed alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .code import CodeSpec, Codeword, encode
from .decoder import (
    DecodeOptions,
    DecodeStatus,
    build_candidate_list,
    decode,
    list_decode,
)
from .errors import InfeasibleWeight, SearchSpaceTooLarge
from .oracle import all_messages
from .poly import Poly

_MASK64 = (1 << 64) - 1
_MESSAGE_SALT = 0x517CC1B727220A95
EXHAUSTIVE_TRIAL_CAP = 10 ** 7

FIXED_POSITIONS = "fixed_positions"
RANDOM_HAMMING = "random_hamming_weight"
RANDOM_DEGREE = "random_degree_weight"
_KINDS = (FIXED_POSITIONS, RANDOM_HAMMING, RANDOM_DEGREE)


def mix64(seed: int, index: int) -> int:
    """The (index+1)-th splitmix64 output from `seed`; the documented trial mixer."""
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class ChannelModel:
    """Error channel: where errors land and how their weight is drawn."""

    kind: str
    weight_or_positions: int | tuple[int, ...]
    master_seed: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown channel kind {self.kind!r}")
        if self.kind == FIXED_POSITIONS:
            object.__setattr__(self, "weight_or_positions",
                               tuple(sorted(set(self.weight_or_positions))))


def _random_nonzero_symbol(rng: random.Random, spec: CodeSpec, i: int) -> Poly:
    size = spec.field.q ** spec.degrees[i]
    return Poly.from_int(spec.field, rng.randrange(1, size))


def _degree_weight_support(rng: random.Random, spec: CodeSpec, weight: int) -> list[int]:
    """Uniform subset with exact degree weight, sampled through a count table."""
    n = spec.n
    # ways[i][w] = number of subsets of positions i..n-1 with degree sum w
    ways = [[0] * (weight + 1) for _ in range(n + 1)]
    ways[n][0] = 1
    for i in range(n - 1, -1, -1):
        d = spec.degrees[i]
        for w in range(weight + 1):
            ways[i][w] = ways[i + 1][w] + (ways[i + 1][w - d] if w >= d else 0)
    if ways[0][weight] == 0:
        raise InfeasibleWeight(f"no support has degree weight {weight}")
    support, w = [], weight
    for i in range(n):
        d = spec.degrees[i]
        with_i = ways[i + 1][w - d] if w >= d else 0
        if with_i and rng.randrange(ways[i][w]) < with_i:
            support.append(i)
            w -= d
    return support


def corrupt(
    spec: CodeSpec,
    word: Codeword,
    model: ChannelModel,
    trial_index: int = 0,
) -> tuple[Codeword, Codeword]:
    """Apply the channel: returns (received, true error).

    The error has exactly the requested weight; nonzero symbol values are
    uniform over the nonzero residues.  Deterministic in
    (model.master_seed, trial_index).
    """
    rng = random.Random(mix64(model.master_seed, trial_index))
    if model.kind == FIXED_POSITIONS:
        support = list(model.weight_or_positions)
        if any(not 0 <= i < spec.n for i in support):
            raise InfeasibleWeight(f"positions {support} out of range for n={spec.n}")
    elif model.kind == RANDOM_HAMMING:
        w = model.weight_or_positions
        if not 0 <= w <= spec.n:
            raise InfeasibleWeight(f"hamming weight {w} infeasible for n={spec.n}")
        support = sorted(rng.sample(range(spec.n), w))
    else:
        w = model.weight_or_positions
        if w == 0:
            support = []
        else:
            support = _degree_weight_support(rng, spec, w)
    symbols = [Poly.zero(spec.field)] * spec.n
    for i in support:
        symbols[i] = _random_nonzero_symbol(rng, spec, i)
    error = Codeword(spec, tuple(symbols))
    return word + error, error


@dataclass
class SimReport:
    """Per-decoder success/miscorrect/failure tallies."""

    trials: int = 0
    counts: dict = dc_field(default_factory=dict)      # decoder -> class -> count
    by_support: dict = dc_field(default_factory=dict)  # support -> decoder -> class -> count

    def record(self, decoder: str, support: tuple[int, ...], outcome_class: str) -> None:
        self.counts.setdefault(decoder, {"success": 0, "miscorrect": 0, "failure": 0})
        self.counts[decoder][outcome_class] += 1
        per = self.by_support.setdefault(support, {})
        per.setdefault(decoder, {"success": 0, "miscorrect": 0, "failure": 0})
        per[decoder][outcome_class] += 1

    def success_rate(self, decoder: str) -> float:
        c = self.counts[decoder]
        return c["success"] / self.trials if self.trials else 1.0

    def render(self) -> str:
        lines = [f"trials: {self.trials}"]
        for decoder in sorted(self.counts):
            c = self.counts[decoder]
            lines.append(
                f"{decoder}: success={c['success']} miscorrect={c['miscorrect']}"
                f" failure={c['failure']}")
        for support in sorted(self.by_support):
            label = ",".join(map(str, support)) if support else "-"
            for decoder in sorted(self.by_support[support]):
                c = self.by_support[support][decoder]
                lines.append(
                    f"  support {label} {decoder}:"
                    f" success={c['success']} miscorrect={c['miscorrect']}"
                    f" failure={c['failure']}")
        return "\n".join(lines)


def _classify(outcome, sent: Poly) -> str:
    if outcome.status is DecodeStatus.FAILURE:
        return "failure"
    return "success" if outcome.message == sent else "miscorrect"


def _decoder_runs(spec: CodeSpec, decoders, options: DecodeOptions, candidates):
    runs = {}
    for name in decoders:
        if name == "gcd":
            runs[name] = lambda w: decode(spec, w, options)
        elif name == "list":
            cand = build_candidate_list(spec) if candidates is None else candidates
            runs[name] = lambda w, c=cand: list_decode(spec, w, c, options)
        else:
            raise ValueError(f"unknown decoder {name!r}")
    return runs


def simulate(
    spec: CodeSpec,
    model: ChannelModel,
    trials: int,
    decoders=("gcd",),
    options: DecodeOptions = DecodeOptions(),
    exhaustive: bool = False,
    message_sample: int = 20,
    candidates=None,
) -> SimReport:
    """Run the channel against the selected decoders.

    Monte-Carlo mode draws `trials` independent (message, error) pairs.
    Exhaustive mode (fixed positions only) iterates every nonzero error
    value combination at the support, across `message_sample` messages
    drawn without replacement; total trials are capped at 10**7.
    """
    runs = _decoder_runs(spec, decoders, options, candidates)
    report = SimReport()
    if exhaustive:
        if model.kind != FIXED_POSITIONS:
            raise ValueError("exhaustive mode requires fixed error positions")
        support = tuple(model.weight_or_positions)
        q = spec.field.q
        value_count = 1
        for i in support:
            value_count *= q ** spec.degrees[i] - 1
        total_messages = q ** spec.K
        sample = min(message_sample, total_messages)
        if value_count * sample > EXHAUSTIVE_TRIAL_CAP:
            raise SearchSpaceTooLarge(
                f"{value_count * sample} exhaustive trials exceed cap {EXHAUSTIVE_TRIAL_CAP}")
        rng = random.Random(mix64(model.master_seed, 0))
        if sample == total_messages:
            messages = list(all_messages(spec))
        else:
            codes = rng.sample(range(total_messages), sample)
            messages = [Poly.from_int(spec.field, code) for code in codes]
        for a in messages:
            c = encode(spec, a)
            for error in _all_error_values(spec, support):
                y = c + error
                for name, run in runs.items():
                    report.record(name, support, _classify(run(y), a))
                report.trials += 1
        return report

    total_messages = spec.field.q ** spec.K
    for index in range(trials):
        msg_rng = random.Random(mix64(model.master_seed ^ _MESSAGE_SALT, index))
        a = Poly.from_int(spec.field, msg_rng.randrange(total_messages))
        c = encode(spec, a)
        y, error = corrupt(spec, c, model, index)
        support = error.support()
        for name, run in runs.items():
            report.record(name, support, _classify(run(y), a))
        report.trials += 1
    return report


def _all_error_values(spec: CodeSpec, support: tuple[int, ...]):
    """Every error word whose nonzero symbols sit exactly on `support`."""
    zero = Codeword(spec, (Poly.zero(spec.field),) * spec.n)
    if not support:
        yield zero
        return

    def rec(idx: int, symbols: list[Poly]):
        if idx == len(support):
            yield Codeword(spec, tuple(symbols))
            return
        i = support[idx]
        for code in range(1, spec.field.q ** spec.degrees[i]):
            symbols[i] = Poly.from_int(spec.field, code)
            yield from rec(idx + 1, symbols)
        symbols[i] = Poly.zero(spec.field)

    yield from rec(0, [Poly.zero(spec.field)] * spec.n)
