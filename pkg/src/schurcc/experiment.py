"""Batch dimension-sequence experiments over all generators of a quotient ring.

For each ring F_q[x]/(x^n - a) the runner enumerates generator polynomials
(canonical order, optional rate filter), computes every generator's dimension
sequence plus pattern/invariance diagnostics, and aggregates identical
sequences into exact rational fractions. Everything is deterministic given
the configuration and seed.
"""

from __future__ import annotations

import dataclasses
import json
import logging
import os
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path

from .analysis import (
    equilibrium_cycle_length,
    equilibrium_min_distance,
    hilbert_report,
    is_invariant_at_equilibrium,
    pattern_polynomial,
)
from .code import ConstacyclicCode
from .errors import ConfigError, NotCoprime, NotPrime, UnstabilizedError
from .gf import FieldSpec
from .polyring import RingSpec, enumerate_divisors, factor_modulus

log = logging.getLogger(__name__)

A_MODES = ("cyclic", "negacyclic", "both", "explicit")


@dataclass(frozen=True)
class ExperimentConfig:
    """Parameters of a batch run.

    ``rate_bound`` filters to codes with k/n strictly below the bound
    (None disables the filter). Rings whose eligible generator pool exceeds
    ``generator_cap`` are flagged and skipped unless ``truncate`` is set, in
    which case the first ``generator_cap`` generators in canonical order are
    analyzed.
    """

    primes: tuple[int, ...]
    n: int
    a_mode: str = "cyclic"
    a_value: int | None = None
    rate_bound: Fraction | None = Fraction(1, 2)
    generator_cap: int = 1000
    max_power: int = 8
    seed: int = 0
    truncate: bool = False

    def __post_init__(self):
        if self.a_mode not in A_MODES:
            raise ConfigError(f"a_mode must be one of {A_MODES}, got {self.a_mode!r}")
        if self.a_mode == "explicit" and self.a_value is None:
            raise ConfigError("a_mode = explicit requires an 'a' value")
        if self.n < 1:
            raise ConfigError(f"n must be positive, got {self.n}")
        if self.max_power < 2:
            raise ConfigError(f"max_power must be >= 2, got {self.max_power}")

    def ring_modes(self, q: int) -> list[str]:
        """Mode labels to run for one prime; 'both' = cyclic and negacyclic."""
        if self.a_mode == "both":
            return ["cyclic"] if q == 2 else ["cyclic", "negacyclic"]
        return [self.a_mode]

    def resolve_a(self, q: int, mode: str) -> int:
        if mode == "cyclic":
            return 1 % q
        if mode == "negacyclic":
            return (q - 1) % q
        return self.a_value % q

    def to_dict(self) -> dict:
        return {
            "primes": list(self.primes),
            "n": self.n,
            "a_mode": self.a_mode,
            "a": self.a_value,
            "rate_bound": None
            if self.rate_bound is None
            else [self.rate_bound.numerator, self.rate_bound.denominator],
            "generator_cap": self.generator_cap,
            "max_power": self.max_power,
            "seed": self.seed,
            "truncate": self.truncate,
        }


def _parse_rate_bound(raw) -> Fraction | None:
    if raw is None:
        return None
    if isinstance(raw, str):
        raw = raw.strip()
        if raw.lower() in ("none", ""):
            return None
        if "/" in raw:
            num, den = raw.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(raw)
    if isinstance(raw, (list, tuple)) and len(raw) == 2:
        return Fraction(int(raw[0]), int(raw[1]))
    return Fraction(raw)


def config_from_dict(data: dict) -> ExperimentConfig:
    try:
        primes = data["primes"]
        if isinstance(primes, (int, str)):
            primes = [primes]
        primes = tuple(int(p) for p in primes)
        return ExperimentConfig(
            primes=primes,
            n=int(data["n"]),
            a_mode=str(data.get("a_mode", "cyclic")).strip().lower(),
            a_value=None if data.get("a") is None else int(data["a"]),
            rate_bound=_parse_rate_bound(data.get("rate_bound", "1/2")),
            generator_cap=int(data.get("generator_cap", 1000)),
            max_power=int(data.get("max_power", 8)),
            seed=int(data.get("seed", 0)),
            truncate=bool(data.get("truncate", False)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad experiment config: {exc}") from exc


def load_config(path) -> ExperimentConfig:
    """Read a config file: JSON, or simple ``key = value`` lines.

    In the text form lists are comma-separated, booleans are true/false and
    the rate bound may be written as a fraction (``1/2``) or ``none``.
    """
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return config_from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"bad JSON config: {exc}") from exc
    data: dict = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip().lower()
        value = value.strip()
        if key == "primes":
            data[key] = [v.strip() for v in value.split(",") if v.strip()]
        elif key == "truncate":
            if value.lower() not in ("true", "false", "0", "1"):
                raise ConfigError(f"line {lineno}: bad boolean {value!r}")
            data[key] = value.lower() in ("true", "1")
        else:
            data[key] = value
    if "primes" not in data:
        raise ConfigError("config is missing 'primes'")
    if "n" not in data:
        raise ConfigError("config is missing 'n'")
    return config_from_dict(data)


@dataclass(frozen=True)
class GeneratorRecord:
    """Per-generator analysis row."""

    g: tuple[int, ...]
    k: int
    dims: tuple[int, ...]
    stabilized: bool
    r: int | None
    r_prime: int | None
    pattern_v: int
    pattern_d: int
    invariant: bool
    cycle_len: int
    equilibrium_min_distance: int
    label: str = ""


@dataclass
class RingResult:
    """Everything the run learned about one ring."""

    q: int
    n: int
    a: int
    mode: str
    ell: int | None = None
    skipped_reason: str | None = None
    factor_degrees: tuple[int, ...] = ()
    eligible_count: int = 0
    over_cap: bool = False
    truncated: bool = False
    generators: list[GeneratorRecord] = dc_field(default_factory=list)
    histogram: dict[str, tuple[int, Fraction]] = dc_field(default_factory=dict)
    seconds: float = 0.0

    @property
    def analyzed_count(self) -> int:
        return len(self.generators)


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    rings: list[RingResult]


def _analyze_generator(code: ConstacyclicCode, max_power: int) -> GeneratorRecord:
    try:
        report = hilbert_report(code, max_power)
        dims, stabilized = report.dims, True
        r, r_prime = report.r, report.r_prime
    except UnstabilizedError as exc:
        dims, stabilized, r, r_prime = exc.dims, False, None, None
    pattern = pattern_polynomial(code)
    return GeneratorRecord(
        g=tuple(code.g.coeff_list()),
        k=code.k,
        dims=dims,
        stabilized=stabilized,
        r=r,
        r_prime=r_prime,
        pattern_v=pattern.v,
        pattern_d=pattern.d,
        invariant=is_invariant_at_equilibrium(code, pattern),
        cycle_len=equilibrium_cycle_length(code, pattern),
        equilibrium_min_distance=equilibrium_min_distance(code, pattern),
    )


def _label(dims, stabilized, width) -> str:
    padded = list(dims) + [dims[-1]] * (width - len(dims)) if stabilized else list(dims)
    text = "-".join(str(d) for d in padded)
    return text if stabilized else text + "+"


def _worker_count() -> int:
    raw = os.environ.get("SCHUR_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    """Enumerate, analyze and aggregate every ring requested by the config.

    Rings with gcd(n, q) != 1 (or a non-prime q) are skipped with a log note.
    Rings whose eligible pool exceeds the cap are flagged; with
    ``cfg.truncate`` the first ``generator_cap`` generators (canonical order)
    are still analyzed. Generators are proper divisors: the zero code and the
    full code are never analyzed. Output ring order is sorted by (q, a).
    """
    rings: list[RingResult] = []
    workers = _worker_count()
    ring_requests = [(q, mode) for q in cfg.primes for mode in cfg.ring_modes(q)]
    for q, a_label in ring_requests:
        ring_start = time.perf_counter()
        try:
            field = FieldSpec(q)
            ring = RingSpec(field, cfg.n, cfg.resolve_a(q, a_label))
            if not ring.coprime:
                raise NotCoprime(f"n = {cfg.n} shares a factor with q = {q}")
        except (NotPrime, NotCoprime, ValueError) as exc:
            log.warning("skipping ring q=%s (%s)", q, exc)
            rings.append(
                RingResult(q=q, n=cfg.n, a=-1, mode=a_label, skipped_reason=str(exc))
            )
            continue
        result = RingResult(q=q, n=cfg.n, a=ring.a, mode=a_label, ell=ring.ell)
        factors = factor_modulus(ring, seed=cfg.seed)
        result.factor_degrees = tuple(f.degree for f in factors)
        eligible = [
            g
            for g in enumerate_divisors(ring, rate_bound=cfg.rate_bound, seed=cfg.seed)
            if 0 < g.degree  # proper divisors only: full code carries no signal
        ]
        result.eligible_count = len(eligible)
        result.over_cap = result.eligible_count > cfg.generator_cap
        if result.over_cap:
            if not cfg.truncate:
                log.warning(
                    "ring q=%d a=%d has %d eligible generators (cap %d); flagged and skipped",
                    q,
                    ring.a,
                    result.eligible_count,
                    cfg.generator_cap,
                )
                result.seconds = time.perf_counter() - ring_start
                rings.append(result)
                continue
            result.truncated = True
            eligible = eligible[: cfg.generator_cap]
        codes = [ConstacyclicCode(ring, g) for g in eligible]
        if workers > 1 and len(codes) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                records = list(
                    pool.map(lambda c: _analyze_generator(c, cfg.max_power), codes)
                )
        else:
            records = [_analyze_generator(c, cfg.max_power) for c in codes]
        width = max((len(rec.dims) for rec in records), default=0)
        records = [
            dataclasses.replace(rec, label=_label(rec.dims, rec.stabilized, width))
            for rec in records
        ]
        result.generators = records
        counts = Counter(rec.label for rec in records)
        total = len(records)
        result.histogram = {
            label: (count, Fraction(count, total))
            for label, count in sorted(
                counts.items(), key=lambda kv: _label_sort_key(kv[0])
            )
        }
        result.seconds = time.perf_counter() - ring_start
        rings.append(result)
    rings.sort(key=lambda r: (r.q, r.a))
    return ExperimentResult(cfg, rings)


def _label_sort_key(label: str):
    core = label.rstrip("+")
    return tuple(int(p) for p in core.split("-")), label


# ---------------------------------------------------------------------------
# emission


CSV_HEADER = "q,n,a,sequence_label,count,fraction_num,fraction_den"


def histogram_csv_text(result: ExperimentResult) -> str:
    lines = [CSV_HEADER]
    for ring in result.rings:
        if ring.skipped_reason is not None:
            continue
        for label, (count, frac) in ring.histogram.items():
            lines.append(
                f"{ring.q},{ring.n},{ring.a},{label},{count},"
                f"{frac.numerator},{frac.denominator}"
            )
    return "\n".join(lines) + "\n"


def parse_histogram_csv(text: str) -> dict:
    """Inverse of :func:`histogram_csv_text`, for round-trip checks."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("unrecognized histogram CSV header")
    out: dict = {}
    for ln in lines[1:]:
        q, n, a, label, count, num, den = ln.split(",")
        key = (int(q), int(n), int(a))
        out.setdefault(key, {})[label] = (int(count), Fraction(int(num), int(den)))
    return out


def result_to_dict(result: ExperimentResult) -> dict:
    rings = []
    for ring in result.rings:
        entry = {
            "q": ring.q,
            "n": ring.n,
            "a": ring.a,
            "mode": ring.mode,
            "ell": ring.ell,
            "skipped_reason": ring.skipped_reason,
            "factor_degrees": list(ring.factor_degrees),
            "eligible_count": ring.eligible_count,
            "over_cap": ring.over_cap,
            "truncated": ring.truncated,
            "analyzed_count": ring.analyzed_count,
            "seconds": round(ring.seconds, 3),
            "histogram": [
                {
                    "label": label,
                    "count": count,
                    "fraction": [frac.numerator, frac.denominator],
                }
                for label, (count, frac) in ring.histogram.items()
            ],
            "generators": [
                {
                    "g": list(rec.g),
                    "k": rec.k,
                    "dims": list(rec.dims),
                    "stabilized": rec.stabilized,
                    "r": rec.r,
                    "r_prime": rec.r_prime,
                    "pattern_v": rec.pattern_v,
                    "pattern_d": rec.pattern_d,
                    "invariant": rec.invariant,
                    "cycle_len": rec.cycle_len,
                    "equilibrium_min_distance": rec.equilibrium_min_distance,
                    "label": rec.label,
                }
                for rec in ring.generators
            ],
        }
        rings.append(entry)
    return {
        "schema": 1,
        "config": result.config.to_dict(),
        # generator order is the canonical (degree, coefficient) order; the
        # original enumeration order of the source data is unknown
        "ordering": "divisors sorted by (degree, coefficient tuple)",
        "rings": rings,
    }


def plotdata_text(result: ExperimentResult) -> str:
    """Gnuplot-style data blocks: one block per ring, label/count/fraction."""
    blocks = []
    for ring in result.rings:
        if ring.skipped_reason is not None:
            continue
        lines = [
            f"# q={ring.q} n={ring.n} a={ring.a} mode={ring.mode} "
            f"analyzed={ring.analyzed_count}",
            "# sequence_label count fraction",
        ]
        for label, (count, frac) in ring.histogram.items():
            lines.append(f'"{label}" {count} {float(frac):.6f}')
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def emit_reports(result: ExperimentResult, out_dir) -> dict[str, Path]:
    """Write histogram.csv, histogram.json and histogram.dat under ``out_dir``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "csv": out / "histogram.csv",
        "json": out / "histogram.json",
        "dat": out / "histogram.dat",
    }
    try:
        paths["csv"].write_text(histogram_csv_text(result))
        paths["json"].write_text(
            json.dumps(result_to_dict(result), indent=2, sort_keys=False) + "\n"
        )
        paths["dat"].write_text(plotdata_text(result))
    except OSError as exc:
        raise OSError(f"failed writing reports under {out}: {exc}") from exc
    return paths
