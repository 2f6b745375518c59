"""Search configuration and its flat ``key = value`` file format.

Both ``population = 500`` and the dictionary style
``params['population'] = 500`` are accepted; values are Python literals, and a
bare word is read as a string.
"""
from __future__ import annotations

import ast
import math
import re
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from .fitness import TARGETS
from .interpolation import FLAVORS

MIXING_METHODS = ("crossover", "permutation")
MUTATION_METHODS = ("all", "single")


class ConfigError(ValueError):
    pass


class ParseError(ConfigError):
    pass


class ValidationError(ConfigError):
    pass


@dataclass
class GAConfig:
    map_type: str = "rational"
    degree: int = 4
    population: int = 1000
    generations: int = 1000
    survival: float = 0.15
    reset_survival: float = 0.02
    reset_interval: int = 50
    normalize_orbit: bool = True
    bound: int = 20
    mixing_method: str = "permutation"
    mutation_rate: float = 0.05
    mutation_method: str = "all"
    target: str = "preperiodic"
    # in score space: stop once the best score is <= orbit_target
    orbit_target: float | None = None
    # (w_n, w_m); None means the target's own default
    orbit_weights: tuple | None = None
    seed: int = 0
    hall_of_fame_size: int = 20
    rel_eps: float = 1e-3
    final_rel_eps: float = 1e-4

    def __post_init__(self):
        if self.map_type in ("poly", "polynomial"):
            self.map_type = "polynomial"
        if self.orbit_weights is not None:
            self.orbit_weights = tuple(self.orbit_weights)

    def validate(self) -> "GAConfig":
        def need(cond: bool, msg: str) -> None:
            if not cond:
                raise ValidationError(msg)

        need(self.map_type in FLAVORS, f"map_type must be one of {FLAVORS}, got {self.map_type!r}")
        need(isinstance(self.degree, int) and self.degree >= 2, "degree must be an integer >= 2")
        need(isinstance(self.population, int) and self.population >= 2, "population must be an integer >= 2")
        need(isinstance(self.generations, int) and self.generations >= 0, "generations must be >= 0")
        need(0 < self.survival <= 1, "survival must lie in (0, 1]")
        need(0 < self.reset_survival <= 1, "reset_survival must lie in (0, 1]")
        need(isinstance(self.reset_interval, int) and self.reset_interval >= 0, "reset_interval must be >= 0")
        need(isinstance(self.normalize_orbit, bool), "normalize_orbit must be True or False")
        need(isinstance(self.bound, int) and self.bound >= 1, "bound must be an integer >= 1")
        need(self.mixing_method in MIXING_METHODS, f"mixing_method must be one of {MIXING_METHODS}")
        need(0 <= self.mutation_rate <= 1, "mutation_rate must lie in [0, 1]")
        need(self.mutation_method in MUTATION_METHODS, f"mutation_method must be one of {MUTATION_METHODS}")
        need(self.target in TARGETS, f"target must be one of {TARGETS}")
        need(self.orbit_target is None or not math.isnan(self.orbit_target), "orbit_target must be a number")
        if self.orbit_weights is not None:
            need(len(self.orbit_weights) == 2, "orbit_weights must be a pair (w_n, w_m)")
        need(isinstance(self.seed, int), "seed must be an integer")
        need(self.hall_of_fame_size >= 1, "hall_of_fame_size must be >= 1")
        need(self.rel_eps > 0 and self.final_rel_eps > 0, "precisions must be positive")
        return self

    def to_json(self) -> dict:
        d = asdict(self)
        if d["orbit_weights"] is not None:
            d["orbit_weights"] = list(d["orbit_weights"])
        return d


_KEYS = {f.name for f in fields(GAConfig)}
_LINE = re.compile(r"""^\s*(?:params\s*\[\s*(['"])(?P<qkey>\w+)\1\s*\]|(?P<key>\w+))\s*[=:]\s*(?P<value>.*?)\s*$""")


def _literal(text: str):
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError):
        if re.fullmatch(r"[A-Za-z_][\w-]*", text):
            return text
        raise


def parse_config_text(text: str, source: str = "<config>") -> GAConfig:
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line or re.fullmatch(r"params\s*=\s*(\{\s*\}|dict\(\s*\))", line):
            continue
        m = _LINE.match(line)
        if not m:
            raise ParseError(f"{source}:{lineno}: cannot parse {raw.strip()!r}")
        key = m.group("qkey") or m.group("key")
        if key not in _KEYS:
            raise ParseError(f"{source}:{lineno}: unknown key {key!r}")
        try:
            values[key] = _literal(m.group("value"))
        except (ValueError, SyntaxError):
            raise ParseError(f"{source}:{lineno}: bad value for {key!r}: {m.group('value')!r}") from None
    try:
        cfg = GAConfig(**values)
    except TypeError as exc:
        raise ValidationError(str(exc)) from None
    return cfg.validate()


def parse_config(path) -> GAConfig:
    path = Path(path)
    return parse_config_text(path.read_text(), str(path))
