"""Bundled polynomial corpus: loading and validation."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .errors import CorpusError, HypError
from .polycore import MultiPoly, poly_parse

DEFAULT_CORPUS = Path(__file__).with_name("data") / "corpus.json"
IRREDUCIBILITY = ("declared_true", "declared_false", "unknown")


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    nvars: int
    degree: int
    polynomial: str
    irreducible: str
    provenance: str
    known_pairs: int | None = None
    known_factors: tuple[str, ...] | None = None

    def poly(self) -> MultiPoly:
        return poly_parse(self.polynomial, self.nvars)


def corpus_path() -> Path:
    env = os.environ.get("HYP_CORPUS")
    return Path(env) if env else DEFAULT_CORPUS


def _field(raw: dict, name: str, kind, where: str, required: bool = True):
    if name not in raw:
        if required:
            raise CorpusError(f"{where}: missing field '{name}'")
        return None
    value = raw[name]
    # bool is an int subclass; reject it for counts
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise CorpusError(f"{where}: field '{name}' must be {kind.__name__}")
    return value


def validate_entry(raw: dict, where: str) -> CorpusEntry:
    if not isinstance(raw, dict):
        raise CorpusError(f"{where}: entry must be an object")
    eid = _field(raw, "id", str, where)
    where = f"{where} ({eid})"
    nvars = _field(raw, "nvars", int, where)
    degree = _field(raw, "degree", int, where)
    text = _field(raw, "polynomial", str, where)
    irr = _field(raw, "irreducible", str, where)
    prov = _field(raw, "provenance", str, where)
    pairs = _field(raw, "known_pairs", int, where, required=False)
    factors = _field(raw, "known_factors", list, where, required=False)
    if nvars < 1:
        raise CorpusError(f"{where}: nvars must be positive")
    if irr not in IRREDUCIBILITY:
        raise CorpusError(f"{where}: field 'irreducible' must be one of {IRREDUCIBILITY}")
    if pairs is not None and pairs < 0:
        raise CorpusError(f"{where}: known_pairs must be nonnegative")
    try:
        p = poly_parse(text, nvars)
        d = p.homogeneous_degree()
    except HypError as exc:
        raise CorpusError(f"{where}: polynomial invalid: {exc}") from exc
    if d != degree:
        raise CorpusError(f"{where}: field 'degree' is {degree} but the polynomial has degree {d}")
    if factors is not None:
        if not all(isinstance(f, str) for f in factors):
            raise CorpusError(f"{where}: known_factors must be strings")
        prod = MultiPoly.constant(1, nvars)
        try:
            for f in factors:
                prod = prod * poly_parse(f, nvars)
        except HypError as exc:
            raise CorpusError(f"{where}: factor invalid: {exc}") from exc
        if prod != p:
            raise CorpusError(f"{where}: product of known_factors differs from the polynomial")
        factors = tuple(factors)
    return CorpusEntry(eid, nvars, degree, text, irr, prov, pairs, factors)


def corpus_load(path=None) -> list[CorpusEntry]:
    path = Path(path) if path is not None else corpus_path()
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise CorpusError(f"{path}: cannot read corpus: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CorpusError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("entries"), list):
        raise CorpusError(f"{path}: top level must be an object with an 'entries' list")
    entries = [validate_entry(raw, f"{path}: entries[{i}]") for i, raw in enumerate(data["entries"])]
    ids = [e.id for e in entries]
    dup = {i for i in ids if ids.count(i) > 1}
    if dup:
        raise CorpusError(f"{path}: duplicate ids {sorted(dup)}")
    return entries


def corpus_lookup(key: str, path=None) -> CorpusEntry | None:
    for entry in corpus_load(path):
        if entry.id == key:
            return entry
    return None
