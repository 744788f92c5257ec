"""JSON run configuration and the built-in derivation set.

A config looks like::

    {
      "corpora": ["corpora/corpora.txt"],
      "stopwords": null,
      "output": "tudo.txt",
      "specs": [
        {"label": "incidence", "source": "meaningful",
         "ordering": {"key": "incidence", "direction": "descending",
                      "repetition": "deduplicated"}},
        {"label": "plosives", "source": "meaningful",
         "filters": [{"kind": "consonant_class", "classes": ["plosive"]}]},
        {"label": "boundaries", "source": "boundaries"},
        {"label": "collocations", "source": "collocations",
         "min_count": 2, "measure": "raw_count"}
      ]
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional

import jsonschema

from .derive import DerivationSpec, Measure, Source
from .errors import ConfigError, SpecError
from .ordering import Direction, OrderingSpec, OrderKey, Repetition
from .phonofilter import (
    CONSONANT_CLASSES,
    ConsonantClass,
    FilterSpec,
    Frequency,
    Length,
    SingleVowel,
    SoundClass,
)


@dataclass(frozen=True)
class RunConfig:
    corpus_paths: tuple[str, ...]
    specs: tuple[DerivationSpec, ...]
    stopword_path: Optional[str] = None
    output_path: Optional[str] = None


def _enum_values(enum_cls) -> list[str]:
    return [member.value for member in enum_cls]


_RANGE = {
    "min": {"type": "integer", "minimum": 0},
    "max": {"type": ["integer", "null"], "minimum": 0},
}

_FILTER_SCHEMAS = {
    "single_vowel": {},
    "consonant_class": {
        "classes": {
            "type": "array",
            "items": {"enum": sorted(c.value for c in CONSONANT_CLASSES)},
            "uniqueItems": True,
        },
        "vowels": {
            "type": ["array", "null"],
            "items": {"enum": list("aeiou")},
            "uniqueItems": True,
        },
        "extra": {
            "type": "array",
            "items": {"type": "string", "minLength": 1},
            "uniqueItems": True,
        },
    },
    "length": _RANGE,
    "frequency": _RANGE,
}

SCHEMA: dict[str, Any] = {
    "type": "object",
    "additionalProperties": False,
    "required": ["corpora", "specs"],
    "properties": {
        "corpora": {"type": "array", "items": {"type": "string", "minLength": 1}, "minItems": 1},
        "stopwords": {"type": ["string", "null"]},
        "output": {"type": ["string", "null"]},
        "specs": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["label", "source"],
                "properties": {
                    "label": {"type": "string", "minLength": 1},
                    "source": {"enum": _enum_values(Source)},
                    "filters": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["kind"],
                            "properties": {"kind": {"enum": list(_FILTER_SCHEMAS)}},
                            "allOf": [
                                {
                                    "if": {"properties": {"kind": {"const": kind}}},
                                    "then": {
                                        "properties": {"kind": {}, **props},
                                        "additionalProperties": False,
                                    },
                                }
                                for kind, props in _FILTER_SCHEMAS.items()
                            ],
                        },
                    },
                    "ordering": {
                        "type": "object",
                        "additionalProperties": False,
                        "properties": {
                            "key": {"enum": _enum_values(OrderKey)},
                            "direction": {"enum": _enum_values(Direction)},
                            "repetition": {"enum": _enum_values(Repetition)},
                        },
                    },
                    "min_count": {"type": "integer", "minimum": 1},
                    "measure": {"enum": _enum_values(Measure)},
                },
            },
        },
    },
}

_VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)


def _json_path(parts) -> str:
    path = "$"
    for part in parts:
        path += f"[{part}]" if isinstance(part, int) else f".{part}"
    return path


def _filter_from_json(obj: dict) -> FilterSpec:
    kind = obj["kind"]
    if kind == "single_vowel":
        return SingleVowel()
    if kind == "consonant_class":
        vowels = obj.get("vowels")
        return ConsonantClass(
            frozenset(SoundClass(c) for c in obj.get("classes", [])),
            None if vowels is None else frozenset(vowels),
            frozenset(obj.get("extra", [])),
        )
    cls = Length if kind == "length" else Frequency
    return cls(obj.get("min", 0), obj.get("max"))


def _filter_to_json(spec: FilterSpec) -> dict:
    if isinstance(spec, SingleVowel):
        return {"kind": "single_vowel"}
    if isinstance(spec, ConsonantClass):
        return {
            "kind": "consonant_class",
            "classes": sorted(c.value for c in spec.classes),
            "vowels": None if spec.vowels is None else sorted(spec.vowels),
            "extra": sorted(spec.extra),
        }
    kind = "length" if isinstance(spec, Length) else "frequency"
    return {"kind": kind, "min": spec.min, "max": spec.max}


def _spec_from_json(obj: dict, where: str) -> DerivationSpec:
    source = Source(obj["source"])
    if source is not Source.MEANINGFUL:
        for key in ("filters", "ordering"):
            if key in obj:
                raise ConfigError(f"not allowed for source {source.value!r}", f"{where}.{key}")
    if source is not Source.COLLOCATIONS:
        for key in ("min_count", "measure"):
            if key in obj:
                raise ConfigError(f"not allowed for source {source.value!r}", f"{where}.{key}")
    ordering = None
    if source is Source.MEANINGFUL:
        o = obj.get("ordering", {})
        default = OrderingSpec()
        ordering = OrderingSpec(
            OrderKey(o.get("key", default.key.value)),
            Direction(o.get("direction", default.direction.value)),
            Repetition(o.get("repetition", default.repetition.value)),
        )
    filters = []
    for j, f in enumerate(obj.get("filters", [])):
        spec = _filter_from_json(f)
        try:
            spec.validate()
        except SpecError as exc:
            raise ConfigError(str(exc), f"{where}.filters[{j}]") from None
        filters.append(spec)
    return DerivationSpec(
        label=obj["label"],
        source=source,
        filters=tuple(filters),
        ordering=ordering,
        min_count=obj.get("min_count", 2),
        measure=Measure(obj.get("measure", Measure.RAW_COUNT.value)),
    )


def config_from_dict(data: Any) -> RunConfig:
    errors = sorted(_VALIDATOR.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise ConfigError(err.message, _json_path(err.absolute_path))
    specs = tuple(_spec_from_json(s, f"$.specs[{i}]") for i, s in enumerate(data["specs"]))
    labels = [s.label for s in specs]
    dupes = sorted({label for label in labels if labels.count(label) > 1})
    if dupes:
        raise ConfigError(f"duplicate labels: {', '.join(dupes)}", "$.specs")
    return RunConfig(
        corpus_paths=tuple(data["corpora"]),
        specs=specs,
        stopword_path=data.get("stopwords"),
        output_path=data.get("output"),
    )


def parse_config(text: str) -> RunConfig:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None
    return config_from_dict(data)


def spec_to_dict(spec: DerivationSpec) -> dict:
    out: dict[str, Any] = {"label": spec.label, "source": spec.source.value}
    if spec.source is Source.MEANINGFUL:
        out["filters"] = [_filter_to_json(f) for f in spec.filters]
        out["ordering"] = {
            "key": spec.ordering.key.value,
            "direction": spec.ordering.direction.value,
            "repetition": spec.ordering.repetition.value,
        }
    elif spec.source is Source.COLLOCATIONS:
        out["min_count"] = spec.min_count
        out["measure"] = spec.measure.value
    return out


def serialize_config(config: RunConfig) -> str:
    data = {
        "corpora": list(config.corpus_paths),
        "stopwords": config.stopword_path,
        "output": config.output_path,
        "specs": [spec_to_dict(s) for s in config.specs],
    }
    return json.dumps(data, ensure_ascii=False, indent=2) + "\n"


def _meaningful(label, key, direction=Direction.ASCENDING, repetition=Repetition.DEDUPLICATED, filters=()):
    return DerivationSpec(label, Source.MEANINGFUL, tuple(filters), OrderingSpec(key, direction, repetition))


_INC = OrderKey.INCIDENCE
_DESC = Direction.DESCENDING
_REP = Repetition.WITH_REPETITIONS
_P = SoundClass.PLOSIVE
_F = SoundClass.FRICATIVE

# One section per selected criterion, in the order they are listed:
# raw orderings, single vowel, consonant classes, boundaries, collocations.
DEFAULT_SPECS: tuple[DerivationSpec, ...] = (
    _meaningful("incidence", _INC, _DESC),
    _meaningful("incidence-repeated", _INC, _DESC, _REP),
    _meaningful("alphabetic", OrderKey.ALPHABETIC),
    _meaningful("alphabetic-repeated", OrderKey.ALPHABETIC, repetition=_REP),
    _meaningful("length", OrderKey.LENGTH),
    _meaningful("length-repeated", OrderKey.LENGTH, repetition=_REP),
    _meaningful("single-vowel", _INC, _DESC, filters=[SingleVowel()]),
    _meaningful("fricatives", _INC, _DESC, filters=[ConsonantClass({_F})]),
    _meaningful("plosives", _INC, _DESC, filters=[ConsonantClass({_P})]),
    _meaningful("fricatives-plosives", _INC, _DESC, filters=[ConsonantClass({_F, _P})]),
    _meaningful(
        "plosives-m-ae", _INC, _DESC,
        filters=[ConsonantClass({_P}, frozenset("ae"), frozenset("m"))],
    ),
    DerivationSpec("sentence-boundaries", Source.BOUNDARIES),
    DerivationSpec("collocations", Source.COLLOCATIONS, min_count=2, measure=Measure.RAW_COUNT),
)
