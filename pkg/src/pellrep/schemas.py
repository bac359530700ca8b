"""JSON schemas for every CLI payload, plus a validation helper.

``pellrep <command> --format json`` output validates against the schema
registered here for that command.
"""

from __future__ import annotations

import jsonschema

_INTERVAL = {
    "type": "object",
    "properties": {"lo": {"type": "number"}, "hi": {"type": "number"}},
    "required": ["lo", "hi"],
    "additionalProperties": False,
}

_DIGIT_STRING_MAP = {
    "type": "object",
    "patternProperties": {r"^(?:[2-9]|10)$": {"type": "string", "pattern": r"^\d+$"}},
    "additionalProperties": False,
}

_LEDGER = {
    "type": "object",
    "properties": {
        "sequence": {"enum": ["pell", "pell-lucas"]},
        "c_first": _INTERVAL,
        "c_second": _INTERVAL,
        "n_max": {"type": "string", "pattern": r"^\d+$"},
        "l1l2_max_by_base": _DIGIT_STRING_MAP,
        "computed_l1l2_by_base": _DIGIT_STRING_MAP,
        "threshold": {"type": "integer"},
    },
    "required": ["sequence", "c_first", "c_second", "n_max",
                 "l1l2_max_by_base", "computed_l1l2_by_base", "threshold"],
    "additionalProperties": False,
}

_BINDING = {
    "type": ["object", "null"],
    "properties": {
        "params": {"type": "object"},
        "method": {"enum": ["baker-davenport", "legendre"]},
        "q_used": {"type": "string"},
        "epsilon_lo": {"type": "number"},
        "w_max": {"type": "integer"},
        "a_m": {"type": "integer"},
        "convergent_index": {"type": "integer"},
        "q_n": {"type": "string"},
    },
    "required": ["method", "w_max"],
}

_FAMILY = {
    "type": "object",
    "properties": {
        "sequence": {"enum": ["pell", "pell-lucas"]},
        "base": {"type": "integer", "minimum": 2, "maximum": 10},
        "stage": {"enum": ["l1", "n"]},
        "bound": {"type": "integer"},
        "instances": {"type": "integer"},
        "binding": _BINDING,
    },
    "required": ["sequence", "base", "stage", "bound", "instances"],
    "additionalProperties": False,
}

_SOLUTION = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["pell", "pell-lucas"]},
        "n": {"type": "integer", "minimum": 0},
        "value": {"type": "integer", "minimum": 1},
        "base": {"type": "integer", "minimum": 2, "maximum": 10},
        "d1": {"type": "integer", "minimum": 1, "maximum": 9},
        "l1": {"type": "integer", "minimum": 1},
        "d2": {"type": "integer", "minimum": 0, "maximum": 9},
        "l2": {"type": "integer", "minimum": 1},
        "digits": {"type": "string", "pattern": r"^\d+$"},
    },
    "required": ["kind", "n", "value", "base", "d1", "l1", "d2", "l2", "digits"],
    "additionalProperties": False,
}

SOLVE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "sequence": {"enum": ["pell", "pell-lucas"]},
        "ledger": _LEDGER,
        "family_bounds": {"type": "array", "items": _FAMILY},
        "search_box": {
            "type": "object",
            "properties": {
                "n_max": {"type": "integer"},
                "l1_max": {"type": "object"},
                "l2_max": {"type": "object"},
            },
            "required": ["n_max", "l1_max", "l2_max"],
        },
        "solutions": {"type": "array", "items": _SOLUTION},
    },
    "required": ["sequence", "ledger", "family_bounds", "search_box", "solutions"],
    "additionalProperties": False,
}

BOUNDS_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    **_LEDGER,
}

REDUCE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "array",
    "items": _FAMILY,
}

CONTFRAC_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "expr": {"type": "string"},
        "quotients": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "convergents": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "string", "pattern": r"^\d+$"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
    "required": ["expr", "quotients", "convergents"],
    "additionalProperties": False,
}

CHECK_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": ["object", "null"],
    "properties": {
        "d1": {"type": "integer", "minimum": 1, "maximum": 9},
        "l1": {"type": "integer", "minimum": 1},
        "d2": {"type": "integer", "minimum": 0, "maximum": 9},
        "l2": {"type": "integer", "minimum": 1},
    },
    "required": ["d1", "l1", "d2", "l2"],
    "additionalProperties": False,
}

SCHEMAS = {
    "solve": SOLVE_SCHEMA,
    "bounds": BOUNDS_SCHEMA,
    "reduce": REDUCE_SCHEMA,
    "contfrac": CONTFRAC_SCHEMA,
    "check": CHECK_SCHEMA,
}


def validate_payload(command: str, payload) -> None:
    """Raise jsonschema.ValidationError when the payload does not conform."""
    jsonschema.validate(payload, SCHEMAS[command])
