"""JSON Schemas for the ``--json`` documents emitted by the CLI."""

SCHEMA_VERSION = 1

_header = {
    "schemaVersion": {"const": SCHEMA_VERSION},
    "command": {"type": "string"},
}

_name_list = {"type": "array", "items": {"type": "string"}}

WITNESS = {
    "type": "object",
    "required": ["vertices", "arcs", "added"],
    "properties": {
        "vertices": _name_list,
        "arcs": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
        },
        "added": _name_list,
    },
    "additionalProperties": False,
}

BOUNDS = {
    "type": "object",
    "required": ["schemaVersion", "command", "sizeBound", "degreeBound", "best", "sizeBoundVacuous"],
    "properties": {
        **_header,
        "command": {"const": "bounds"},
        "sizeBound": {"type": "integer"},
        "degreeBound": {"type": "integer", "minimum": 0},
        "best": {"type": "integer", "minimum": 0},
        "sizeBoundVacuous": {"type": "boolean"},
    },
    "additionalProperties": False,
}

EXACT = {
    "type": "object",
    "required": ["schemaVersion", "command", "hk", "status", "nodesExplored", "lowerBound", "witness"],
    "properties": {
        **_header,
        "command": {"const": "exact"},
        "hk": {"type": "integer", "minimum": 0},
        "status": {"enum": ["proved", "budget-exhausted-upper-bound"]},
        "nodesExplored": {"type": "integer", "minimum": 0},
        "lowerBound": {"type": "integer", "minimum": 0},
        "witness": WITNESS,
    },
    "additionalProperties": False,
}

VERIFY = {
    "type": "object",
    "required": ["schemaVersion", "command", "ok", "k", "failure"],
    "properties": {
        **_header,
        "command": {"const": "verify"},
        "ok": {"type": "boolean"},
        "k": {"type": "integer", "minimum": 0},
        "failure": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["kind", "vertices"],
                    "properties": {
                        "kind": {"enum": ["vertex-mismatch", "cycle", "extra-edge", "missing-edge"]},
                        "vertices": _name_list,
                    },
                    "additionalProperties": False,
                },
            ]
        },
    },
    "additionalProperties": False,
}

BY_COMMAND = {"bounds": BOUNDS, "exact": EXACT, "verify": VERIFY}
