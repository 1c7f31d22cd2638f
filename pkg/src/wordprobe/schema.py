"""JSON schemas for everything the CLI prints with ``--format json``."""

RESULT_SCHEMA = {
    "type": "object",
    "required": ["id", "description", "status", "kind", "parameters", "details"],
    "properties": {
        "id": {"type": "string", "pattern": "^C[0-9]+$"},
        "description": {"type": "string"},
        "status": {"enum": ["pass", "fail", "error"]},
        "kind": {"enum": ["exact", "evidence"]},
        "parameters": {"type": "object"},
        "details": {"type": "object"},
        "runtime_ms": {"type": "number", "minimum": 0},
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["version", "config", "results", "summary"],
    "properties": {
        "version": {"type": "string"},
        "config": {"type": "object"},
        "results": {"type": "array", "items": RESULT_SCHEMA},
        "summary": {
            "type": "object",
            "required": ["pass", "fail", "error"],
            "properties": {k: {"type": "integer", "minimum": 0} for k in ("pass", "fail", "error")},
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}

COMMAND_SCHEMA = {
    "type": "object",
    "required": ["version", "command", "family", "source_length", "ok", "result"],
    "properties": {
        "version": {"type": "string"},
        "command": {"enum": ["gen", "palindromes", "factors", "closure", "recurrence", "decompose"]},
        "family": {"enum": ["x", "y", "z", "t", "gx", "ft"]},
        "source_length": {"type": "integer", "minimum": 0},
        "ok": {"type": "boolean"},
        "result": {"type": "object"},
    },
    "additionalProperties": False,
}
