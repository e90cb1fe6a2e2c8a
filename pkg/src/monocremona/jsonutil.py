"""Deterministic JSON rendering with short scalar lists kept inline."""

import json


def _no_dict(obj) -> bool:
    if isinstance(obj, dict):
        return False
    if isinstance(obj, list):
        return all(_no_dict(v) for v in obj)
    return True


def _render(obj, level: int) -> str:
    pad = "  " * level
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        inner = ",\n".join(
            f"{pad}  {json.dumps(str(k))}: {_render(v, level + 1)}"
            for k, v in obj.items()
        )
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        flat = json.dumps(obj)
        if _no_dict(obj) and len(flat) <= 72:
            return flat
        inner = ",\n".join(f"{pad}  {_render(v, level + 1)}" for v in obj)
        return "[\n" + inner + "\n" + pad + "]"
    return json.dumps(obj)


def dumps(obj) -> str:
    return _render(obj, 0)
