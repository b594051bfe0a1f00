"""JSON formats and literal syntax shared by the CLI and file inputs.

Category files are JSON objects with a "group" literal and one of:
  * "q": {element: root literal, ...}          direct quadratic form
  * "q_gen": [...] with optional "pairings"    generator form
  * "psi"/"omega" tables                       explicit cocycle
Elements are written "(1,0)" (bare "1" for rank-one groups) in keys and as
integer arrays in emitted JSON; roots of unity use the "zN^k" literal with
"1" and "-1" as aliases.  Omitted table entries default to 1.
"""

from __future__ import annotations

import json
import re

from .cyclotomic import ONE, format_root, parse_root
from .errors import ParseError, ValidationError
from .groups import AbelianGroup, Element, format_group, parse_group
from .cocycles import (
    AbelianCocycle,
    QuadraticForm,
    cocycle_failure,
    cocycle_from_tables,
    standard_cocycle,
    trace_form,
)
from .metric import PointedBFC, make_category, preset, preset_names

_PAREN = re.compile(r"\(([^()]*)\)")


def format_element_key(g: Element) -> str:
    if len(g) == 1:
        return str(g[0])
    return "(" + ",".join(str(c) for c in g) + ")"


def _parse_args(text: str, group: AbelianGroup, count: int) -> tuple[Element, ...]:
    s = text.strip()
    if "(" in s:
        parts = _PAREN.findall(s)
    else:
        parts = [p for p in s.split(",")]
    if len(parts) != count:
        raise ParseError(f"key {text!r} should list {count} element(s)")
    out = []
    for part in parts:
        try:
            coords = tuple(int(c) for c in part.split(","))
        except ValueError as exc:
            raise ParseError(f"bad element {part!r} in key {text!r}") from exc
        if len(coords) != group.rank:
            raise ParseError(
                f"element {part!r} has {len(coords)} coordinates, expected {group.rank}"
            )
        out.append(group.reduce(coords))
    return tuple(out)


def parse_element_key(text: str, group: AbelianGroup) -> Element:
    return _parse_args(text, group, 1)[0]


def _root_table(raw: dict, group: AbelianGroup, arity: int) -> dict:
    table = {}
    for key, literal in raw.items():
        args = _parse_args(key, group, arity)
        table[args if arity > 1 else args[0]] = parse_root(str(literal))
    return table


# ----------------------------------------------------------------------
# Quadratic forms and cocycles.
# ----------------------------------------------------------------------

def qf_from_json(data: dict, group: AbelianGroup) -> QuadraticForm:
    if "q" in data:
        table = _root_table(data["q"], group, 1)
        values = tuple(table.get(g, ONE) for g in group.elements())
        return QuadraticForm(group, values)
    if "q_gen" in data:
        gens = [parse_root(str(v)) for v in data["q_gen"]]
        if len(gens) != group.rank:
            raise ParseError(
                f"q_gen lists {len(gens)} values for {group.rank} cyclic factors"
            )
        pairings = {}
        for key, literal in data.get("pairings", {}).items():
            try:
                i, j = (int(p) for p in key.split(","))
            except ValueError as exc:
                raise ParseError(f"bad pairing key {key!r}") from exc
            if not 0 <= i < j < group.rank:
                raise ParseError(f"pairing key {key!r} out of range")
            pairings[(i, j)] = parse_root(str(literal))
        values = []
        for a in group.elements():
            value = ONE
            for tau, ai in zip(gens, a):
                value = value * tau ** (ai * ai)
            for (i, j), sigma in pairings.items():
                value = value * sigma ** (a[i] * a[j])
            values.append(value)
        return QuadraticForm(group, tuple(values))
    raise ParseError('quadratic form JSON needs a "q" or "q_gen" entry')


def qf_to_json(form: QuadraticForm) -> dict:
    group = form.group
    return {
        "group": format_group(group),
        "q": {
            format_element_key(g): format_root(form.q(g))
            for g in group.elements()
            if not form.q(g).is_one
        },
    }


def cocycle_from_json(data: dict, group: AbelianGroup, validate: bool = True) -> AbelianCocycle:
    psi = _root_table(data.get("psi", {}), group, 3)
    omega = _root_table(data.get("omega", {}), group, 2)
    cocycle = cocycle_from_tables(group, psi, omega)
    if validate:
        failure = cocycle_failure(cocycle)
        if failure is not None:
            raise ValidationError(
                f"cocycle violates the {failure[0]} condition at {failure[1]}"
            )
    return cocycle


def raw_cocycle_from_source(source: str, stdin_text: str | None = None):
    """Cocycle tables without the validity gate, for diagnostic commands.

    Returns (label, cocycle or None).  Presets hand over their own (valid)
    cocycle; files and stdin are parsed but deliberately not validated.
    """
    name = source.strip()
    if name != "-" and (name.lower() in preset_names() or name.lower().startswith("double:")):
        cat = preset(name)
        return cat.label, cat.cocycle
    if name == "-":
        if stdin_text is None:
            raise ParseError("no data on stdin for category '-'")
        text = stdin_text
    else:
        try:
            with open(name, "r", encoding="utf-8") as handle:
                text = handle.read()
        except FileNotFoundError as exc:
            raise ParseError(f"cannot read {name!r}") from exc
    try:
        payload = _category_payload(json.loads(text))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{name!r} is not valid JSON: {exc}") from exc
    group = parse_group(str(payload["group"]))
    label = str(payload.get("label", ""))
    if "psi" not in payload and "omega" not in payload:
        return label, None
    return label, cocycle_from_json(payload, group, validate=False)


def cocycle_to_json(cocycle: AbelianCocycle) -> dict:
    group = cocycle.group
    elems = group.elements()
    psi = {}
    omega = {}
    for a in elems:
        for b in elems:
            value = cocycle.omega_at(a, b)
            if not value.is_one:
                key = f"{format_element_key(a)},{format_element_key(b)}"
                omega[key] = format_root(value)
            for c in elems:
                value = cocycle.psi_at(a, b, c)
                if not value.is_one:
                    key = ",".join(format_element_key(x) for x in (a, b, c))
                    psi[key] = format_root(value)
    return {"group": format_group(group), "psi": psi, "omega": omega}


# ----------------------------------------------------------------------
# Categories.
# ----------------------------------------------------------------------

def _category_payload(data):
    """Find the category object: the JSON itself, or one nested in a run report."""
    if not isinstance(data, dict):
        raise ParseError("category JSON must be an object")
    nested = data.get("category")
    if isinstance(nested, dict) and "group" in nested:
        return nested
    if isinstance(data.get("results"), dict):
        return _category_payload(data["results"])
    if "group" in data:
        return data
    raise ParseError('category JSON needs a "group" literal')


def category_from_json(data: dict) -> PointedBFC:
    payload = _category_payload(data)
    group = parse_group(str(payload["group"]))
    label = str(payload.get("label", ""))
    cocycle = None
    if "psi" in payload or "omega" in payload:
        cocycle = cocycle_from_json(payload, group)
    if "q" in payload or "q_gen" in payload:
        form = qf_from_json(payload, group)
        if cocycle is None:
            cocycle = standard_cocycle(form)
    elif cocycle is not None:
        form = trace_form(cocycle)
    else:
        raise ParseError('category JSON needs "q", "q_gen" or cocycle tables')
    return make_category(form, cocycle, label)


def category_to_json(category: PointedBFC) -> dict:
    out = {"label": category.label}
    out.update(qf_to_json(category.form))
    if category.cocycle is not None:
        tables = cocycle_to_json(category.cocycle)
        out["psi"] = tables["psi"]
        out["omega"] = tables["omega"]
    return out


def load_category(source: str, stdin_text: str | None = None) -> PointedBFC:
    """Resolve a category argument: preset name, "-" for stdin, or a JSON file."""
    name = source.strip()
    if name == "-":
        if stdin_text is None:
            raise ParseError("no data on stdin for category '-'")
        try:
            data = json.loads(stdin_text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"stdin is not valid JSON: {exc}") from exc
        return category_from_json(data)
    if name.lower() in preset_names() or name.lower().startswith("double:"):
        return preset(name)
    try:
        with open(name, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except FileNotFoundError as exc:
        raise ParseError(
            f"{name!r} is neither a preset ({', '.join(preset_names())}, "
            f"double:<group>) nor a readable file"
        ) from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{name!r} is not valid JSON: {exc}") from exc
    return category_from_json(data)


# ----------------------------------------------------------------------
# Report fragments.
# ----------------------------------------------------------------------

def element_array(g: Element) -> list[int]:
    return list(g)


def matrix_strings(roots) -> list[list[str]]:
    return [[format_root(r) for r in row] for row in roots]
