"""Map-definition files and map name resolution

A map-definition file is a UTF-8 JSON object with exactly the keys x, y, z, t,
each an expression over x, y, z, t, U (and the ring's parameters). A map can be
named by built-in name, by file path, or by the bare name of a file in the
maps directory.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from krw.errors import MapFileError, UnknownNameError
from krw.expmap import BUILTIN_MAPS, ExpMap, expmap_builtin, expmap_load
from krw.models import MapDefinition
from krw.names import suggest
from krw.parser import parse_polynomial
from krw.poly import GENERATORS, U
from krw.quotient import QuotientRingSpec
from krw.settings import get_settings

logger = logging.getLogger(__name__)


def read_map_definition(path: Path) -> MapDefinition:
    """Read and validate a map-definition file

    Raises:
        MapFileError: unreadable file, invalid JSON, missing or unknown keys
    """
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise MapFileError(f"cannot read map file {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise MapFileError(f"map file {path} is not valid JSON: {e.msg} at line {e.lineno}") from None
    if not isinstance(raw, dict):
        raise MapFileError(f"map file {path} must contain a JSON object")
    try:
        return MapDefinition(**raw)
    except ValidationError as e:
        problems = []
        for err in e.errors():
            key = ".".join(str(p) for p in err["loc"])
            if err["type"] == "extra_forbidden":
                problems.append(f"unknown key '{key}'")
            elif err["type"] == "missing":
                problems.append(f"missing key '{key}'")
            else:
                problems.append(f"{key}: {err['msg']}")
        raise MapFileError(f"map file {path}: {'; '.join(problems)}") from None


def map_from_definition(definition: MapDefinition, ring: QuotientRingSpec, name: str) -> ExpMap:
    allowed = GENERATORS + (U,) + ring.parameters()
    images = {sym: parse_polynomial(getattr(definition, sym.name), allowed) for sym in GENERATORS}
    return expmap_load(images, ring, name=name)


def load_map_file(path: Path, ring: QuotientRingSpec) -> ExpMap:
    definition = read_map_definition(path)
    logger.info(f"Loaded map definition {path}")
    return map_from_definition(definition, ring, name=path.stem)


def _available(maps_dir: Path):
    names = set(BUILTIN_MAPS)
    if maps_dir.is_dir():
        names.update(p.stem for p in maps_dir.glob("*.json"))
    return names


def resolve_map(spec: str, ring: QuotientRingSpec, maps_dir: Optional[str] = None) -> ExpMap:
    """Built-in map, map file path, or map file in the maps directory

    Raises:
        UnknownNameError: spec names nothing, with the closest known name
        MapFileError: the named file is malformed
    """
    if spec in BUILTIN_MAPS:
        return expmap_builtin(spec, ring)
    directory = Path(maps_dir if maps_dir is not None else get_settings().maps_dir)
    path = Path(spec)
    if path.is_file():
        return load_map_file(path, ring)
    candidate = directory / f"{spec}.json"
    if candidate.is_file():
        return load_map_file(candidate, ring)
    raise UnknownNameError("map", spec, suggest(spec, _available(directory)))
