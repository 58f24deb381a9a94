"""
Group files: {"name": ..., "degree": n, "generators": [[images], ...]}
"""

import json
import logging
from pathlib import Path
from typing import Any, List, Union

from ..core.exceptions import ParseError
from ..perm.group import FiniteGroup, generate
from ..perm.permutation import Permutation

logger = logging.getLogger(__name__)


def _parse_generator(raw: Any, degree: int, field: str) -> Permutation:
    if not isinstance(raw, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in raw):
        raise ParseError("expected a list of integers", field=field)
    if len(raw) != degree:
        raise ParseError(f"has {len(raw)} images, degree is {degree}", field=field)
    try:
        return Permutation(tuple(raw))
    except ValueError as e:
        raise ParseError(str(e), field=field)


def group_from_dict(data: Any) -> FiniteGroup:
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object", field="<root>")

    name = data.get("name", "")
    if not isinstance(name, str):
        raise ParseError("expected a string", field="name")

    degree = data.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise ParseError("expected a positive integer", field="degree")

    raw_generators = data.get("generators")
    if not isinstance(raw_generators, list) or not raw_generators:
        raise ParseError("expected a nonempty list", field="generators")

    generators: List[Permutation] = [
        _parse_generator(raw, degree, f"generators[{i}]") for i, raw in enumerate(raw_generators)
    ]
    return generate(degree, generators, name=name)


def group_to_dict(G: FiniteGroup) -> dict:
    return {
        "name": G.name,
        "degree": G.degree,
        "generators": [list(g.images) for g in G.generators],
    }


def load_group(path: Union[str, Path]) -> FiniteGroup:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        logger.error(f"Failed to parse group file {path}: {e}")
        raise ParseError(e.msg, field="<json>", line=e.lineno)
    except UnicodeDecodeError as e:
        logger.error(f"Group file {path} is not UTF-8: {e}")
        raise ParseError(f"not valid UTF-8 at byte {e.start}", field="<json>")
    group = group_from_dict(data)
    logger.info(f"Loaded {group.label} from {path}")
    return group


def save_group(G: FiniteGroup, path: Union[str, Path]):
    path = Path(path)
    path.write_text(json.dumps(group_to_dict(G), indent=2) + "\n")
    logger.info(f"Saved {G.label} to {path}")
