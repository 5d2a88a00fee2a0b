"""Name resolution helpers

Resolves user-supplied names (identifiers, map names, grading names) against a
known vocabulary and proposes the closest known name when resolution fails.
"""

import logging
from typing import Iterable, Optional

from rapidfuzz import fuzz, process

logger = logging.getLogger(__name__)

# Below this similarity a suggestion is more confusing than helpful
SUGGEST_THRESHOLD = 60.0


def suggest(name: str, vocabulary: Iterable[str]) -> Optional[str]:
    """Closest vocabulary entry to name, if any is similar enough

    Args:
        name: The unresolved name
        vocabulary: Known names

    Returns:
        The best match or None
    """
    choices = sorted(set(vocabulary))
    if not choices:
        return None
    match = process.extractOne(name, choices, scorer=fuzz.ratio)
    if match is None:
        return None
    best, score, _ = match
    logger.debug(f"Suggestion for '{name}': '{best}' (score={score:.1f})")
    return best if score >= SUGGEST_THRESHOLD else None
