import re
from typing import Iterable, Optional

from rapidfuzz import fuzz, process
from unidecode import unidecode

from kernelkit.core.errors import InputError
from kernelkit.models.entities import KINDS


def normalize_name(s: str) -> str:
    s = s.strip().lower()
    s = unidecode(s)
    s = re.sub(r"[^a-z0-9\s\-_]", " ", s)
    s = re.sub(r"\s+", " ", s).strip()
    # common spellings of the problem kinds
    s = s.replace("_", "-").replace("multi stc", "mstc").replace("multi-stc", "mstc")
    s = re.sub(r"^el\s+", "el-", s)
    return s


def suggest(name: str, choices: Iterable[str], cutoff: float = 50.0) -> Optional[str]:
    """Closest choice by fuzzy match on normalized names, or None below the cutoff."""
    norm_q = normalize_name(name)
    norm_map = {c: normalize_name(c) for c in choices}
    if not norm_q or not norm_map:
        return None
    # RapidFuzz tuple: (choice_value, score, choice_key)
    best = process.extract(norm_q, norm_map, scorer=fuzz.ratio, limit=1)
    if not best or best[0][1] < cutoff:
        return None
    return best[0][2]


def resolve_kind(name: str) -> str:
    norm = normalize_name(name)
    if norm in KINDS:
        return norm
    hint = suggest(name, KINDS)
    detail = f"unknown problem kind '{name}'"
    if hint:
        detail += f", did you mean '{hint}'?"
    raise InputError(detail)
