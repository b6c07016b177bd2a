from pathlib import Path
import sys
from typing import Optional

from kernelkit.core.errors import InputError
from kernelkit.models.entities import Instance
from kernelkit.utils.instance_format import parse_instance


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    p = Path(path)
    if not p.is_file():
        raise InputError(f"no such file: {path}")
    return p.read_text(encoding="utf-8")


def load_instance(path: str) -> Instance:
    return parse_instance(read_text(path))


def write_text(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
