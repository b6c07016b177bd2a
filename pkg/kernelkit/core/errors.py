from typing import Optional


class KernelkitError(Exception):
    """Base error; carries a readable detail and the exit code the CLI maps it to."""

    exit_code = 1

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


class InputError(KernelkitError):
    """Bad vertex ids, wrong problem kind, malformed lists."""

    exit_code = 2


class ParseError(InputError):
    def __init__(self, line_no: int, detail: str):
        super().__init__(f"line {line_no}: {detail}")
        self.line_no = line_no


class ContractError(KernelkitError):
    """A precondition of an algorithm does not hold."""

    exit_code = 1


class SolverSizeError(KernelkitError):
    exit_code = 2

    def __init__(self, m: int, limit: int):
        super().__init__(f"instance has {m} edges, solver limit is {limit}")
        self.m = m
        self.limit = limit
