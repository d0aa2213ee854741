from __future__ import annotations

import time
from typing import Any, Callable, List, Tuple

from . import msg
from .errors import (DomainError, ResourceCapExceeded, InternalConsistencyError,
                    VerificationFailure)

PASS, FAIL, SKIPPED = 'pass', 'fail', 'skipped'

def primes_label(primes: List[int]) -> str:
    """[2, 3, 5] -> '2-3-5' (used in file names)"""
    return '-'.join(str(p) for p in primes)

def jsonable(value: Any) -> Any:
    """Converts check details to something json.dumps accepts.

    Anything with a to_dict (CycloElem, reports, ...) uses it, sympy numbers
    become int or str, everything else unknown becomes its str.
    """
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, 'to_dict'):
        return jsonable(value.to_dict())
    if hasattr(value, 'denominator') and int(value.denominator) == 1:
        return int(value.numerator)
    return str(value)

def run_check(name: str, parameters: dict, check: Callable[[], Tuple[bool, Any]]) -> Tuple[str, Any, float]:
    """Runs one check and returns (status, detail, wall time in seconds).

    The check returns (passed, detail). Failed identities and inexact
    divisions give 'fail', exceeded caps give 'skipped'.
    """
    t0 = time.perf_counter()
    try:
        passed, detail = check()
        status = PASS if passed else FAIL
    except (VerificationFailure, InternalConsistencyError) as e:
        status = FAIL
        detail = {'error': str(e)}
        if getattr(e, 'difference', None) is not None:
            detail['difference'] = str(e.difference)
    except ResourceCapExceeded as e:
        status = SKIPPED
        detail = {'skipped': str(e)}
        msg.templates('cap')
    except DomainError as e:
        status = FAIL
        detail = {'error': str(e)}
    seconds = time.perf_counter() - t0
    msg.verdict(f"{name} {parameters}", status, seconds)
    return status, jsonable(detail), seconds
