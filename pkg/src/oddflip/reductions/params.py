from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from ..errors import ReductionError
from ..graph import Graph
from .. import search

CLOSED_FORM = "paper"        # CLI value of --mode for the closed formulas
SAFE_MINIMAL = "safe-minimal"


def _exact_diameter(g: Graph) -> int:
    return search.diameter(g)


@dataclass(frozen=True)
class ReductionParams:
    """How the forcing-path lengths of a reduction are chosen.

    Closed-form mode (``--mode paper``) uses the closed formulas with the
    linear-diameter constant ``c_constant``. ``safe-minimal`` asks ``oracle`` for the exact flip-graph
    diameter of the part the path must dominate and takes the smallest even
    length exceeding twice that diameter. Overrides win over both modes.
    """

    mode: str = SAFE_MINIMAL
    c_constant: Optional[int] = None
    ell_override: Optional[int] = None
    L_override: Optional[int] = None
    path_len_override: Optional[int] = None
    oracle: Optional[Callable[[Graph], int]] = _exact_diameter

    def __post_init__(self):
        if self.mode not in (CLOSED_FORM, SAFE_MINIMAL):
            raise ReductionError(f"unknown mode {self.mode!r}")
        for name in ("ell_override", "L_override", "path_len_override"):
            val = getattr(self, name)
            if val is not None and (val <= 0 or val % 2):
                raise ReductionError(f"{name} must be a positive even integer, got {val}")
        if self.c_constant is not None and self.c_constant < 1:
            raise ReductionError("c_constant must be a positive integer")

    def require_c(self) -> int:
        if self.c_constant is None:
            raise ReductionError("closed-form mode needs c_constant")
        return self.c_constant

    def require_oracle(self) -> Callable[[Graph], int]:
        if self.oracle is None:
            raise ReductionError("safe-minimal mode needs a diameter oracle")
        return self.oracle


def smallest_even_above(x: int) -> int:
    return x + 1 if x % 2 else x + 2


def forcing_length(params: ReductionParams, override: Optional[int], closed_form_value,
                   core: Callable[[], Graph]) -> tuple[int, Optional[int]]:
    """Resolve one forcing-path length; returns (length, oracle diameter or None).

    ``closed_form_value`` is a thunk so the constant is only demanded in closed-form mode;
    ``core`` builds the graph whose diameter the path must dominate.
    """
    if override is not None:
        return override, None
    if params.mode == CLOSED_FORM:
        return closed_form_value(), None
    d = params.require_oracle()(core())
    return smallest_even_above(2 * d), d
