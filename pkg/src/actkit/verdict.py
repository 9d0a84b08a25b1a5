from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """A boolean decision together with a witness.

    Truthiness follows ``holds`` so verdicts can be used directly in
    conditions. On failure ``witness`` is whatever refutes the property;
    on success it may carry a certificate (or be None).
    """

    holds: bool
    witness: Any = None

    def __bool__(self):
        return self.holds
