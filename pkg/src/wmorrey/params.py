from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class MorreyParams:
    """Coordinates ``(p, lambda1, lambda2)`` of a space in dimension ``n``."""

    p: float
    lambda1: float
    lambda2: float
    n: int = 1

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError(f"p must be >= 1, got {self.p}")
        if self.n not in (1, 2):
            raise ValueError(f"dimension must be 1 or 2, got {self.n}")
        for name in ("p", "lambda1", "lambda2"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def lam(self) -> tuple[float, float]:
        return (self.lambda1, self.lambda2)

    def replace(self, **changes) -> "MorreyParams":
        data = dict(p=self.p, lambda1=self.lambda1, lambda2=self.lambda2, n=self.n)
        data.update(changes)
        return MorreyParams(**data)
