"""Structured warnings and the field policy shared by the solver stages."""

from dataclasses import dataclass, field

from .exactmath.field import FieldSpec, QQ, squarefree_decompose

UNSUPPORTED_EXTENSION = "unsupported_extension"
SKIPPED_FACTOR = "skipped_factor"
DISCARDED_CANDIDATE = "discarded_candidate"


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str
    details: dict = field(default_factory=dict, compare=False, hash=False)

    def to_json(self):
        return {"kind": self.kind, "message": self.message, **self.details}

    def __str__(self):
        return f"[{self.kind}] {self.message}"


@dataclass(frozen=True)
class FieldPolicy:
    """``q`` (rationals only), ``qsqrt`` (a fixed Q(sqrt(D))) or ``auto``.

    ``auto`` may adjoin one square root per solution when a stage needs it.
    """

    kind: str = "auto"
    D: int = None

    @classmethod
    def parse(cls, text):
        text = (text or "auto").strip().lower()
        if text in ("q", "rationals"):
            return cls("q")
        if text == "auto":
            return cls("auto")
        if text.startswith("qsqrt:"):
            D = int(text.split(":", 1)[1])
            s, t = squarefree_decompose(D)
            if t != 1 or D in (0, 1):
                raise ValueError(f"qsqrt needs a square-free D other than 0 and 1, got {D}")
            return cls("qsqrt", D)
        raise ValueError(f"unknown field policy {text!r}; use q, qsqrt:D or auto")

    @property
    def base_field(self):
        return FieldSpec(self.D) if self.kind == "qsqrt" else QQ

    @property
    def may_extend(self):
        return self.kind == "auto"

    def __str__(self):
        return f"qsqrt:{self.D}" if self.kind == "qsqrt" else self.kind


AUTO = FieldPolicy("auto")
RATIONALS = FieldPolicy("q")
