"""Link records: Seifert or Goeritz data plus the metadata the structure checks need."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import MissingData, ParseError
from .alexander import SeifertMatrix

__all__ = ["LinkRecord", "record_from_json"]


@dataclass(frozen=True)
class LinkRecord:
    name: str
    components: int
    linking: tuple[tuple[int, ...], ...]
    seifert: SeifertMatrix | None = None
    goeritz: tuple[tuple[int, ...], ...] | None = None
    chiF: int | None = None
    P: int | None = None
    kappa: int = 1

    def __post_init__(self):
        if self.components < 1:
            raise ValueError("a link has at least one component")
        lk = tuple(tuple(int(x) for x in row) for row in self.linking)
        if len(lk) != self.components or any(len(r) != self.components for r in lk):
            raise ValueError(f"{self.name}: linking matrix must be {self.components}x{self.components}")
        if any(lk[i][j] != lk[j][i] for i in range(len(lk)) for j in range(len(lk))):
            raise ValueError(f"{self.name}: linking matrix must be symmetric")
        object.__setattr__(self, "linking", lk)
        if self.seifert is None and self.goeritz is None:
            raise MissingData(f"{self.name}: needs a Seifert or a Goeritz matrix")
        if self.goeritz is not None:
            g = tuple(tuple(int(x) for x in row) for row in self.goeritz)
            if any(len(r) != len(g) for r in g):
                raise ValueError(f"{self.name}: Goeritz matrix must be square")
            object.__setattr__(self, "goeritz", g)
        if self.seifert is not None and self.components != 1:
            raise ValueError(f"{self.name}: Seifert matrices are accepted for knots only")
        if self.P is not None and self.P < abs(sum(lk[i][0] for i in range(1, self.components))):
            raise ValueError(f"{self.name}: P is smaller than the total linking with K_1")
        if not 1 <= self.kappa <= self.components:
            raise ValueError(f"{self.name}: kappa must lie between 1 and the component count")

    @property
    def is_knot(self) -> bool:
        return self.components == 1

    def lk(self, i: int, j: int) -> int:
        return self.linking[i][j]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "components": self.components,
            "linking": [list(r) for r in self.linking],
            "seifert": self.seifert.rows() if self.seifert is not None else None,
            "goeritz": [list(r) for r in self.goeritz] if self.goeritz is not None else None,
            "chiF": self.chiF,
            "P": self.P,
            "kappa": self.kappa,
        }


def _int_matrix(value, what: str):
    if value is None:
        return None
    if not isinstance(value, list) or not all(
        isinstance(r, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in r)
        for r in value
    ):
        raise ParseError(f"{what} must be a list of integer rows")
    return value


def record_from_json(obj: dict) -> LinkRecord:
    if not isinstance(obj, dict):
        raise ParseError("a link record must be a JSON object")
    missing = [k for k in ("name", "components", "linking") if k not in obj]
    if missing:
        raise ParseError(f"link record missing {', '.join(missing)}")
    name = obj["name"]
    seifert = _int_matrix(obj.get("seifert"), f"{name}: seifert")
    goeritz = _int_matrix(obj.get("goeritz"), f"{name}: goeritz")
    linking = _int_matrix(obj["linking"], f"{name}: linking")
    for key in ("components", "chiF", "P", "kappa"):
        v = obj.get(key)
        if v is not None and (not isinstance(v, int) or isinstance(v, bool)):
            raise ParseError(f"{name}: {key} must be an integer")
    try:
        return LinkRecord(
            name=str(name),
            components=obj["components"],
            linking=linking,
            seifert=SeifertMatrix(seifert) if seifert is not None else None,
            goeritz=goeritz,
            chiF=obj.get("chiF"),
            P=obj.get("P"),
            kappa=obj.get("kappa", 1),
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
