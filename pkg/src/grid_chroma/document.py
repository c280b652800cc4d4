"""JSON coloring documents and PPM rendering."""
from __future__ import annotations

import colorsys
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .coloring import GridColoring, Method
from .geometry import GeneratorBasis, IntVec2
from .hops import RadioParams

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    pass


@dataclass
class ColoringDocument:
    """Serialized window of a coloring.

    ``colors`` is row-major: entry ``r * width + c`` is node
    ``(origin[0] + c, origin[1] + r)``. ``range`` keeps the decimal text
    it was given so it parses back to the same rational.
    """

    range: str
    hops: int
    method: str
    width: int
    height: int
    origin: list[int]
    num_colors: int
    colors: list[int]
    vectors: list[list[int]] | None = None
    heuristic: str | None = None
    seed: int | None = None
    schema_version: int = SCHEMA_VERSION
    extra: dict = field(default_factory=dict)

    def validate(self) -> None:
        if self.schema_version != SCHEMA_VERSION:
            raise DocumentError(f"unsupported schema_version {self.schema_version}")
        if self.width < 1 or self.height < 1:
            raise DocumentError("width and height must be positive")
        if len(self.colors) != self.width * self.height:
            raise DocumentError(f"expected {self.width * self.height} colors, got {len(self.colors)}")
        if self.num_colors < 1:
            raise DocumentError("num_colors must be positive")
        bad = [c for c in self.colors if not isinstance(c, int) or not 0 <= c < self.num_colors]
        if bad:
            raise DocumentError(f"color {bad[0]!r} outside [0, {self.num_colors})")
        if len(self.origin) != 2:
            raise DocumentError("origin must have two coordinates")
        if self.vectors is not None:
            if len(self.vectors) != 2 or any(len(v) != 2 for v in self.vectors):
                raise DocumentError("vectors must be [[x1, y1], [x2, y2]]")
        try:
            RadioParams(Fraction(self.range), self.hops)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"bad radio parameters: {exc}") from None

    @property
    def params(self) -> RadioParams:
        return RadioParams(Fraction(self.range), self.hops)

    def grid(self) -> np.ndarray:
        return np.asarray(self.colors, dtype=np.int64).reshape(self.height, self.width)

    def to_json(self) -> str:
        data = asdict(self)
        if not data["extra"]:
            del data["extra"]
        return json.dumps(data, indent=None, separators=(",", ":"), sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ColoringDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not JSON: {exc}") from None
        if not isinstance(data, dict):
            raise DocumentError("document must be a JSON object")
        try:
            doc = cls(**data)
        except TypeError as exc:
            raise DocumentError(str(exc)) from None
        doc.validate()
        return doc


def document_from_coloring(coloring: GridColoring, range_text: str | None = None) -> ColoringDocument:
    params = coloring.params
    heur = coloring.heuristic
    doc = ColoringDocument(
        range=range_text if range_text is not None else str(params.range),
        hops=params.hops,
        method=coloring.method.value,
        width=coloring.width,
        height=coloring.height,
        origin=[coloring.origin.x, coloring.origin.y],
        num_colors=coloring.num_colors,
        colors=[int(c) for c in coloring.colors.ravel()],
        vectors=coloring.basis.as_list() if coloring.basis is not None else None,
        heuristic=heur.kind.value if heur is not None else None,
        seed=heur.seed if heur is not None else None,
    )
    doc.validate()
    return doc


def coloring_from_document(doc: ColoringDocument) -> GridColoring:
    basis = GeneratorBasis.from_coords(*doc.vectors[0], *doc.vectors[1]) if doc.vectors else None
    return GridColoring(doc.width, doc.height, IntVec2(*doc.origin), doc.params, basis,
                        Method(doc.method), doc.grid())


def palette_rgb(n: int) -> list[tuple[int, int, int]]:
    """``n`` distinct 8-bit colors with evenly spaced hues."""
    out = []
    seen = set()
    for i in range(n):
        v = 0.95
        while True:
            r, g, b = colorsys.hsv_to_rgb(i / n, 0.8, v)
            rgb = (round(r * 255), round(g * 255), round(b * 255))
            if rgb not in seen:
                break
            v -= 1 / 255
        seen.add(rgb)
        out.append(rgb)
    return out


def render_ppm(doc: ColoringDocument, block: int = 8) -> bytes:
    """Binary PPM (P6) with one ``block x block`` square per node.

    The image's top row is the window's largest ``y``.
    """
    if block < 1:
        raise ValueError("block must be positive")
    pal = np.array(palette_rgb(doc.num_colors), dtype=np.uint8)
    img = pal[doc.grid()[::-1]]
    img = np.repeat(np.repeat(img, block, axis=0), block, axis=1)
    header = f"P6\n{doc.width * block} {doc.height * block}\n255\n".encode("ascii")
    return header + img.tobytes()
