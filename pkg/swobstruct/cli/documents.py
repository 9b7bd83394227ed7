"""Pydantic models of the single-file input document and its conversion to
lattices, actions and characteristic vectors.

Every failure is reported as a ``DocumentError`` whose path points into the
document, e.g. ``lattice.summands.1.matrix``.
"""

import json
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated, Any, Dict, Iterator, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from swobstruct.errors import DocumentError, InputError
from swobstruct.isometry.base import (
    ActionShape,
    GroupAction,
    Isometry,
    make_action,
    reflection,
    verify_isometry,
)
from swobstruct.isometry.blocks import (
    ActOn,
    BlockOp,
    Cycle,
    MatrixOp,
    MinusIdOn,
    ReflectionOp,
    Swap,
    block_builder,
)
from swobstruct.lattice.base import Lattice, Summand, make_lattice, vector


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class DiagSummandModel(_Strict):
    kind: Literal["diag"]
    entries: List[int] = Field(..., min_length=1, description="Diagonal entries, each +1 or -1")
    count: int = Field(1, ge=1)


class HyperbolicSummandModel(_Strict):
    kind: Literal["H"]
    count: int = Field(1, ge=1)


class E8SummandModel(_Strict):
    kind: Literal["E8"]
    sign: Literal[1, -1] = Field(1, description="+1 for E8, -1 for -E8")
    count: int = Field(1, ge=1)


class GramSummandModel(_Strict):
    kind: Literal["gram"]
    matrix: List[List[int]] = Field(..., min_length=1, description="Symmetric unimodular matrix")
    count: int = Field(1, ge=1)


SummandModel = Annotated[
    Union[DiagSummandModel, HyperbolicSummandModel, E8SummandModel, GramSummandModel],
    Field(discriminator="kind"),
]


class LatticeModel(_Strict):
    summands: List[SummandModel] = Field(..., min_length=1)


class ActOnModel(_Strict):
    blocks: List[int] = Field(..., min_length=1)
    rows: List[List[int]] = Field(..., min_length=1)


class BlockOpModel(_Strict):
    """One block operation; exactly one key must be present."""

    minus_id_on: Optional[List[int]] = None
    swap: Optional[Tuple[int, int]] = None
    cycle: Optional[List[int]] = None
    reflection: Optional[List[int]] = None
    matrix: Optional[List[List[int]]] = None
    act_on: Optional[ActOnModel] = None

    @model_validator(mode="after")
    def check_single_key(self) -> "BlockOpModel":
        present = [name for name, value in self if value is not None]
        if len(present) != 1:
            raise ValueError(
                "a block op needs exactly one of minus_id_on, swap, cycle, reflection, "
                f"matrix, act_on; got {present or 'none'}"
            )
        return self

    def to_op(self) -> BlockOp:
        if self.minus_id_on is not None:
            return MinusIdOn(tuple(self.minus_id_on))
        if self.swap is not None:
            return Swap(*self.swap)
        if self.cycle is not None:
            return Cycle(tuple(self.cycle))
        if self.reflection is not None:
            return ReflectionOp(tuple(self.reflection))
        if self.matrix is not None:
            return MatrixOp(tuple(tuple(r) for r in self.matrix))
        assert self.act_on is not None
        return ActOn(tuple(self.act_on.blocks), tuple(tuple(r) for r in self.act_on.rows))


class MatrixGeneratorModel(_Strict):
    type: Literal["matrix"]
    rows: List[List[int]]


class ReflectionGeneratorModel(_Strict):
    type: Literal["reflection"]
    vector: List[int]


class BlocksGeneratorModel(_Strict):
    type: Literal["blocks"]
    ops: List[BlockOpModel] = Field(default_factory=list)


GeneratorModel = Annotated[
    Union[MatrixGeneratorModel, ReflectionGeneratorModel, BlocksGeneratorModel],
    Field(discriminator="type"),
]


class ActionModel(_Strict):
    shape: ActionShape
    k: Optional[int] = Field(None, description="Order of the cyclic group")
    d: Optional[int] = Field(None, description="Rank of the free abelian group")
    generators: List[GeneratorModel] = Field(..., min_length=1)

    @model_validator(mode="after")
    def check_shape_fields(self) -> "ActionModel":
        if self.shape == ActionShape.CYCLIC and self.k is None:
            raise ValueError("cyclic actions need k")
        if self.d is not None and self.d != len(self.generators):
            raise ValueError(f"d = {self.d} but {len(self.generators)} generators are given")
        return self


class OptionsModel(_Strict):
    format: Optional[Literal["json", "text"]] = None
    all_splits: bool = True


class InputDocument(_Strict):
    """Lattice, action and characteristic vector of one check."""

    lattice: LatticeModel
    action: Optional[ActionModel] = None
    characteristic: Optional[List[int]] = None
    options: OptionsModel = Field(default_factory=OptionsModel)

    def build_lattice(self) -> Lattice:
        summands = []
        for i, s in enumerate(self.lattice.summands):
            path = f"lattice.summands.{i}"
            if isinstance(s, DiagSummandModel):
                with _located(f"{path}.entries"):
                    summands.append(Summand.diag(s.entries, count=s.count))
            elif isinstance(s, HyperbolicSummandModel):
                summands.append(Summand.hyperbolic(count=s.count))
            elif isinstance(s, E8SummandModel):
                summands.append(Summand.e8(sign=s.sign, count=s.count))
            else:
                with _located(f"{path}.matrix"):
                    summands.append(Summand.gram(s.matrix, count=s.count))
        with _located("lattice"):
            return make_lattice(summands)

    def build_action(self, l: Lattice) -> GroupAction:
        if self.action is None:
            raise DocumentError("field required for this command", "action")
        generators = [
            _build_generator(l, g, f"action.generators.{i}")
            for i, g in enumerate(self.action.generators)
        ]
        with _located("action"):
            return make_action(self.action.shape, generators, k=self.action.k, strict=False)

    def build_characteristic(self, l: Lattice) -> Tuple[int, ...]:
        if self.characteristic is None:
            raise DocumentError("field required for this command", "characteristic")
        with _located("characteristic"):
            return tuple(int(x) for x in vector(l, self.characteristic))


@contextmanager
def _located(path: str) -> Iterator[None]:
    """Re-raise domain input errors as document errors at ``path``."""
    try:
        yield
    except DocumentError:
        raise
    except InputError as e:
        raise DocumentError(e.message, path, original_error=e) from e


def _build_generator(l: Lattice, g: Any, path: str) -> Isometry:
    with _located(path):
        if isinstance(g, MatrixGeneratorModel):
            return verify_isometry(l, g.rows)
        if isinstance(g, ReflectionGeneratorModel):
            return reflection(l, g.vector)
    with _located(f"{path}.ops"):
        return block_builder(l, [op.to_op() for op in g.ops])


def _error_path(data: Any, loc: Tuple[Any, ...]) -> str:
    """Dotted document path of a validation error location.

    Pydantic inserts the tag of a discriminated union member into ``loc``;
    those entries are dropped so the path matches the document.
    """
    parts = []
    node = data
    for part in loc:
        if isinstance(node, dict) and isinstance(part, str) and part not in node:
            if part in (node.get("kind"), node.get("type")):
                continue
        parts.append(str(part))
        if isinstance(node, dict):
            node = node.get(part)
        elif isinstance(node, list) and isinstance(part, int) and 0 <= part < len(node):
            node = node[part]
        else:
            node = None
    return ".".join(parts)


def parse_document(data: Any) -> InputDocument:
    """Validate a decoded JSON value as an input document.

    Raises:
        DocumentError: At the location of the first validation error
    """
    try:
        return InputDocument.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise DocumentError(
            first.get("msg", "invalid value"),
            _error_path(data, tuple(first.get("loc", ()))),
            original_error=e,
        ) from e


def load_document(path: Union[str, Path]) -> InputDocument:
    """Read and validate a UTF-8 JSON input document.

    Raises:
        DocumentError: If the file cannot be read, is not JSON, or fails validation
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e.strerror}", "", original_error=e) from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}", "", original_error=e) from e
    return parse_document(data)


def fixture_document(
    lattice: Lattice, action: GroupAction, c: Tuple[int, ...], all_splits: bool = True
) -> Dict[str, Any]:
    """Input document reproducing a lattice, action and characteristic, with
    generators written out as matrices."""
    action_doc: Dict[str, Any] = {"shape": action.shape.value}
    if action.k is not None:
        action_doc["k"] = action.k
    if action.shape == ActionShape.FREE_ABELIAN:
        action_doc["d"] = action.d
    action_doc["generators"] = [
        {"type": "matrix", "rows": [[int(x) for x in row] for row in g.matrix.tolist()]}
        for g in action.generators
    ]
    return {
        "lattice": {"summands": [s.to_dict() for s in lattice.summands]},
        "action": action_doc,
        "characteristic": [int(x) for x in c],
        "options": {"all_splits": all_splits},
    }


def document_schema() -> Dict[str, Any]:
    """JSON Schema of the input document."""
    return InputDocument.model_json_schema()


__all__: List[str] = [
    "InputDocument",
    "document_schema",
    "fixture_document",
    "load_document",
    "parse_document",
]
