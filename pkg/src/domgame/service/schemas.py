"""Request and response models for the compute service.

The CLI talks to the same handlers in process, so these models are the one
definition of the public request surface.
"""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class GraphInput(BaseModel):
    """A graph given either as edge-list text or as a constructor spec."""

    # wire name "construct" collides with a BaseModel classmethod, hence the alias
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    edge_list: Optional[str] = None
    construct_spec: Optional[str] = Field(default=None, alias="construct")
    max_n: Optional[int] = Field(default=None, ge=1, le=64)

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "GraphInput":
        if (self.edge_list is None) == (self.construct_spec is None):
            raise ValueError("provide exactly one of edge_list or construct")
        return self


class VariantInput(BaseModel):
    model_config = ConfigDict(extra="forbid")

    s_game: bool = False
    staller_passes: int = Field(default=0, ge=0, le=63)
    dominator_passes: int = Field(default=0, ge=0, le=3)


class TraceMove(BaseModel):
    player: Literal["D", "S"]
    vertex: Optional[int] = None  # None is a pass


class GammaRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    graph: GraphInput
    variant: VariantInput = VariantInput()
    dominated: list[int] = []
    trace: bool = False


class GammaResponse(BaseModel):
    label: str
    value: int
    n: int
    trace: Optional[list[TraceMove]] = None


class CutsRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    graph: GraphInput


class CutRecord(BaseModel):
    edges: list[tuple[int, int]]
    side_a: list[int]
    side_b: list[int]
    size: int


class CutsResponse(BaseModel):
    count: int
    edge_connectivity: int
    bridges: list[tuple[int, int]]
    cuts: list[CutRecord]


class DoubleStallerRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    graph: GraphInput


class DoubleStallerResponse(BaseModel):
    is_double_staller: bool
    gamma: int
    net_value: int


class ConstructRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    spec: str
    max_n: Optional[int] = Field(default=None, ge=1, le=64)


class ConstructResponse(BaseModel):
    n: int
    m: int
    edge_list: str
    marks: dict[str, int]


class VerifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    claim: str
    graph: Optional[GraphInput] = None
    dominated: list[int] = []
    dominated_sub: list[int] = []
    x: Optional[int] = None
    p: Optional[int] = None
    k: Optional[int] = None
    n: Optional[int] = None
    q: Optional[tuple[int, int]] = None
    max_n: Optional[int] = None
    random_count: int = Field(default=0, ge=0)
    seed: Optional[int] = None


class VerifyResponse(BaseModel):
    ok: bool
    reports: list[dict[str, Any]]


class ScanRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    family: Optional[Literal["path", "cycle"]] = None
    lo: Optional[int] = None
    hi: Optional[int] = None
    constructs: list[str] = []
    jobs: int = Field(default=1, ge=1, le=64)
    max_n: Optional[int] = None

    @model_validator(mode="after")
    def _some_instances(self) -> "ScanRequest":
        if self.family is None and not self.constructs:
            raise ValueError("provide a family range or constructor specs")
        if self.family is not None and (self.lo is None or self.hi is None):
            raise ValueError("a family scan needs lo and hi")
        return self


class ScanResponse(BaseModel):
    ok: bool
    reports: list[dict[str, Any]]
