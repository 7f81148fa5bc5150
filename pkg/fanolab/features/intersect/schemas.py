from pydantic import Field

from fanolab.shared.common.base_model import BaseModel


class IntersectRequest(BaseModel):
    expression: str = Field(examples=["(h1+h2)^8"])
    ambient: str = Field(examples=["P4 x P4"])


class IntersectResult(BaseModel):
    expression: str
    ambient: str
    dimension: int
    normal_form: str
    value: int
