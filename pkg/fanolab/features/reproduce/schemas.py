from typing import Optional, Union

from fanolab.shared.common.base_model import BaseModel
from fanolab.shared.common.enums import CheckStatus
from fanolab.shared.common.schemas.common import Citation

CheckValue = Union[bool, int, str, list[int], list[str]]


class CheckRecord(BaseModel):
    id: str
    description: str
    tags: list[str]
    citation: Citation
    expected: CheckValue
    computed: Optional[CheckValue] = None
    status: CheckStatus
    error: Optional[str] = None


class ReportDocument(BaseModel):
    """Outcome of a reproduction run; field changes bump schema_version."""

    tool_version: str
    schema_version: str
    only: Optional[str] = None
    status: CheckStatus
    check_count: int
    failed: list[str]
    checks: list[CheckRecord]
