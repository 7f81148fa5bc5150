from fanolab.shared.common.base_model import BaseModel
from fanolab.shared.common.enums import Provenance, Source


class Citation(BaseModel):
    """
    Where a reported value comes from: a stated result, a derivation from stated results, or a triviality.

    locator names the stated result; statement quotes or paraphrases what it says about the value.
    """

    locator: Source
    statement: str
    provenance: Provenance

    @classmethod
    def reference(cls, locator: Source, statement: str) -> "Citation":
        return cls(locator=locator, statement=statement, provenance=Provenance.reference)

    @classmethod
    def derived(cls, locator: Source, statement: str) -> "Citation":
        return cls(locator=locator, statement=statement, provenance=Provenance.derived)

    @classmethod
    def trivial(cls, statement: str, locator: Source = Source.standard) -> "Citation":
        return cls(locator=locator, statement=statement, provenance=Provenance.trivial)
