from enum import StrEnum


class CoefficientDomain(StrEnum):
    integer = "ZZ"
    rational = "QQ"
    mod2 = "GF(2)"


class TautologicalBundle(StrEnum):
    subbundle = "subbundle"
    dual_subbundle = "dual-subbundle"
    quotient = "quotient"


class CoverKind(StrEnum):
    etale = "etale"
    ramified = "ramified"


class CoverDirection(StrEnum):
    to_quotient = "to-quotient"
    to_cover = "to-cover"


class Classification(StrEnum):
    fano = "Fano"
    calabi_yau = "Calabi-Yau"
    general_type = "general-type"
    singular = "singular"


class Smoothness(StrEnum):
    smooth = "smooth"
    isolated_singularities = "isolated-singularities"
    singular = "singular"


class WindowVerdict(StrEnum):
    satisfied = "satisfied"
    not_satisfied = "not-satisfied"
    no_claim = "no-claim"


class ConiveauVerdict(StrEnum):
    not_strong_coniveau = "not of strong coniveau >= 1"
    no_conclusion = "obstruction vanishes, no conclusion"
    no_claim = "no claim for these parameters"


class Provenance(StrEnum):
    reference = "REFERENCE"
    derived = "DERIVED"
    trivial = "TRIVIAL"


class Source(StrEnum):
    """Stated results that reported values are traced to."""

    rank_locus_dimension = "rank-locus-dimension"
    rank_locus_degree = "rank-locus-degree"
    singular_locus = "singular-locus"
    double_cover_canonical = "double-cover-canonical-class"
    luna_slice = "luna-slice"
    bso4_cohomology = "bso4-cohomology"
    circle_bundle_gysin = "circle-bundle-gysin"
    torsion_theorem = "torsion-theorem"
    fano_fourfold = "fano-fourfold-hodge"
    surface_chain = "fourfold-surface-chain"
    conic_bundle_section = "conic-bundle-section"
    singular_examples = "singular-examples"
    coniveau_theorem = "coniveau-theorem"
    vanishing_obstruction = "vanishing-obstruction"
    ruled_surface_parity = "ruled-surface-parity"
    bidegree_computation = "bidegree-computation"
    standard = "standard"


class CheckStatus(StrEnum):
    passed = "pass"
    failed = "fail"


class OutputFormat(StrEnum):
    text = "text"
    json = "json"
