from typing import Sequence

from fanolab.features.intersect.parser import evaluate, parse
from fanolab.features.topomod.groups import ExactSequenceInstance, FGAbelianGroup, check_exact
from fanolab.features.topomod.schemas import BSO4Group, ConiveauReport, GysinReport, SteenrodResult
from fanolab.features.topomod.steenrod import SW_RING, SWPolynomial, sq_top_axiom, square_nonvanishing, steenrod_sq
from fanolab.features.topomod.torsion_ring import TorsionRingElement, WEIGHTS, reduce_mod2
from fanolab.shared.common.enums import ConiveauVerdict
from fanolab.shared.config.config import settings
from fanolab.shared.exact_core.matrices import IntegerMatrix
from fanolab.shared.utils.exceptions import ConsistencyError, InvalidSpecError, OutOfRangeError
from fanolab.shared.utils.logger import logger

# H^0..H^3 of the quotient BGO(4)° of the circle bundle BSO(4) -> BGO(4)°
QUOTIENT_GROUPS = (
    FGAbelianGroup.free(1),
    FGAbelianGroup.trivial(),
    FGAbelianGroup.free(1),
    FGAbelianGroup.from_orders(0, [2]),
)
# degrees i where pullback H^i(B) -> H^i(E) is an isomorphism
PULLBACK_ISOMORPHISMS = frozenset({0, 3})
# degrees i where cup with the Euler class H^i(B) -> H^{i+2}(B) is an isomorphism
EULER_ISOMORPHISMS = frozenset({0})


class TopologyService:
    @staticmethod
    def bso4_basis(degree: int) -> list[TorsionRingElement]:
        """Monomials nu^a e^b p^c of weighted degree `degree`, nu-free ones first."""
        monomials = []
        for a in range(degree // WEIGHTS[0] + 1):
            for b in range(degree // WEIGHTS[1] + 1):
                rest = degree - a * WEIGHTS[0] - b * WEIGHTS[1]
                if rest >= 0 and rest % WEIGHTS[2] == 0:
                    monomials.append((a, b, rest // WEIGHTS[2]))
        monomials.sort(key=lambda m: (m[0] > 0, m))
        return [TorsionRingElement({m: 1}) for m in monomials]

    @classmethod
    def bso4_group(cls, degree: int) -> FGAbelianGroup:
        """
        Reads H^degree(BSO(4), Z) off the monomial basis of Z[nu, e, p] / (2 nu).

        Args:
            degree: cohomological degree, 0 <= degree <= settings.max_bso4_degree

        Returns:
            one Z per nu-free monomial and one Z/2 per monomial divisible by nu

        """
        if not 0 <= degree <= settings.max_bso4_degree:
            raise OutOfRangeError(f"Degree {degree} is outside the supported range 0..{settings.max_bso4_degree}")
        basis = cls.bso4_basis(degree)
        torsion = [2 for x in basis if any(nu_power for nu_power, _, _ in x.terms)]
        return FGAbelianGroup.from_orders(len(basis) - len(torsion), torsion)

    @classmethod
    def bso4_group_report(cls, degree: int) -> BSO4Group:
        group = cls.bso4_group(degree)
        basis = cls.bso4_basis(degree)
        return BSO4Group(degree=degree, group=group, description=str(group), basis=[str(x) for x in basis])

    @classmethod
    def gysin_instance(
        cls, quotient_groups: Sequence[FGAbelianGroup] = QUOTIENT_GROUPS
    ) -> tuple[list[str], ExactSequenceInstance]:
        """
        The Gysin sequence H^i(B) -> H^i(E) -> H^{i-1}(B) -> H^{i+1}(B) of E = BSO(4) over B = BGO(4)°, i <= 3.

        The quotient groups default to the stated ones (Z, 0, Z, Z/2); nothing is stated about H^4(B), so the
        sequence stops at H^3(E) -> H^2(B). The total-space groups come from the BSO(4) table. Pullback is an
        isomorphism in degrees 0 and 3, and the Euler class generates H^2(B), so cup with it is an isomorphism
        H^0(B) -> H^2(B). Every other map is zero.

        Args:
            quotient_groups: H^0(B)..H^3(B)

        Returns:
            node labels and the instance, starting from 0

        """
        if len(quotient_groups) != len(QUOTIENT_GROUPS):
            raise InvalidSpecError(f"Expected H^0(B)..H^3(B), got {len(quotient_groups)} groups")

        def quotient(i: int) -> FGAbelianGroup:
            return quotient_groups[i] if i >= 0 else FGAbelianGroup.trivial()

        labels, groups, maps = ["0"], [FGAbelianGroup.trivial()], []

        def extend(label: str, group: FGAbelianGroup, isomorphism: bool) -> None:
            # isomorphism: the map into this node is the identity on one generator
            source = groups[-1]
            shape = (group.generator_count, source.generator_count)
            maps.append(IntegerMatrix.identity(1) if isomorphism and shape == (1, 1) else IntegerMatrix.zeros(*shape))
            labels.append(label)
            groups.append(group)

        for i in range(4):
            # out of H^{i-2}(B): cup with the Euler class
            extend(f"H^{i}(B)", quotient(i), isomorphism=i - 2 in EULER_ISOMORPHISMS)
            # out of H^i(B): pullback
            extend(f"H^{i}(E)", cls.bso4_group(i), isomorphism=i in PULLBACK_ISOMORPHISMS)
            # out of H^i(E): integration along the fibre
            extend(f"H^{i - 1}(B)", quotient(i - 1), isomorphism=False)
        return labels, ExactSequenceInstance(groups=groups, maps=maps)

    @classmethod
    def gysin_report(cls) -> GysinReport:
        labels, instance = cls.gysin_instance()
        exact = check_exact(instance)
        logger.debug(f"Gysin instance exact: {exact}")
        return GysinReport(labels=labels, groups=[str(g) for g in instance.groups], exact=exact)

    @staticmethod
    def parse_sw(expression: str) -> SWPolynomial:
        """Reads a polynomial in w2, w3, w4 with the intersection-expression grammar."""
        return evaluate(parse(expression), SW_RING, dict(zip(SW_RING.names, SW_RING.gens())))

    @classmethod
    def steenrod(cls, i: int, expression: str) -> SteenrodResult:
        x = cls.parse_sw(expression)
        return SteenrodResult(i=i, x=str(x), result=str(steenrod_sq(i, x)), square_nonzero=square_nonvanishing(x))

    @staticmethod
    def coniveau_obstruction(square_mod2_nonzero: bool) -> ConiveauVerdict:
        """A degree-3 class with nonzero mod-2 square is not of strong coniveau >= 1; a zero square decides nothing."""
        if square_mod2_nonzero:
            return ConiveauVerdict.not_strong_coniveau
        return ConiveauVerdict.no_conclusion

    @classmethod
    def coniveau_report(cls, square_mod2_nonzero: bool) -> ConiveauReport:
        """
        Obstruction verdict with the top-square axiom checked on a witness.

        For a nonzero square the witness is the universal class w3 = reduction of nu; for a zero square it is the
        zero class, where Sq^3 and the cup square agree trivially.
        """
        witness = reduce_mod2(TorsionRingElement.nu()) if square_mod2_nonzero else SW_RING.zero()
        if square_nonvanishing(witness) != square_mod2_nonzero:
            raise ConsistencyError(f"Witness {witness} does not realise square status {square_mod2_nonzero}")
        verdict = cls.coniveau_obstruction(square_mod2_nonzero)
        if square_mod2_nonzero:
            statement = "alpha^2 = w3^2 != 0 mod 2, so alpha is not of strong coniveau >= 1"
        else:
            statement = "Sq^3(alpha) = alpha^2 = 0, the topological obstruction vanishes"
        return ConiveauReport(
            square_nonzero=square_mod2_nonzero,
            verdict=verdict,
            sq_axiom_consistent=sq_top_axiom(witness),
            witness=str(witness),
            statement=statement,
        )
