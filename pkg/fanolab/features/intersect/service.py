from dataclasses import replace

from fanolab.features.intersect.parser import evaluate, parse, parse_ambient, pretty, variables
from fanolab.features.intersect.schemas import IntersectResult
from fanolab.shared.utils.exceptions import UnboundVariableError
from fanolab.shared.utils.logger import logger
from fanolab.shared.varieties.variety import Variety, projective_product


class IntersectService:
    @staticmethod
    def ambient_variety(ambient: str) -> Variety:
        """
        Builds the product of projective spaces named by an ambient declaration.

        Args:
            ambient: declaration such as 'P4 x P5'

        Returns:
            the variety with hyperplane classes h1..hm; a single factor also binds 'h'

        """
        dims = parse_ambient(ambient)
        variety = projective_product(dims)
        if len(dims) == 1:
            variety = replace(variety, divisors={**variety.divisors, "h": variety.divisor("h1")})
        return variety

    @classmethod
    def intersect(cls, expression: str, ambient: str) -> IntersectResult:
        """
        Evaluates an intersection number on a product of projective spaces.

        Args:
            expression: polynomial in the hyperplane classes, e.g. 'h1^3*(-2*h1+4*h2)*(h1+h2)^5'
            ambient: ambient declaration, e.g. 'P4 x P5'

        Returns:
            the normal form of the class and its degree (0 when it has no top-degree part)

        """
        tree = parse(expression)
        variety = cls.ambient_variety(ambient)
        unbound = variables(tree) - set(variety.divisors)
        if unbound:
            raise UnboundVariableError(
                f"Variables {sorted(unbound)} are not bound by {ambient!r}; available: {sorted(variety.divisors)}"
            )
        value = evaluate(tree, variety.ring, variety.divisors)
        degree = variety.degree(value)
        logger.debug(f"Intersection {pretty(tree)} on {variety.name} = {degree}")
        return IntersectResult(
            expression=pretty(tree),
            ambient=variety.name,
            dimension=variety.dim,
            normal_form=str(value),
            value=degree,
        )
