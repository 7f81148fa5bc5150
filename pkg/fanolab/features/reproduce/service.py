from concurrent.futures import ThreadPoolExecutor
from typing import Any, Optional

from pydantic import TypeAdapter, ValidationError

from fanolab.features.reproduce.registry import REGISTRY, TAGS, Check
from fanolab.features.reproduce.schemas import CheckRecord, CheckValue, ReportDocument
from fanolab.shared.common.decorators import timer_func
from fanolab.shared.common.enums import CheckStatus
from fanolab.shared.config.config import settings
from fanolab.shared.utils.exceptions import FanolabException, InvalidSpecError
from fanolab.shared.utils.logger import logger

_check_value = TypeAdapter(CheckValue)


def same_value(computed: Any, expected: Any) -> bool:
    """Equality that keeps bool and int apart, also inside lists."""
    if type(computed) is not type(expected):
        return False
    if isinstance(expected, list):
        return len(computed) == len(expected) and all(map(same_value, computed, expected))
    return computed == expected


class ReproduceService:
    @staticmethod
    def select(only: Optional[str] = None) -> list[Check]:
        if only is None:
            return list(REGISTRY)
        if only not in TAGS:
            raise InvalidSpecError(f"Unknown check tag {only!r}; known tags: {', '.join(TAGS)}")
        return [check for check in REGISTRY if only in check.tags]

    @staticmethod
    def run_check(check: Check) -> CheckRecord:
        """
        Runs one check; any error raised while computing becomes a failed record instead of aborting the run.

        Args:
            check: registered check

        Returns:
            the record with the computed value and pass/fail status

        """
        computed, error = None, None
        try:
            value = check.compute()
        except FanolabException as exception:
            error = f"{type(exception).__name__}: {exception}"
        except Exception as exception:
            error = f"{type(exception).__name__}: {exception}"
            logger.exception(f"Check {check.id} raised outside the engine")
        else:
            try:
                computed = _check_value.validate_python(value, strict=True)
            except ValidationError:
                error = f"UnrepresentableValue: {value!r} is not a bool, int, str or a list of int or str"
                logger.warning(f"Check {check.id}: {error}")
        status = CheckStatus.passed if error is None and same_value(computed, check.expected) else CheckStatus.failed
        logger.debug(f"Check {check.id}: expected {check.expected!r}, computed {computed!r}, {status}")
        return CheckRecord(
            id=check.id,
            description=check.description,
            tags=list(check.tags),
            citation=check.citation,
            expected=check.expected,
            computed=computed,
            status=status,
            error=error,
        )

    @classmethod
    @timer_func
    def reproduce(cls, only: Optional[str] = None) -> ReportDocument:
        """
        Runs the registered checks concurrently and assembles them in registry order.

        Args:
            only: restrict to the checks carrying this tag

        Returns:
            the report; its status is pass iff every selected check passes

        """
        checks = cls.select(only)
        with ThreadPoolExecutor(max_workers=settings.reproduce_workers) as executor:
            records = list(executor.map(cls.run_check, checks))
        failed = [record.id for record in records if record.status == CheckStatus.failed]
        logger.info(f"Reproduced {len(records)} checks, {len(failed)} failed")
        return ReportDocument(
            tool_version=settings.tool_version,
            schema_version=settings.report_schema_version,
            only=only,
            status=CheckStatus.failed if failed else CheckStatus.passed,
            check_count=len(records),
            failed=failed,
            checks=records,
        )
