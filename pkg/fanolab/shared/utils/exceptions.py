class FanolabException(Exception):
    pass


class RingException(FanolabException):
    pass


class RingMismatchError(RingException):
    pass


class DegreeMismatchError(RingException):
    pass


class NonIntegralResultError(RingException):
    pass


class OutOfBoxError(RingException):
    pass


class InvalidChernDataError(RingException):
    pass


class SpecException(FanolabException):
    pass


class InvalidSpecError(SpecException):
    pass


class OutOfRangeError(SpecException):
    pass


class ScaleExceededError(SpecException):
    pass


class TopologyException(FanolabException):
    pass


class NonComposableError(TopologyException):
    pass


class ConsistencyError(FanolabException):
    pass


class ExpressionException(FanolabException):
    pass


class ExpressionParseError(ExpressionException):
    def __init__(self, message: str, source: str, position: int):
        super().__init__(message)
        self.message = message
        self.source = source
        self.position = position

    def annotated(self) -> str:
        return f"{self.message} at position {self.position}\n  {self.source}\n  {' ' * self.position}^"


class UnboundVariableError(ExpressionException):
    pass
