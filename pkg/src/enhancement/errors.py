"""
Enhancement 전반에서 사용하는 예외 계층

모든 예외는 EnhancementError 를 상속하며, pydantic validator 안에서 발생해도
ValidationError 로 감싸지지 않고 그대로 전파됩니다.
"""


class EnhancementError(Exception):
    pass


# 파라미터 / 도메인
class InvalidParams(EnhancementError):
    pass


class InvalidBounds(EnhancementError):
    pass


class InvalidRange(EnhancementError):
    pass


class DomainMismatch(EnhancementError):
    pass


class DimensionMismatch(EnhancementError):
    pass


class UnsupportedChannels(EnhancementError):
    pass


class UnsupportedDomain(EnhancementError):
    pass


# 파일 입출력
class IoError(EnhancementError):
    pass


class DecodeError(EnhancementError):
    pass


class UnsupportedFormat(EnhancementError):
    pass


# 데이터셋 분할
class InvalidRatios(EnhancementError):
    pass


class AlreadySplit(EnhancementError):
    pass
