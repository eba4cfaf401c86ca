"""Byte-based token counting, pricing and episode limits."""
from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class TokenModel:
    bytes_per_token: int = 4
    # currency per million tokens
    price_in: float = 1.25
    price_out: float = 10.0

    def __post_init__(self):
        if int(self.bytes_per_token) < 1:
            raise ValueError("bytes_per_token must be at least 1")
        if self.price_in < 0 or self.price_out < 0:
            raise ValueError("prices must be non-negative")

    def cost(self, in_tokens: int, out_tokens: int) -> float:
        return (in_tokens * self.price_in + out_tokens * self.price_out) / 1_000_000


def count_tokens(message, model: TokenModel = TokenModel()) -> int:
    """ceil(len / bytes_per_token). Accepts bytes, str (UTF-8) or a byte length."""
    if isinstance(message, str):
        n = len(message.encode("utf-8"))
    elif isinstance(message, int):
        n = message
    else:
        n = len(message)
    if n < 0:
        raise ValueError("negative byte length")
    return -(-n // model.bytes_per_token)


@dataclass(frozen=True)
class Limits:
    max_turns: int = 150
    max_minutes: float = 60
    max_in_tokens: int = 1_000_000
    max_out_tokens: int = 150_000
    max_in_tokens_per_request: int = 150_000

    def __post_init__(self):
        for name, value in asdict(self).items():
            if value <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class Counters:
    in_tokens: int = 0
    out_tokens: int = 0
    turn_count: int = 0
    tool_call_count: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Verdict:
    terminate: bool
    reason: str | None = None

    @property
    def proceed(self) -> bool:
        return not self.terminate


CONTINUE = Verdict(False)


def enforce_limits(counters: Counters, limits: Limits, *, request_in: int = 0,
                   request_out: int = 0, elapsed_s: float = 0.0) -> Verdict:
    """Decide whether the next turn may run.

    ``counters`` are the totals so far; ``request_in``/``request_out`` are the token
    sizes of the turn about to be committed. A turn that would cross any cap is
    refused, so committed counters never exceed the limits.
    """
    if counters.turn_count + 1 > limits.max_turns:
        return Verdict(True, "turn limit")
    if elapsed_s > limits.max_minutes * 60:
        return Verdict(True, "time limit")
    if request_in > limits.max_in_tokens_per_request:
        return Verdict(True, "request input tokens")
    if counters.in_tokens + request_in > limits.max_in_tokens:
        return Verdict(True, "input tokens")
    if counters.out_tokens + request_out > limits.max_out_tokens:
        return Verdict(True, "output tokens")
    return CONTINUE
