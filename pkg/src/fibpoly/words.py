"""p-Fibonacci words: validation, counting, and ordered enumeration.

A p-Fibonacci word is a word over the alphabet {1, ..., p} that starts
with the digit p and in which every digit is followed either by the next
smaller digit or by p (after a 1 only p may follow).  The words of length
n are counted by the p-generalized Fibonacci number with index n + 1, and
each word doubles as the column-height profile of a bargraph polyomino.

The alphabet bound p is capped at ``MAX_ALPHABET`` (statistic exponents
grow quadratically in p); adjust the module constant if you really need
larger alphabets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

MAX_ALPHABET = 64
DEFAULT_WORD_CAP = 10_000_000


class EnumerationCapError(RuntimeError):
    """Raised when an enumeration would produce more words than allowed."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"enumeration would visit {count} words, cap is {cap}")
        self.count = count
        self.cap = cap


def validate_alphabet(p: int) -> None:
    """Reject alphabet bounds outside 1 <= p <= MAX_ALPHABET."""
    if p < 1:
        raise ValueError(f"alphabet bound p must be >= 1, got {p}")
    if p > MAX_ALPHABET:
        raise ValueError(f"alphabet bound p={p} exceeds the limit {MAX_ALPHABET}")


def fibonacci_number(p: int, n: int) -> int:
    """n-th p-generalized Fibonacci number, as an exact integer.

    Each term with index n > 1 is the sum of the previous p terms; the
    value is 1 at index 1 and 0 at indices -p+2 .. 0.  Indices below
    -p+2 are undefined and rejected.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if n < -p + 2:
        raise ValueError(f"index {n} is below the first defined index {-p + 2}")
    if n <= 0:
        return 0
    if n == 1:
        return 1
    # values[k] holds the term at index k - (p - 2), seeded for -p+2 .. 1
    values = [0] * (p - 1) + [1]
    for _ in range(2, n + 1):
        values.append(sum(values[-p:]))
    return values[-1]


def is_valid_word(p: int, digits: Sequence[int]) -> bool:
    """True iff ``digits`` is a p-Fibonacci word (the empty word is valid)."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    digits = tuple(digits)
    if not digits:
        return True
    if digits[0] != p:
        return False
    for a, b in zip(digits, digits[1:]):
        if a == 1:
            if b != p:
                return False
        elif b != a - 1 and b != p:
            return False
    return True


@dataclass(frozen=True)
class FibWord:
    """A validated p-Fibonacci word.

    ``digits`` is the height profile of the induced bargraph polyomino:
    column i carries ``digits[i-1]`` unit cells.
    """

    p: int
    digits: tuple[int, ...] = ()

    def __post_init__(self):
        validate_alphabet(self.p)
        object.__setattr__(self, "digits", tuple(self.digits))
        if not is_valid_word(self.p, self.digits):
            raise ValueError(f"not a valid {self.p}-Fibonacci word: {list(self.digits)}")

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        if self.p <= 9:
            return "".join(str(d) for d in self.digits)
        return ",".join(str(d) for d in self.digits)

    @classmethod
    def from_text(cls, p: int, text: str) -> "FibWord":
        """Parse ``32321`` style digit strings (use commas when p > 9)."""
        text = text.strip()
        if not text:
            return cls(p, ())
        if "," in text:
            digits = tuple(int(part) for part in text.split(","))
        else:
            digits = tuple(int(ch) for ch in text)
        return cls(p, digits)


@dataclass(frozen=True)
class WordState:
    """Successor-graph state: the last digit of a word, or None for the empty word."""

    p: int
    last_digit: int | None = None

    def __post_init__(self):
        validate_alphabet(self.p)
        if self.last_digit is not None and not 1 <= self.last_digit <= self.p:
            raise ValueError(f"last digit {self.last_digit} outside 1..{self.p}")


def successor_digits(p: int, last_digit: int | None) -> list[int]:
    """Digits that may extend a word ending in ``last_digit``, ascending.

    The empty word (``last_digit`` None) and a trailing 1 both admit only
    p; any other trailing digit admits the next smaller digit or p.
    """
    if last_digit is None or last_digit == 1:
        return [p]
    return [last_digit - 1, p]


def successors(state: WordState) -> list[WordState]:
    """States reachable by appending one digit, in canonical (ascending) order."""
    return [WordState(state.p, d) for d in successor_digits(state.p, state.last_digit)]


def iter_word_digits(p: int, n: int) -> Iterator[tuple[int, ...]]:
    """Yield the digit tuples of all length-n words in ascending lexicographic order."""
    validate_alphabet(p)
    if n < 0:
        raise ValueError(f"word length must be >= 0, got {n}")
    if n == 0:
        yield ()
        return

    def extend(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for d in successor_digits(p, prefix[-1]):
            prefix.append(d)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([p])


def count_words(p: int, n: int) -> int:
    """Number of p-Fibonacci words of length n, without enumerating them."""
    if n < 0:
        raise ValueError(f"word length must be >= 0, got {n}")
    return fibonacci_number(p, n + 1)


def enumerate_words(p: int, n: int, cap: int | None = None) -> list[FibWord]:
    """All words of length n in ascending lexicographic order.

    Raises EnumerationCapError before doing any work if the word count
    exceeds ``cap`` (default ``DEFAULT_WORD_CAP``).
    """
    if cap is None:
        cap = DEFAULT_WORD_CAP
    expected = count_words(p, n)
    if expected > cap:
        raise EnumerationCapError(expected, cap)
    return [FibWord(p, digits) for digits in iter_word_digits(p, n)]
