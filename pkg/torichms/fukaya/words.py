"""
Path words on the dumbbell

Letters: l1 loops at circle 1, l2 loops at circle 2, u1 crosses from
circle 1 to circle 2 and u2 from circle 2 to circle 1. A word is read
left to right along the path. A loop letter never touches a crossing
letter, so admissible words are loop powers or alternating crossing
strings.
"""
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from torichms.exceptions import InputException
from torichms.toricdata.group import Character, StructureGroup

L1 = 'l1'
L2 = 'l2'
U1 = 'u1'
U2 = 'u2'

# letter -> (circle before, circle after)
ENDPOINTS = {
    L1: (1, 1),
    L2: (2, 2),
    U1: (1, 2),
    U2: (2, 1),
}


def is_crossing(letter: str) -> bool:
    return letter in (U1, U2)


def leaving(circle: int) -> str:
    """Crossing letter that leaves a circle"""
    return U1 if circle == 1 else U2


def loop(circle: int) -> str:
    return L1 if circle == 1 else L2


def letter_character(letter: str, structure: StructureGroup) -> Character:
    if letter == L1:
        return structure.rho1
    if letter == L2:
        return structure.rho2
    if letter == U1:
        return structure.group.trivial_character
    if letter == U2:
        return (structure.rho1 * structure.rho2).inverse()
    raise InputException(f"unknown letter {letter!r}")


@dataclass(frozen=True)
class PathWord:
    start: int
    end: int
    letters: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.start not in (1, 2) or self.end not in (1, 2):
            raise InputException(f"circles are 1 and 2, got ({self.start}, {self.end})")
        circle = self.start
        for letter in self.letters:
            if letter not in ENDPOINTS:
                raise InputException(f"unknown letter {letter!r}")
            before, after = ENDPOINTS[letter]
            if before != circle:
                raise InputException(f"letter {letter} cannot follow a path ending on circle {circle}")
            circle = after
        if circle != self.end:
            raise InputException(f"word {self.letters} ends on circle {circle}, not {self.end}")

    @property
    def weight(self) -> int:
        return len(self.letters)

    @property
    def parity(self) -> int:
        return sum(1 for letter in self.letters if is_crossing(letter)) % 2

    @property
    def is_admissible(self) -> bool:
        return all(
            is_crossing(a) == is_crossing(b)
            for a, b in zip(self.letters, self.letters[1:])
        )

    def monodromy(self, structure: StructureGroup) -> Character:
        result = structure.group.trivial_character
        for letter in self.letters:
            result = result * letter_character(letter, structure)
        return result

    def __str__(self) -> str:
        return ' '.join(self.letters) if self.letters else f"e{self.start}"


def identity(circle: int) -> PathWord:
    return PathWord(circle, circle)


def alternating(start: int, length: int) -> PathWord:
    """Crossing string of the given length leaving circle start"""
    letters = []
    circle = start
    for _ in range(length):
        letter = leaving(circle)
        letters.append(letter)
        circle = ENDPOINTS[letter][1]
    return PathWord(start, circle, tuple(letters))


def enumerate_words(start: int, end: int, max_weight: int) -> Iterator[PathWord]:
    """
    Admissible words from start to end of weight at most max_weight

    Same circle: loop powers (identity included) and even crossing strings.
    Different circles: odd crossing strings.
    """
    if start == end:
        for a in range(max_weight + 1):
            yield PathWord(start, end, (loop(start),) * a)
        for length in range(2, max_weight + 1, 2):
            yield alternating(start, length)
    else:
        for length in range(1, max_weight + 1, 2):
            yield alternating(start, length)


def concatenate(first: PathWord, second: PathWord) -> Optional[PathWord]:
    """
    first then second, or None when the result is forbidden

    Raises:
        InputException: first does not end where second starts
    """
    if first.end != second.start:
        raise InputException(f"cannot compose a path ending on {first.end} with one starting on {second.start}")
    word = PathWord(first.start, second.end, first.letters + second.letters)
    return word if word.is_admissible else None
