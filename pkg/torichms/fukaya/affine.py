"""
Wrapped Hom on the affine mirror curve by covering labels

A Hom basis element between lifted arcs is a dumbbell word whose lift
starts at the site of the target and ends at the site of the source. The
lift of a word starting on label lam ends on lam * monodromy(word), so only
words with the right monodromy survive.
"""
from itertools import product
from typing import Dict, List, Optional

from torichms.fukaya.hom_table import Generator, HomTable, Pair
from torichms.fukaya.series import GradedSeries, check_truncation
from torichms.fukaya.words import PathWord, enumerate_words, is_crossing
from torichms.logging import getLogger
from torichms.ribbon.skeleton import LabeledSkeleton
from torichms.toricdata.group import Character

logger = getLogger(__name__)


def generators(skeleton: LabeledSkeleton) -> List[Generator]:
    characters = sorted(skeleton.structure.group.characters())
    return [Generator(side, theta) for side in (1, 2) for theta in characters]


def _words_by_monodromy(skeleton: LabeledSkeleton, start: int, end: int, truncate: int) -> Dict[Character, List[PathWord]]:
    grouped: Dict[Character, List[PathWord]] = {}
    for word in enumerate_words(start, end, truncate):
        grouped.setdefault(word.monodromy(skeleton.structure), []).append(word)
    return grouped


def affine_hom_series(skeleton: LabeledSkeleton, source: Generator, target: Generator, truncate: int,
                      words: Optional[Dict[Character, List[PathWord]]] = None) -> GradedSeries:
    """Hom(source, target) by word count; words may be pre-grouped by monodromy"""
    check_truncation(truncate)
    start_circle, start_label = skeleton.site(target.side, target.label)
    end_circle, end_label = skeleton.site(source.side, source.label)
    if words is None:
        words = _words_by_monodromy(skeleton, start_circle, end_circle, truncate)
    # lam_end = lam_start * monodromy(w)
    needed = end_label / start_label
    return GradedSeries.accumulate(truncate, ((w.parity, w.weight) for w in words.get(needed, [])))


def affine_hom_table(skeleton: LabeledSkeleton, truncate: int) -> HomTable:
    """
    Series for all ordered pairs of the 2|G| generators

    Raises:
        TruncationException: truncate < 0
    """
    check_truncation(truncate)
    gens = generators(skeleton)
    by_circles = {
        (a, b): _words_by_monodromy(skeleton, a, b, truncate)
        for a, b in product((1, 2), repeat=2)
    }
    entries: Dict[Pair, GradedSeries] = {}
    for source, target in product(gens, repeat=2):
        start_circle, _ = skeleton.site(target.side, target.label)
        end_circle, _ = skeleton.site(source.side, source.label)
        entries[(source, target)] = affine_hom_series(
            skeleton, source, target, truncate, by_circles[(start_circle, end_circle)]
        )
    logger.debug(
        "affine A-side table computed",
        extra={'rms': list(skeleton.normal_form.key), 'pairs': len(entries), 'truncate': truncate},
    )
    return HomTable(truncate, entries)


def loop_series(skeleton: LabeledSkeleton, generator: Generator, truncate: int) -> GradedSeries:
    """Loop-power part of End(generator): l^a surviving the label filter"""
    check_truncation(truncate)
    circle, _ = skeleton.site(generator.side, generator.label)
    words = enumerate_words(circle, circle, truncate)
    return GradedSeries.accumulate(
        truncate,
        ((w.parity, w.weight) for w in words
         if not any(is_crossing(letter) for letter in w.letters) and w.monodromy(skeleton.structure).is_trivial),
    )
