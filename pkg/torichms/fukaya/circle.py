"""
Laurent counts on a labeled circle

A circle with labels permuted by a shift character is the cover of the
bare circle Gamma(0, 0); Hom between two of its objects is k[z, z^-1]
cut down to the powers w with shift^w = theta' theta^-1.
"""
from torichms.fukaya.series import EVEN, GradedSeries, check_truncation
from torichms.toricdata.group import Character


def circle_hom_series(shift: Character, theta: Character, theta_prime: Character, truncate: int) -> GradedSeries:
    """
    Example:
        # shift of order 3, equal labels
        circle_hom_series(rho, t, t, 6).to_dict()['dims'][0]
        # [1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1]
    """
    check_truncation(truncate)
    target = theta_prime / theta
    return GradedSeries.from_counts(
        truncate,
        {(EVEN, w): 1 for w in range(-truncate, truncate + 1) if shift ** w == target},
        laurent=True,
    )
