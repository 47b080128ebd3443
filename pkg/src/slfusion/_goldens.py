"""Frozen reference data for the chart-change matrices.

The n = 3, 4, 5 fiber-frame transition matrices, recorded as canonical
entry strings after the entrywise derivation was certified pointwise
against the coordinate-inversion pushforward at random rational points.
Regressions in the derivation show up as diffs against these tables.
"""

TRANSITION_GOLDEN = {
    3: [
        ['-y^2', '0', '0', '0', '0', '0', '0'],
        ['0', '-y^2', '0', '0', '0', '0', '0'],
        ['0', '0', '1', '0', '0', '0', '0'],
        ['y', '0', '0', '1', '0', '0', '0'],
        ['0', '0', '0', '0', '1', '0', '0'],
        ['0', '0', '0', '0', '0', '-y^-2', '0'],
        ['0', '0', '2*y^-1', '0', 'y^-1', '0', '-y^-2'],
    ],
    4: [
        ['-y^2', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0'],
        ['0', '-y^2', '0', '0', '0', '0', '0', '0', '0', '0', '0'],
        ['0', '0', '-y^2', '0', '0', '0', '0', '0', '0', '0', '0'],
        ['0', '0', '0', '1', '0', '0', '0', '0', '0', '0', '0'],
        ['y', '0', '0', '0', '1', '0', '0', '0', '0', '0', '0'],
        ['0', 'y', '0', '0', '0', '1', '0', '0', '0', '0', '0'],
        ['0', '0', '0', '0', '0', '0', '1', '0', '0', '0', '0'],
        ['0', '0', '0', '0', '0', '0', '0', '1', '0', '0', '0'],
        ['0', '0', '0', '0', '0', '0', '0', '0', '-y^-2', '0', '0'],
        ['0', '0', '0', '2*y^-1', '0', '0', 'y^-1', '0', '0', '-y^-2', '0'],
        ['1', '0', '0', '0', '2*y^-1', '0', '0', 'y^-1', '0', '0', '-y^-2'],
    ],
    5: [
        ['-y^2', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0'],
        ['0', '-y^2', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0'],
        ['0', '0', '-y^2', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0'],
        ['0', '0', '0', '-y^2', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0'],
        ['0', '0', '0', '0', '1', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0'],
        ['y', '0', '0', '0', '0', '1', '0', '0', '0', '0', '0', '0', '0', '0', '0'],
        ['0', 'y', '0', '0', '0', '0', '1', '0', '0', '0', '0', '0', '0', '0', '0'],
        ['0', '0', 'y', '0', '0', '0', '0', '1', '0', '0', '0', '0', '0', '0', '0'],
        ['0', '0', '0', '0', '0', '0', '0', '0', '1', '0', '0', '0', '0', '0', '0'],
        ['0', '0', '0', '0', '0', '0', '0', '0', '0', '1', '0', '0', '0', '0', '0'],
        ['0', '0', '0', '0', '0', '0', '0', '0', '0', '0', '1', '0', '0', '0', '0'],
        ['0', '0', '0', '0', '0', '0', '0', '0', '0', '0', '0', '-y^-2', '0', '0', '0'],
        ['0', '0', '0', '0', '2*y^-1', '0', '0', '0', 'y^-1', '0', '0', '0', '-y^-2', '0', '0'],
        ['1', '0', '0', '0', '0', '2*y^-1', '0', '0', '0', 'y^-1', '0', '0', '0', '-y^-2', '0'],
        ['0', '1', '0', '0', '0', '0', '2*y^-1', '0', '0', '0', 'y^-1', '0', '0', '0', '-y^-2'],
    ],
}
