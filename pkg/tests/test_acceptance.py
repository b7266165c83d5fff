"""Acceptance gate: every end-to-end guarantee at its stated tolerance.

Each test runs one self-contained validation check (the same records the
`npspec validate` subcommand reports) and prints a single PASS/FAIL line
with the measured margins; run pytest with -s to see the lines on success.
The budget is a wall-clock ceiling on the check.
"""

import pytest

from npspec import validate

CASES = [
    (validate.check_spectrum_match, 30.0),
    (validate.check_convergence_rate, 20.0),
    (validate.check_disk_pair_spectrum, 20.0),
    (validate.check_polarization_identities, 60.0),
    (validate.check_shape_recovery, 30.0),
    (validate.check_gap_recovery, 10.0),
    (validate.check_field_blowup, 10.0),
    (validate.check_symmetry_zeros, 10.0),
]


@pytest.mark.parametrize(
    "check,budget", CASES, ids=[c.__name__.replace("check_", "") for c, _ in CASES]
)
def test_acceptance(check, budget):
    rec = check()
    print(
        "%s %s: %s (%.2fs)"
        % ("PASS" if rec.passed else "FAIL", rec.name, rec.details, rec.elapsed)
    )
    assert rec.passed, "%s violated its tolerance: %s" % (rec.name, rec.details)
    assert rec.elapsed < budget, "%s took %.1fs (budget %.0fs)" % (
        rec.name,
        rec.elapsed,
        budget,
    )


def test_suite_covers_every_check():
    # the gate must not silently drop a check when the suite grows
    assert [c for c, _ in CASES] == list(validate.ALL_CHECKS)
