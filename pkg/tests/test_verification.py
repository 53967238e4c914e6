"""
Unit tests for the verification suite.
"""
import pytest

from analysis.verification import (
    CORE_CHECKS,
    CheckResult,
    VerificationReport,
    check_genus2_vertices,
    check_k4,
    check_k33,
    check_loop_trees,
    run_verification,
)
from charpoly.constructions import polytope_Q
from polyhedra.polytope import Row


def loop_counted_once(g, t):
    """Q built as if a loop met its vertex only once: loop coefficients halved in triangle rows."""
    q = polytope_Q(g, t)
    loops = set(g.loops)
    rows = []
    for r in q.rows:
        if r.label.startswith("tri:"):
            normal = tuple(x / 2 if e in loops else x for e, x in enumerate(r.normal))
            rows.append(Row(normal, r.rhs, r.label))
        else:
            rows.append(r)
    return q.with_rows(rows)


class TestCoreChecks:
    """Tests for the individual checks."""

    def test_genus2_vertices_pass(self):
        """Test the genus-2 vertex matrices with the real construction."""
        passed, detail = check_genus2_vertices(polytope_Q)
        assert passed, detail

    def test_genus2_vertices_catch_broken_builder(self):
        """Test that a wrong loop convention fails the genus-2 check."""
        passed, detail = check_genus2_vertices(loop_counted_once)
        assert not passed
        assert "dumbbell" in detail

    def test_k4(self):
        """Test the K4 vertex counts for both trees."""
        passed, detail = check_k4(polytope_Q)
        assert passed, detail


class TestFullChecks:
    """Tests for the slower sweeps over genus 4 and K3,3."""

    @pytest.mark.slow
    def test_loop_trees_reflexive_and_idp(self):
        """Test that every loop-tree up to genus 4 is reflexive and IDP at k = 3."""
        passed, detail = check_loop_trees(polytope_Q)
        assert passed, detail
        assert detail == "3 loop-trees"

    @pytest.mark.slow
    def test_k33_never_reflexive(self):
        """Test that no tree class of K3,3 gives a reflexive Q."""
        passed, detail = check_k33(polytope_Q)
        assert passed, detail
        assert detail == "3 tree classes"


class TestReport:
    """Tests for the report container."""

    def test_indeterminate_does_not_fail(self):
        """Test that an indeterminate check leaves the suite passing."""
        report = VerificationReport((CheckResult("a", True), CheckResult("b", False, indeterminate=True)))
        assert report.passed
        assert "[INDETERMINATE] b" in report.checklist()

    def test_failure_fails(self):
        """Test that one failed check fails the suite."""
        report = VerificationReport((CheckResult("a", True), CheckResult("b", False, "broken")))
        assert not report.passed
        assert report.checklist().endswith("1/2 checks passed")

    def test_timings_only_on_request(self):
        """Test that seconds appear in JSON only when asked for."""
        check = CheckResult("a", True, seconds=1.23456)
        assert "seconds" not in check.to_json()
        assert check.to_json(timings=True)["seconds"] == 1.235


class TestRunVerification:
    """Tests for run_verification."""

    @pytest.mark.slow
    def test_core_suite_passes(self):
        """Test that every core check passes."""
        report = run_verification()
        assert report.passed, report.checklist()
        assert len(report.checks) == len(CORE_CHECKS)

    @pytest.mark.slow
    def test_broken_builder_fails_suite(self):
        """Test that the suite rejects a Q built with the wrong loop convention."""
        report = run_verification(q_builder=loop_counted_once)
        assert not report.passed
        failed = {c.name for c in report.checks if not c.passed}
        assert "genus-2 vertex matrices of Q" in failed
