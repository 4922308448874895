import pytest

from flipdist.errors import SizeError
from flipdist.verify import (
    CheckResult,
    check_reduction31,
    check_recursion,
    check_small_tables,
    failures,
    property_suite,
    prop11_witness,
    run_suites,
)


class TestProp11:
    @pytest.mark.parametrize("n", [20, 21, 22])
    def test_witness_passes(self, n):
        result = prop11_witness(n)
        assert result.status == "pass", result

    def test_too_small_rejected(self):
        with pytest.raises(SizeError):
            prop11_witness(19)

    def test_suite(self):
        results = check_reduction31()
        assert len(results) == 3
        assert failures(results) == 0


class TestSmallTables:
    def test_reduced_run_is_clean(self):
        results = check_small_tables(max_diameter_n=9)
        assert failures(results) == 0
        names = {r.name for r in results}
        assert "dist-A-08" in names and "diameter-09" in names
        mismatches = [r for r in results if r.name.startswith("mismatch")]
        assert mismatches and all(r.status == "pass" for r in mismatches)

    def test_informational_rows_record_values(self):
        results = check_small_tables(max_diameter_n=9)
        drows = {r.name: r for r in results if r.name.startswith("dist-D")}
        assert drows["dist-D-03"].observed == "0"
        assert drows["dist-D-08"].observed == "6"


class TestRecursion:
    def test_reduced_run_is_clean(self):
        results = check_recursion(13)
        assert failures(results) == 0
        byname = {r.name: r for r in results}
        assert byname["recursion-13"].status == "pass"
        assert byname["dist-A-13"].observed == "16"
        # hypothesis-vacuous rows must be skipped, not passed
        assert any(r.status == "skipped" and "hypothesis" in r.observed for r in results)


class TestPropertySuite:
    def test_reduced_parameters_clean(self):
        results = property_suite(n_max=9, seed=99, exhaustive_n=7, samples=40, engine_samples=20)
        assert failures(results) == 0
        assert any(r.name == "deletion-inequality-7" for r in results)

    def test_deterministic_under_seed(self):
        a = property_suite(n_max=9, seed=5, exhaustive_n=7, samples=20, engine_samples=10)
        b = property_suite(n_max=9, seed=5, exhaustive_n=7, samples=20, engine_samples=10)
        assert [r.as_dict() for r in a] == [r.as_dict() for r in b]


class TestRunner:
    def test_unknown_suite_rejected(self):
        with pytest.raises(SizeError):
            run_suites(("nope",))

    def test_results_sorted_and_serializable(self):
        results = run_suites(("prop11",))
        assert [r.name for r in results] == sorted(r.name for r in results)
        for r in results:
            d = r.as_dict()
            assert set(d) == {"name", "status", "expected", "observed", "claim"}

    def test_check_result_shape(self):
        r = CheckResult("x", "pass", "1", "1", "c")
        assert r.as_dict()["status"] == "pass"
