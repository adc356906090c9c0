import numpy as np
import pytest
from pydantic import ValidationError

from specjoin.errors import NonRegularComponentError, OracleSizeError
from specjoin.graph_core import make_cycle, write_edge_list
from specjoin.power_graph import power_spectrum
from specjoin.schemas import (
    DeviationReport,
    EigenvalueEntry,
    SpectrumDocument,
    SpectrumRequest,
    Tolerances,
    VerifyRequest,
)
from specjoin.service import build_document, present_spectrum, run_verify


class TestSpectrumRequest:
    def test_requires_exactly_one_source(self):
        with pytest.raises(ValidationError):
            SpectrumRequest()
        with pytest.raises(ValidationError):
            SpectrumRequest(power_n=6, family="wheel:5")

    def test_tol_positive(self):
        with pytest.raises(ValidationError):
            SpectrumRequest(power_n=6, tol=0.0)


class TestSpectrumDocument:
    def _doc(self, **overrides):
        base = dict(
            descriptor="power:2",
            order=2,
            method="structural",
            eigenvalues=[
                EigenvalueEntry(value=0.0, multiplicity=1, source="quotient"),
                EigenvalueEntry(value=2.0, multiplicity=1, source="structural"),
            ],
            version="0.0.0",
            tolerances=Tolerances(),
        )
        base.update(overrides)
        return SpectrumDocument(**base)

    def test_multiplicity_sum_enforced(self):
        with pytest.raises(ValidationError):
            self._doc(order=3)

    def test_deviations_only_with_both(self):
        with pytest.raises(ValidationError):
            self._doc(deviations=DeviationReport(max_deviation=0, tol=1e-8, passed=True))
        self._doc(
            method="both",
            deviations=DeviationReport(max_deviation=0, tol=1e-8, passed=True),
        )

    def test_json_round_trip(self):
        doc = build_document(SpectrumRequest(power_n=12, method="both"))
        again = SpectrumDocument.model_validate_json(doc.model_dump_json(by_alias=True))
        assert again == doc

    def test_schema_key_is_aliased(self):
        doc = build_document(SpectrumRequest(power_n=4, method="structural"))
        assert '"schema":1' in doc.model_dump_json(by_alias=True).replace(" ", "")


class TestPresentation:
    def test_grouping_preserves_totals_per_source(self):
        s = power_spectrum(45)
        entries = present_spectrum(s)
        assert sum(e.multiplicity for e in entries) == 45
        by_source = {}
        for e in entries:
            by_source[e.source] = by_source.get(e.source, 0) + e.multiplicity
        line_totals = {}
        for line in s.lines:
            line_totals[line.source] = line_totals.get(line.source, 0) + line.multiplicity
        assert by_source == line_totals

    def test_values_sorted(self):
        entries = present_spectrum(power_spectrum(60))
        values = [e.value for e in entries]
        assert values == sorted(values)


class TestBuildDocument:
    def test_power_both(self):
        doc = build_document(SpectrumRequest(power_n=8, method="both"))
        assert doc.order == 8
        assert doc.deviations.passed
        near = [e for e in doc.eigenvalues if abs(e.value - 8 / 7) < 1e-7]
        assert sum(e.multiplicity for e in near) == 7

    def test_family_structural(self):
        doc = build_document(SpectrumRequest(family="friendship:3", method="structural"))
        assert doc.order == 7
        assert doc.deviations is None
        assert {e.source for e in doc.eigenvalues} == {"closed_form"}

    def test_edges_regular_structural(self):
        text = write_edge_list(make_cycle(6))
        doc = build_document(SpectrumRequest(edges=text, method="both"))
        assert doc.order == 6
        assert doc.deviations.passed

    def test_edges_irregular_structural_refused(self):
        text = "3\n0 1\n1 2\n"  # path: degrees 1, 2, 1
        with pytest.raises(NonRegularComponentError):
            build_document(SpectrumRequest(edges=text, method="structural"))

    def test_edges_irregular_oracle_allowed(self):
        text = "3\n0 1\n1 2\n"
        doc = build_document(SpectrumRequest(edges=text, method="oracle"))
        assert doc.order == 3
        np.testing.assert_allclose(
            sorted(e.value for e in doc.eigenvalues), [0.0, 1.0, 2.0], atol=1e-9
        )

    def test_oracle_cutoff_respected(self, monkeypatch):
        monkeypatch.setenv("SPECJOIN_ORACLE_MAX", "10")
        with pytest.raises(OracleSizeError):
            build_document(SpectrumRequest(power_n=50, method="both"))
        doc = build_document(SpectrumRequest(power_n=50, method="structural"))
        assert doc.order == 50

    def test_descriptor_override(self):
        doc = build_document(
            SpectrumRequest(power_n=5, method="structural", descriptor="power:five")
        )
        assert doc.descriptor == "power:five"

    def test_timestamp_flag(self):
        without = build_document(SpectrumRequest(power_n=5, method="structural"))
        with_ts = build_document(
            SpectrumRequest(power_n=5, method="structural"), timestamp=True
        )
        assert without.timestamp is None
        assert with_ts.timestamp is not None


class TestRunVerify:
    def test_joined_union_suite_passes(self):
        report = run_verify(VerifyRequest(suite="joined-union", cases=30))
        assert report.passed
        assert report.counts["PASS"] == 31  # 30 random + extremes
        assert report.counts["WARN"] == 1

    def test_deterministic_reports(self):
        req = VerifyRequest(suite="joined-union", cases=15)
        a = run_verify(req).model_dump_json(by_alias=True)
        b = run_verify(req).model_dump_json(by_alias=True)
        assert a == b

    def test_power_suite_small(self):
        report = run_verify(VerifyRequest(suite="power", max_n=40))
        assert report.passed
        names = {c.name for c in report.cases}
        assert "power/n=30" in names
        warn_names = {c.name for c in report.cases if c.status == "WARN"}
        assert "power/published/equality-characterization" in warn_names

    def test_power_suite_parallel_matches_serial(self):
        serial = run_verify(VerifyRequest(suite="power", max_n=25, jobs=1))
        parallel = run_verify(VerifyRequest(suite="power", max_n=25, jobs=4))
        assert [c.name for c in serial.cases] == [c.name for c in parallel.cases]
        assert [c.status for c in serial.cases] == [c.status for c in parallel.cases]

    def test_families_suite_warns(self):
        report = run_verify(VerifyRequest(suite="families"))
        assert report.passed
        warns = {c.name: c for c in report.cases if c.status == "WARN"}
        assert "families/published/complete_split" in warns
        assert "families/published/cone" in warns
        assert warns["families/published/complete_split"].deviation > 0.1
        assert warns["families/published/cone"].deviation is not None
