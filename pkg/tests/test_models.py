import json

from specht_brauer.core.combinatorics import BlockLabel, Partition
from specht_brauer.core.groups import Permutation
from specht_brauer.core.models import (
    BlockHeightSummary,
    CoreReport,
    HGroupReport,
    TwoRowReport,
    VertexCertificate,
)


def test_core_report_record_uses_text_partitions():
    label = BlockLabel(p=3, core=Partition((3, 1)), weight=3, defect_exponent=4)
    report = CoreReport(
        shape=Partition((6, 5, 2)),
        label=label,
        quotient=(Partition((2,)), Partition(()), Partition((1,))),
        dimension=1,
        height=0,
    )
    record = report.to_record()
    assert list(record) == ["lambda", "p", "core", "weight", "quotient", "defect_exponent", "dimension", "height"]
    assert record["core"] == "3,1"
    assert record["quotient"] == ["2", "-", "1"]
    assert json.loads(json.dumps(record)) == record


def test_permutations_render_in_cycle_notation():
    report = HGroupReport(
        shape=Partition((2, 2)),
        tableau="1,2;3,4",
        generators=[Permutation.parse("(1,2)(3,4)", 4)],
        order=2,
    )
    assert report.to_record()["generators"] == ["(1,2)(3,4)"]


def test_vertex_certificate_nonzero_alias():
    certificate = VertexCertificate(
        shape=Partition((2, 2)),
        p=2,
        h_generators=[],
        h_order=2,
        sylow_generators=[],
        sylow_order=2,
        specht_dim=2,
        quotient_dim=1,
        e_t_nonzero=True,
    )
    assert certificate.nonzero
    assert certificate.to_record()["method"] == "specht"


def test_height_summary_consistency():
    label = BlockLabel(p=2, core=Partition(()), weight=2, defect_exponent=3)
    summary = BlockHeightSummary(label=label, all_heights_zero=False, witness=Partition((2, 2)), witness_height=1)
    assert summary.consistent
    assert summary.to_record()["constructed_witness"] is None


def test_two_row_consistency_flag():
    label = BlockLabel(p=3, core=Partition((4, 2)), weight=1, defect_exponent=1)
    report = TwoRowReport(
        n=9,
        p=3,
        shape=Partition((7, 2)),
        dimension=27,
        dimension_formula=27,
        dimension_exponent=3,
        label=label,
        case="p=3",
        expected_core=Partition((4, 2)),
        a=4,
        lower_bound_order=3,
    )
    assert report.core_matches
    assert report.defect_order == 3
    assert report.consistent is True
    record = report.to_record()
    assert record["b"] == 1
    assert record["expected_core"] == "4,2"


def test_two_row_lower_bound_below_defect_order_is_consistent():
    label = BlockLabel(p=3, core=Partition((2,)), weight=2, defect_exponent=2)
    report = TwoRowReport(
        n=8,
        p=3,
        shape=Partition((6, 2)),
        dimension=20,
        dimension_formula=20,
        dimension_exponent=0,
        label=label,
        case="coprime",
        expected_core=None,
        a=2,
        lower_bound_order=3,
        lower_bound_source="brauer-quotient",
    )
    assert report.consistent is True
    assert report.vertex_is_defect_group is False
    record = report.to_record()
    assert record["lower_bound_source"] == "brauer-quotient"
    assert record["vertex_is_defect_group"] is False
