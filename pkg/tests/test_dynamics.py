import pytest
from hypothesis import given, strategies as st

from dyck4d import (
    Node,
    build_table,
    catalan,
    iter_nodes,
    table_from_csv,
    table_from_json,
    table_to_csv,
    table_to_json,
)
from dyck4d.dynamics import TABLE_FORMAT
from dyck4d.errors import OutOfRange, ResourceLimit, TableFormatError


class TestBuildTable:
    def test_single_entry(self):
        table = build_table(0)
        assert table.count(0, 0) == 1
        assert len(table) == 1

    def test_paper_fixture_values(self):
        table = build_table(12)
        assert table.count(12, 0) == 132
        assert table.count(7, 1) == table.count(6, 2) + table.count(6, 0)
        # frozen from the brute-force scan: 14 = 9 + 5
        assert table.count(7, 1) == 14
        assert table.count(6, 2) == 9
        assert table.count(6, 0) == 5

    def test_unreachable_reads_zero(self):
        table = build_table(8)
        assert table.count(6, 1) == 0
        assert table.count(2, 4) == 0
        assert table.count(-1, 0) == 0
        assert table.count(3, -1) == 0

    def test_query_beyond_bound_raises(self):
        table = build_table(5)
        with pytest.raises(OutOfRange):
            table.count(6, 0)
        with pytest.raises(OutOfRange):
            table.count_node(Node(6, 0, 3, 3))

    def test_cap(self):
        with pytest.raises(ResourceLimit):
            build_table(4097)
        with pytest.raises(ResourceLimit):
            build_table(10, cap=5)
        assert build_table(10, cap=10).max_i == 10

    def test_negative_bound(self):
        with pytest.raises(ValueError):
            build_table(-1)

    @given(st.integers(0, 60))
    def test_recurrence_closure(self, max_i):
        table = build_table(max_i)
        for node in iter_nodes(max_i):
            if node.i == 0:
                continue
            assert table.count(node.i, node.j) == (
                table.count(node.i - 1, node.j + 1)
                + table.count(node.i - 1, node.j - 1)
            )

    def test_column_tops_are_one(self):
        table = build_table(40)
        for i in range(41):
            assert table.count(i, i) == 1

    def test_bottom_rows_agree(self):
        table = build_table(60)
        for n in range(1, 31):
            assert table.count(2 * n, 0) == table.count(2 * n - 1, 1)


class TestFourCoordinateForm:
    def test_shifted_recurrence_example(self):
        table = build_table(7)
        assert table.count_node(Node(7, 1, 4, 3)) == (
            table.count_node(Node(6, 2, 4, 2)) + table.count_node(Node(6, 0, 3, 3))
        )

    def test_origin(self):
        assert build_table(0).count_node(Node(0, 0, 0, 0)) == 1

    def test_value_example(self):
        assert build_table(6).count_node(Node(6, 0, 3, 3)) == 5

    def test_agrees_with_two_coordinates(self):
        table = build_table(30)
        for node in iter_nodes(30):
            assert table.count_node(node) == table.count(node.i, node.j)


class TestCatalan:
    @pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (6, 132)])
    def test_values(self, n, expected):
        assert catalan(n) == expected

    def test_matches_odd_column(self):
        table = build_table(40)
        for n in range(1, 21):
            assert catalan(n) == table.count(2 * n - 1, 1)

    def test_big_values_are_exact(self):
        # Frozen from an independent factorial-quotient computation;
        # Cat(37) overflows unsigned 64-bit, so exactness must survive it.
        assert catalan(36) == 11959798385860453492
        assert catalan(37) == 45950804324621742364

    def test_cap(self):
        with pytest.raises(ResourceLimit):
            catalan(2049)
        with pytest.raises(ValueError):
            catalan(-1)


class TestSerialization:
    def test_csv_round_trip(self):
        table = build_table(9)
        assert table_from_csv(table_to_csv(table)) == table

    def test_csv_shape(self):
        text = table_to_csv(build_table(2))
        assert text.splitlines() == [
            "i,j,n,k,count",
            "0,0,0,0,1",
            "1,1,1,0,1",
            "2,2,2,0,1",
            "2,0,1,1,1",
        ]

    def test_json_round_trip(self):
        table = build_table(9)
        assert table_from_json(table_to_json(table)) == table

    def test_json_header(self):
        import json

        doc = json.loads(table_to_json(build_table(3)))
        assert doc["format"] == TABLE_FORMAT
        assert doc["max_i"] == 3
        assert len(doc["entries"]) == 1 + 1 + 2 + 2
        assert all(isinstance(entry["count"], str) for entry in doc["entries"])

    def test_json_counts_stay_exact(self):
        table = build_table(80)
        restored = table_from_json(table_to_json(table))
        assert restored.count(80, 0) == table.count(80, 0)

    def test_csv_rejects_wrong_header(self):
        with pytest.raises(TableFormatError):
            table_from_csv("a,b,c\n1,2,3\n")

    def test_csv_rejects_corrupt_count(self):
        text = table_to_csv(build_table(3)).replace("2,0,1,1,1", "2,0,1,1,7")
        with pytest.raises(TableFormatError):
            table_from_csv(text)

    def test_csv_rejects_missing_entry(self):
        lines = table_to_csv(build_table(3)).splitlines()
        with pytest.raises(TableFormatError):
            table_from_csv("\n".join(lines[:-1]) + "\n")

    def test_csv_rejects_bad_node(self):
        with pytest.raises(TableFormatError):
            table_from_csv("i,j,n,k,count\n0,0,0,0,1\n1,1,1,1,1\n")

    def test_csv_rejects_duplicate(self):
        text = table_to_csv(build_table(1)) + "1,1,1,0,1\n"
        with pytest.raises(TableFormatError):
            table_from_csv(text)

    def test_json_rejects_wrong_format(self):
        import json

        doc = json.loads(table_to_json(build_table(1)))
        doc["format"] = "dyck4d-table/9"
        with pytest.raises(TableFormatError):
            table_from_json(json.dumps(doc))

    def test_json_rejects_numeric_count(self):
        import json

        doc = json.loads(table_to_json(build_table(1)))
        doc["entries"][0]["count"] = 1
        with pytest.raises(TableFormatError):
            table_from_json(json.dumps(doc))
