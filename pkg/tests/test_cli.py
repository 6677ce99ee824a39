"""CLI surface: document parsing, command output, exit codes."""

import json

import pytest

from cthh.cli import main, parse_quiver, serialize_quiver
from cthh.errors import InputSyntaxError
from cthh.quiver import Quiver


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


TRIANGLE = '{"vertices":3,"arrows":[[1,2],[2,3],[3,1]]}'


def test_parse_quiver_triangle():
    q = parse_quiver(TRIANGLE)
    assert q.vertex_count == 3
    assert set(q.arrows) == {(1, 2), (2, 3), (3, 1)}


def test_parse_quiver_two_cycle_rejected():
    from cthh.errors import TwoCycleError
    with pytest.raises(TwoCycleError):
        parse_quiver('{"vertices":2,"arrows":[[1,2],[2,1]]}')


def test_parse_quiver_disconnected_rejected():
    from cthh.errors import DisconnectedError
    with pytest.raises(DisconnectedError):
        parse_quiver('{"vertices":3,"arrows":[[1,2]]}')


def test_parse_quiver_syntax_error_position():
    with pytest.raises(InputSyntaxError) as exc:
        parse_quiver('{"vertices":3,"arrows":[[1,2],')
    assert "line" in str(exc.value)


def test_parse_quiver_schema_errors():
    with pytest.raises(InputSyntaxError):
        parse_quiver('{"vertices":3}')
    with pytest.raises(InputSyntaxError):
        parse_quiver('{"vertices":0,"arrows":[]}')
    with pytest.raises(InputSyntaxError):
        parse_quiver('{"vertices":2,"arrows":[[1,"x"]]}')


def test_roundtrip_parse_serialize():
    for text in (
        TRIANGLE,
        '{"vertices":1,"arrows":[]}',
        '{"vertices":4,"arrows":[[4,1],[1,2],[2,3]]}',
    ):
        q = parse_quiver(text)
        again = parse_quiver(serialize_quiver(q))
        assert again == Quiver(q.vertex_count, tuple(sorted(q.arrows)))


def test_cli_validate_ok(tmp_path, capsys):
    path = write(tmp_path, "q.json", TRIANGLE)
    assert main(["validate", path]) == 0
    assert "ok" in capsys.readouterr().out


def test_cli_validate_bad_input_exit_2(tmp_path, capsys):
    path = write(tmp_path, "q.json", '{"vertices":2,"arrows":[[1,2],[2,1]]}')
    assert main(["validate", path]) == 2


def test_cli_missing_file_exit_2(capsys):
    assert main(["validate", "/nonexistent/q.json"]) == 2


def test_cli_mutate(tmp_path, capsys):
    path = write(tmp_path, "q.json", '{"vertices":3,"arrows":[[1,2],[2,3]]}')
    assert main(["mutate", path, "--at", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"vertices": 3, "arrows": [[1, 3], [2, 1], [3, 2]]}


def test_cli_mutate_bad_vertex(tmp_path, capsys):
    path = write(tmp_path, "q.json", TRIANGLE)
    assert main(["mutate", path, "--at", "7"]) == 2


def test_cli_class_json(capsys):
    assert main(["class", "--seed", "A3", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["count"] == 4
    assert len(doc["quivers"]) == 4


def test_cli_relations(tmp_path, capsys):
    path = write(tmp_path, "q.json", TRIANGLE)
    assert main(["relations", path, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["relations"]) == 3
    assert all(r["kind"] == "zero" for r in doc["relations"])


def test_cli_cartan(tmp_path, capsys):
    path = write(tmp_path, "q.json", TRIANGLE)
    assert main(["cartan", path, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["det"] == 2
    assert doc["assoc_poly_ascending"] == [-2, 0, 0, 2]


def test_cli_hh_typed_and_universal(tmp_path, capsys):
    path = write(tmp_path, "q.json", TRIANGLE)
    assert main(["hh", path, "--char", "2", "--max-i", "8", "--json"]) == 0
    typed = json.loads(capsys.readouterr().out)
    assert typed["h"] == "f_3"
    assert typed["dims"] == [1, 1, 0, 1, 1, 0, 1, 1, 0]
    assert main(["hh", path, "--char", "2", "--max-i", "8", "--method", "universal", "--json"]) == 0
    uni = json.loads(capsys.readouterr().out)
    assert uni["dims"] == typed["dims"]


def test_cli_hh_oracle(tmp_path, capsys):
    path = write(tmp_path, "q.json", TRIANGLE)
    assert main(["hh-oracle", path, "--char", "3", "--max-i", "7", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["dims"] == [1, 1, 0, 0, 0, 0, 1, 1]


def test_cli_verify_pass_and_exit_code(capsys):
    assert main(["verify", "--seed", "A3", "--chars", "2,0", "--max-i", "6", "--jobs", "1"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out


def test_cli_verify_json_deterministic(capsys):
    argv = ["verify", "--seed", "A3", "--chars", "2", "--max-i", "4", "--jobs", "1", "--json"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert doc["passed"] is True
    assert len(doc["records"]) == 4


def test_cli_usage_error_exit_2(capsys):
    assert main(["verify", "--seed", "Z9", "--chars", "2"]) == 2
    assert main(["verify", "--seed", "A3", "--chars", "4"]) == 2


def test_cli_no_command_exit_2(capsys):
    assert main([]) == 2
