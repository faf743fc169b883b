import pytest

from pathcolour import fileformat as ff
from pathcolour.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def s10(tmp_path, capsys):
    code, _, _ = run(capsys, "construct", "--order", 10, "--mode", "two-chromatic", "--out", tmp_path / "s10")
    assert code == 0
    return tmp_path / "s10"


def test_construct_two_chromatic(s10, capsys):
    system = ff.read_system(f"{s10}.sys")
    col = ff.read_colouring(f"{s10}.col")
    assert len(system.blocks) == 15 and col.class_sizes() == [5, 5]


def test_construct_inadmissible(tmp_path, capsys):
    code, _, err = run(capsys, "construct", "--order", 5, "--out", tmp_path / "x")
    assert code == 2 and "order 5" in err


def test_bad_flags_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--mode", "nonsense"])
    assert exc.value.code == 2


def test_verify_ok_and_missing_edges(s10, tmp_path, capsys):
    code, out, _ = run(capsys, "verify", f"{s10}.sys", "--colouring", f"{s10}.col")
    assert code == 0 and out.strip() == "OK"
    lines = ff.Path(f"{s10}.sys").read_text().splitlines()
    header = lines[0].split()
    header[-1] = str(int(header[-1]) - 1)
    cut = tmp_path / "cut.sys"
    cut.write_text("\n".join([" ".join(header)] + lines[2:]) + "\n")
    code, out, _ = run(capsys, "verify", cut)
    assert code == 1
    assert [ln.split()[0] for ln in out.splitlines()] == ["MISSING_EDGE"] * 3


def test_verify_truncated(s10, tmp_path, capsys):
    bad = tmp_path / "bad.sys"
    bad.write_text("\n".join(ff.Path(f"{s10}.sys").read_text().splitlines()[:4]) + "\n")
    code, _, _ = run(capsys, "verify", bad)
    assert code == 2


def test_analyze_queries(s10, tmp_path, capsys):
    code, out, _ = run(capsys, "analyze", f"{s10}.sys", "chromatic")
    assert (code, out.strip()) == (0, "CHROMATIC 2")
    code, out, _ = run(capsys, "analyze", f"{s10}.sys", "unique")
    assert (code, out.strip()) == (0, "UNIQUE false")
    code, _, _ = run(capsys, "analyze", f"{s10}.sys", "forced-pair", "--u", 1, "--v", 1)
    assert code == 2
    code, _, _ = run(capsys, "analyze", f"{s10}.sys", "unique", "--max-nodes", 0)
    assert code == 2


def test_forced_pair_on_28(tmp_path, capsys, cert28):
    ff.write_pair(tmp_path / "f28", cert28.system, cert28.colouring)
    code, out, _ = run(capsys, "analyze", tmp_path / "f28.sys", "forced-pair", "--u", 27, "--v", 28)
    assert (code, out.strip()) == (0, "FORCED_DISTINCT true")


def test_unique_construct_analyze_extend(tmp_path, capsys):
    code, out, _ = run(capsys, "construct", "--order", 109, "--mode", "unique", "--out", tmp_path / "u")
    assert code == 0 and "BLOCKS 1962" in out
    code, out, _ = run(capsys, "analyze", tmp_path / "u.sys", "unique")
    assert (code, out.strip()) == (0, "UNIQUE true")
    code, out, _ = run(capsys, "analyze", tmp_path / "u.sys", "unique", "--max-nodes", 1)
    assert (code, out.strip()) == (4, "UNKNOWN budget")
    code, out, _ = run(capsys, "extend", tmp_path / "u.sys", tmp_path / "u.col", "--lemma", "plus5", "--out", tmp_path / "e")
    assert code == 0 and "ORDER 114" in out
    code, out, _ = run(capsys, "extend", tmp_path / "u.sys", tmp_path / "u.col", "--lemma", "plus2", "--out", tmp_path / "e2")
    assert code == 0 and "ORDER 111" in out
    code, _, _ = run(capsys, "construct", "--order", 110, "--mode", "unique", "--out", tmp_path / "bad")
    assert code == 2


def test_extend_from_discovered_pattern(tmp_path, capsys, ctx109):
    # swapping colour names hides the canonical registry; discovery must still find a pattern
    ff.write_pair(tmp_path / "u", ctx109.system, ctx109.colouring.swapped())
    code, out, _ = run(capsys, "extend", tmp_path / "u.sys", tmp_path / "u.col", "--lemma", "plus2", "--out", tmp_path / "e")
    assert code == 0 and "ORDER 111" in out


def test_extend_guard_message(s10, tmp_path, capsys):
    code, _, err = run(capsys, "extend", f"{s10}.sys", f"{s10}.col", "--lemma", "plus5", "--out", tmp_path / "e")
    assert code == 2 and err.startswith("GUARD")


def test_extend_k_chromatic(tmp_path, capsys):
    from pathcolour.builder import build_2chromatic
    from pathcolour.core import Colouring

    system, col = build_2chromatic(12)
    moved = dict(col.assignment)
    moved[1] = 2
    ff.write_pair(tmp_path / "k", system, Colouring(3, moved))
    code, out, _ = run(capsys, "extend", tmp_path / "k.sys", tmp_path / "k.col", "--lemma", "kplus7", "--out", tmp_path / "k19")
    assert code == 0 and "ORDER 19" in out
    code, out, _ = run(
        capsys, "construct", "--order", 31, "--mode", "k-chromatic",
        "--seed-system", tmp_path / "k.sys", "--seed-colouring", tmp_path / "k.col", "--out", tmp_path / "k31",
    )
    assert code == 0 and "ORDER 31" in out


def test_ingredient_and_compose(tmp_path, capsys, data_dir):
    code, out, _ = run(capsys, "ingredient", "--kind", "k63plusk3", "--out", tmp_path / "g")
    assert code == 0 and "TARGET bipartite_plus_clique 1-6 7-9" in out
    code, _, _ = run(capsys, "verify", tmp_path / "g.sys", "--target", "bipartite_plus_clique:1-6:7-9")
    assert code == 0
    code, _, _ = run(capsys, "verify", tmp_path / "g.sys")
    assert code == 1
    code, out, _ = run(capsys, "compose", "--design", data_dir / "design_13_4_1.txt", "--out", tmp_path / "d")
    assert code == 0 and "BLOCKS 26" in out
    code, _, _ = run(capsys, "ingredient", "--kind", "K99", "--out", tmp_path / "x")
    assert code == 2
