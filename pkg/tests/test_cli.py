import json

from numlam import alpha_eq, barendregt, church, parse_term
from numlam.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_normal_form(capsys):
    code, out, _ = run(capsys, "eval", r"(\x.x) (\y.y)")
    assert code == 0
    assert out.splitlines()[0] == r"\y.y"
    assert "steps: 1 beta" in out


def test_eval_pair_sugar_with_prelude(capsys):
    code, out, _ = run(capsys, "eval", "--prelude", r"(\x.<F,x>) I")
    assert code == 0
    assert alpha_eq(parse_term(out.splitlines()[0]), barendregt(1))


def test_eval_out_of_fuel(capsys):
    code, out, _ = run(capsys, "eval", r"(\x.x x) (\x.x x)", "--fuel", "100")
    assert code == 2
    assert "out of fuel" in out


def test_eval_syntax_error(capsys):
    code, _, err = run(capsys, "eval", r"(\x")
    assert code == 1
    assert "syntax error" in err and "offset" in err


def test_numeral_command(capsys):
    code, out, _ = run(capsys, "numeral", "church", "2")
    assert code == 0 and out.strip() == r"\f.\x.f (f x)"
    code, out, _ = run(capsys, "numeral", "a", "2")
    assert code == 0 and out.strip() == r"\x1.\x2.\x.x"
    code, out, _ = run(capsys, "numeral", "tilde", "1")
    assert code == 0 and out.strip() == r"\x.x x"


def test_check_pass(capsys):
    code, out, _ = run(capsys, "check", "barendregt", "all", "--upto", "10")
    assert code == 0
    assert out.count(": pass") == 3


def test_check_absent_combinator(capsys):
    code, out, _ = run(capsys, "check", "a", "zero")
    assert code == 3
    assert "absent" in out


def test_check_all_with_absent_is_inconclusive(capsys):
    code, out, _ = run(capsys, "check", "b", "all", "--upto", "10")
    assert code == 3
    assert "succ: pass" in out and "pred: absent" in out and "zero: pass" in out


def test_head_command(capsys):
    code, out, _ = run(capsys, "head", r"(\n.n (\x.x)) (\x1.\x2.\x.x)")
    assert code == 0
    lines = out.splitlines()
    assert alpha_eq(parse_term(lines[0]), parse_term(r"\x1.\x.x"))
    assert lines[1] == "h = 2"


def test_head_trace(capsys):
    code, out, _ = run(capsys, "head", "--trace", r"(\x.x) y")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == r"(\x.x) y" and lines[1] == "y" and lines[2] == "h = 1"


def test_head_out_of_fuel(capsys):
    code, out, _ = run(capsys, "head", r"(\x.x x) (\x.x x)", "--fuel", "10")
    assert code == 2


def test_eq_verdicts(capsys):
    code, out, _ = run(capsys, "eq", r"(\n.\f.\x.f (n f x)) (\f.\x.f x)", r"\f.\x.f (f x)")
    assert code == 0 and out.strip() == "Equal"
    code, out, _ = run(capsys, "eq", r"\x.\y.x", r"\x.\y.y")
    assert code == 1 and out.strip() == "Distinct"
    code, out, _ = run(capsys, "eq", r"(\x.x x) (\x.x x)", r"\x.x", "--fuel", "50")
    assert code == 3 and out.startswith("Unknown")


def test_defs_file(capsys, tmp_path):
    path = tmp_path / "defs.lam"
    path.write_text("two = \\f.\\x.f (f x); -- church two\nquad = \\n.two (two n);\n")
    code, out, _ = run(capsys, "eval", "--defs", str(path), "quad")
    assert code == 0
    assert alpha_eq(parse_term(out.splitlines()[0]), church(4))


def test_defs_duplicate_name(capsys, tmp_path):
    path = tmp_path / "defs.lam"
    path.write_text("a = \\x.x;\na = \\y.y;\n")
    code, _, err = run(capsys, "eval", "--defs", str(path), "a")
    assert code == 1 and "duplicate" in err


def test_prelude_names_resolve(capsys):
    code, out, _ = run(capsys, "eq", "--prelude", "S_barendregt I", "<F, I>")
    assert code == 0 and out.strip() == "Equal"


def test_definable_command(capsys):
    code, out, _ = run(capsys, "definable", "church", "--prelude", "S_church",
                       "--fn", "succ", "--upto", "10")
    assert code == 0
    assert "succ on church: pass" in out


def test_definable_k_small_grid(capsys):
    code, out, _ = run(capsys, "definable", "church", "--prelude",
                       r"\n.\m.Z_church m (S_church n) "
                       r"((\a.\b.\f.\x.a f (b f x)) (m P_church n) (n P_church m))",
                       "--fn", "k", "--upto", "4")
    assert code == 0


def test_json_reports_are_stable(capsys):
    code1, out1, _ = run(capsys, "check", "barendregt", "zero", "--upto", "5", "--json")
    code2, out2, _ = run(capsys, "check", "barendregt", "zero", "--upto", "5", "--json")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["format"] == 1
    assert payload["reports"][0]["overall"] == "pass"


def test_json_eval(capsys):
    code, out, _ = run(capsys, "eval", "--json", r"(\x.x) y")
    payload = json.loads(out)
    assert code == 0
    assert payload == {
        "format": 1,
        "status": "normal",
        "term": "y",
        "steps": 1,
        "eta_steps": 0,
    }


def test_unknown_system_exits_one(capsys):
    code, _, err = run(capsys, "numeral", "roman", "3")
    assert code == 1
    assert "unknown numeral system" in err
