import pytest

import wildnum


def test_digit_sum_and_rationals():
    assert wildnum.digit_sum(4769) == 26
    assert wildnum.digit_sum(10**40) == 1
    r = wildnum.make_rational(84, 10)
    assert (r.num, r.den) == (42, 5)
    assert str(wildnum.make_rational(330, 5)) == "66"
    with pytest.raises(ValueError):
        wildnum.make_rational(1, 0)
    with pytest.raises(ValueError):
        wildnum.digit_sum(-1)


def test_steps():
    assert wildnum.van_lamoen_step(wildnum.Rational(2)) == wildnum.Rational(2, 3)
    assert wildnum.family_step(1, 1, 1, wildnum.Rational(2)) == wildnum.Rational(1, 2)
    assert wildnum.collatz_step(27) == 82
    with pytest.raises(wildnum.StepError):
        wildnum.family_step(0, 0, 0, wildnum.Rational(2))
    with pytest.raises(ValueError):
        wildnum.collatz_step(0)


def test_trajectory():
    t = wildnum.trajectory("vanlamoen", 2)
    assert t.reached and t.value == 66 and t.steps == 4
    assert t.format() == "2/1 -> 2/3 -> 6/5 -> 30/11 -> 66"

    c = wildnum.trajectory("collatz", 27)
    assert c.steps == 111 and c.peak == 9232
    assert len(c.trace) == 112

    short = wildnum.trajectory("vanlamoen", 2, max_steps=1)
    assert not short.reached and short.reason == "StepBudget" and short.value is None


def test_generate_matches_table():
    records = wildnum.generate("vanlamoen", 0, 47, workers=2)
    assert [r.value for r in records] == wildnum.paper48()
    assert records[37].value == 73302369360
    assert wildnum.verify("vanlamoen", "paper48") == []
    assert wildnum.verify("family:1,1,1")[0] == (1, 66, 0)


def test_bfile_round_trip():
    records = wildnum.generate("vanlamoen", 80, 90)
    text = wildnum.write_bfile(records)
    entries, comments = wildnum.read_bfile(text)
    assert entries == [(r.index, r.value) for r in records]
    assert comments == ["# a(84) = 0: exhausted (StepBudget)"]
    big = 2**256 + 1
    assert wildnum.read_bfile(f"5 {big}\n")[0] == [(5, big)]
    with pytest.raises(ValueError):
        wildnum.read_bfile("2 66\n1 66\n")


def test_search():
    ranked = wildnum.search(wildnum.paper48()[:10])
    exact = [params for params, _, is_exact in ranked if is_exact]
    assert exact == [(1, 1, 0)]
    assert not any(e for _, _, e in wildnum.search(wildnum.fictional_wild()))
    with pytest.raises(ValueError):
        wildnum.search([11], alpha=(1, 0))
