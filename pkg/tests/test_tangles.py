import pytest

from longmap.errors import BadParameter, ParseError, ValidationError
from longmap.tangles import (
    TangleDiagram,
    WirtingerCode,
    fig8,
    longitude_word,
    parse,
    serialize,
    torus2n,
)


def test_code_validation():
    with pytest.raises(ValidationError):
        WirtingerCode(kappa=(0, 1), eps=(1,))
    with pytest.raises(ValidationError):
        WirtingerCode(kappa=(5,), eps=(1,))
    with pytest.raises(ValidationError):
        WirtingerCode(kappa=(0,), eps=(2,))


def test_writhe():
    assert torus2n(5).code.writhe == 5
    assert torus2n(5, -1).code.writhe == -5
    assert fig8().code.writhe == 0


def test_trefoil_construction():
    d = torus2n(3)
    assert d.code.kappa == (2, 0, 1)
    assert d.code.eps == (1, 1, 1)
    assert d.bridge_arcs == (0, 2)
    assert d.schedule == ((1, 1), (3, 3))
    assert d.residual_crossings == (2,)
    assert not d.terminal_is_initial


def test_torus_code_is_braid_recurrence():
    # arc j carries braid color q_(2j mod n); crossing i relates out-arc i,
    # in-arc i-1 and over-arc kappa(i).  In braid colors the relation must
    # read q_(m+1) = q_m^-1 q_(m-1) q_m with m the over-arc color index.
    for n in (3, 5, 7, 9, 11):
        code = torus2n(n).code
        for i in range(1, n + 1):
            out_q = (2 * i) % n
            in_q = (2 * (i - 1)) % n
            over_q = (2 * code.kappa[i - 1]) % n
            assert (over_q + 1) % n == out_q
            assert (over_q - 1) % n == in_q


def test_fig8_construction():
    d = fig8()
    assert d.code.kappa == (2, 3, 0, 1)
    assert d.code.eps == (1, -1, 1, -1)
    assert d.bridge_arcs == (0, 2)
    assert d.terminal_is_initial
    assert set(d.residual_crossings) == {2, 3}


def _reduce(word):
    out = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def test_longitude_word_fig8():
    w = longitude_word(fig8().code)
    assert w.lead_exponent == 0
    assert w.factors == ((2, 1), (3, -1), (0, 1), (1, -1))
    assert len(w) == 5


def test_longitude_word_trefoil():
    w = longitude_word(torus2n(3).code)
    assert w.lead_exponent == -3
    assert w.factors == ((2, 1), (0, 1), (1, 1))
    # as a free word with x0 = x1 = x2 it reduces to the identity
    collapsed = [(0, -1)] * 3 + [(0, 1)] * 3
    assert _reduce(collapsed) == ()


def test_schedule_validation():
    code = WirtingerCode(kappa=(1, 2, 0), eps=(1, 1, 1))
    with pytest.raises(ValidationError):
        # duplicate targets
        TangleDiagram(code, bridge_arcs=(0, 2),
                      schedule=((1, 1), (1, 2)), residual_crossings=(3,))
    with pytest.raises(ValidationError):
        # arc 3 never defined
        TangleDiagram(code, bridge_arcs=(0, 2),
                      schedule=((1, 1),), residual_crossings=(2, 3))
    with pytest.raises(ValidationError):
        # crossing 3 cannot define arc 1
        TangleDiagram(code, bridge_arcs=(0, 2),
                      schedule=((1, 3), (3, 3)), residual_crossings=(1, 2))
    with pytest.raises(ValidationError):
        # crossings not partitioned
        TangleDiagram(code, bridge_arcs=(0, 2),
                      schedule=((1, 1), (3, 3)), residual_crossings=(2, 3))


def test_bad_torus_params():
    with pytest.raises(BadParameter):
        torus2n(4)
    with pytest.raises(BadParameter):
        torus2n(1)
    with pytest.raises(BadParameter):
        torus2n(5, 2)


@pytest.mark.parametrize("diagram", [torus2n(3), torus2n(7, -1), fig8()],
                         ids=["t3", "t7m", "fig8"])
def test_roundtrip(diagram):
    back = parse(serialize(diagram))
    assert back.code == diagram.code
    assert back.bridge_arcs == diagram.bridge_arcs
    assert back.schedule == diagram.schedule
    assert back.residual_crossings == diagram.residual_crossings
    assert back.terminal_is_initial == diagram.terminal_is_initial


def test_parse_comments_and_blanks():
    text = """
# trefoil
tangle n=3
kappa=1,2,0   # over-arcs
eps=+,+,+
"""
    d = parse(text)
    assert d.code.n == 3
    assert not d.has_schedule


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as ei:
        parse("tangle n=3\nkappa=1,2,0\neps=+,?,+\n")
    assert ei.value.line == 3
    with pytest.raises(ParseError):
        parse("kappa=1,2,0\n")
    with pytest.raises(ParseError):
        parse("tangle n=3\nkappa=1,2,0\neps=+,+,+\ncolor=red\n")
    with pytest.raises(ParseError):
        parse("tangle n=3\nkappa=1,2,0\neps=+,+,+\nschedule=oops\n"
              "bridges=0,2\n")


def test_parse_length_mismatch():
    with pytest.raises(ValidationError):
        parse("tangle n=4\nkappa=1,2,0\neps=+,+,+\n")


def test_parse_bridges_without_schedule():
    with pytest.raises(ValidationError):
        parse("tangle n=3\nkappa=1,2,0\neps=+,+,+\nbridges=0,2\n")


def test_parse_infers_terminal_identification():
    d = parse(serialize(fig8()))
    assert d.terminal_is_initial
