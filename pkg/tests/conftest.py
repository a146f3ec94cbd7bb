import random

from hypothesis import strategies as st

from motivec.csa import AlgebraClass
from motivec.motive import Label, MotiveExpr

D4 = AlgebraClass(4, 4, 2)

labels = st.one_of(
    st.just(Label.tate()),
    st.builds(Label.upper, st.integers(0, 2)),
    st.builds(Label.product, st.lists(st.integers(0, 4), min_size=1, max_size=3)),
)
terms = st.tuples(labels, st.integers(0, 6))
exprs = st.builds(lambda ts: MotiveExpr(D4, tuple(ts)), st.lists(terms, max_size=4))
split_exprs = st.builds(
    lambda shifts: MotiveExpr.tate(D4, shifts), st.lists(st.integers(0, 8), max_size=6)
)


def random_label(rng: random.Random) -> Label:
    kind = rng.randrange(3)
    if kind == 0:
        return Label.tate()
    if kind == 1:
        return Label.upper(rng.randint(0, 2))
    return Label.product(rng.randint(0, 4) for _ in range(rng.randint(1, 3)))


def random_expr(rng: random.Random, max_terms: int = 4) -> MotiveExpr:
    return MotiveExpr(
        D4, tuple((random_label(rng), rng.randint(0, 6)) for _ in range(rng.randint(0, max_terms)))
    )


ACCEPTANCE_RESULTS: list[tuple[str, bool, float]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, elapsed in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({elapsed:.2f} s)")
