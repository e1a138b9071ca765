from hypothesis import strategies as st

from kohnert import Diagram


def cells(max_row=4, max_col=4, max_size=7):
    return st.frozensets(
        st.tuples(st.integers(1, max_row), st.integers(1, max_col)), max_size=max_size
    )


def diagrams(max_row=4, max_col=4, max_size=7):
    return cells(max_row, max_col, max_size).map(Diagram)
