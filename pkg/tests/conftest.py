import pytest

from fracadm.adomian import PolyNonlinearity
from fracadm.series import FracSeries
from fracadm.solver import ProblemSpec

WORKED_CONFIG = """\
[problem]
n = 2
alpha = {alpha}
N = 1*y^2
f = 1
init = 0, 1

[run]
iterations = {iterations}
max_grade = {max_grade}
eval_grid = {eval_grid}
alphas = 0.9, 0.99

[output]
dir = {out_dir}
"""


@pytest.fixture
def worked_problem() -> ProblemSpec:
    """Second-order benchmark: D^2a y = y^2 + 1, y(0) = 0, y^(a)(0) = 1."""
    return ProblemSpec.make(
        n=2,
        alpha=0.9,
        nonlinearity=PolyNonlinearity.from_terms({2: 1}),
        forcing=FracSeries.constant(1),
        init=[0, 1],
    )


@pytest.fixture
def write_worked_config(tmp_path):
    """Write the benchmark problem as a run file; fields overridable."""

    def _write(
        alpha: float = 0.9,
        iterations: int = 1,
        max_grade: int = 12,
        eval_grid: str = "0, 1, 101",
        out_dir: str | None = None,
    ):
        path = tmp_path / "run.cfg"
        path.write_text(
            WORKED_CONFIG.format(
                alpha=alpha,
                iterations=iterations,
                max_grade=max_grade,
                eval_grid=eval_grid,
                out_dir=out_dir or str(tmp_path / "out"),
            )
        )
        return str(path)

    return _write
