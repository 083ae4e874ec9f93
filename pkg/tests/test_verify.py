import pytest

from modrecip.core import DomainError
from modrecip.verify import (
    SweepConfig,
    load_sweep_config,
    run_all,
    run_divergence_sweep,
    run_division_law_sweep,
    run_gaussian_linear_sweep,
    run_gaussian_sweep,
    run_oracle_sweep,
    run_quad_sweep,
    run_reciprocity_sweep,
    run_reduction_sweep,
    run_shift_invariance_sweep,
    run_square_sweep,
    run_unit_contradiction_fixture,
    run_unit_modulus_sweep,
    signed_range,
)

SMALL = SweepConfig(
    bound=8,
    k_bound=3,
    gaussian_bound=3,
    shift_bound=6,
    reduce_bound=6,
    square_bound=6,
    quad_bound=4,
    linear_bound=6,
)


def test_signed_range_excludes_zero_and_orders_ascending():
    assert signed_range(3) == [-3, -2, -1, 1, 2, 3]
    assert signed_range(3, start=2) == [-3, -2, 2, 3]


def test_config_validation():
    with pytest.raises(DomainError):
        SweepConfig(bound=1)
    with pytest.raises(DomainError):
        SweepConfig(bound=2**20 + 1)
    with pytest.raises(DomainError):
        SweepConfig(shard_count=0)
    with pytest.raises(DomainError):
        SweepConfig(k_bound=-1)
    with pytest.raises(DomainError):
        SweepConfig(quad_bound=1)


def test_load_sweep_config(tmp_path):
    path = tmp_path / "sweep.cfg"
    path.write_text("bound=16  # comment\n\nquad_bound = 5\n")
    config = load_sweep_config(str(path))
    assert config.bound == 16
    assert config.quad_bound == 5
    assert config.k_bound == SweepConfig().k_bound


@pytest.mark.parametrize("text", ["bound\n", "mystery=4\n", "bound=abc\n"])
def test_load_sweep_config_rejects(tmp_path, text):
    path = tmp_path / "sweep.cfg"
    path.write_text(text)
    with pytest.raises(ValueError):
        load_sweep_config(str(path))


def test_all_sweeps_pass_on_small_config():
    results = run_all(SMALL)
    assert all(r.passed for r in results), [(r.name, r.failures) for r in results]
    assert all(r.cases > 0 for r in results)
    names = [r.name for r in results]
    assert "reciprocity" in names and "quad-pair" in names


def test_sharding_is_result_invariant():
    serial = run_all(SMALL)
    sharded = run_all(SweepConfig(**{**SMALL.__dict__, "shard_count": 3}))
    assert [(r.name, r.cases, r.failure_count) for r in serial] == [
        (r.name, r.cases, r.failure_count) for r in sharded
    ]


def test_classical_units_mode_reports_designed_breaks_only():
    recip = run_reciprocity_sweep(SMALL, classical_units=True)
    assert recip.passed
    assert recip.name == "reciprocity-classical-units"
    assert "designed breaks" in recip.note
    assert int(recip.note.split()[0]) > 0

    red = run_reduction_sweep(SMALL, classical_units=True)
    assert red.passed
    assert int(red.note.split()[0]) > 0


def test_unit_contradiction_fixture():
    result = run_unit_contradiction_fixture()
    assert result.passed and result.cases == 3


@pytest.mark.parametrize(
    "sweep",
    [
        run_division_law_sweep,
        run_unit_modulus_sweep,
        run_divergence_sweep,
        run_oracle_sweep,
        run_reciprocity_sweep,
        run_shift_invariance_sweep,
        run_reduction_sweep,
        run_square_sweep,
        run_quad_sweep,
        run_gaussian_sweep,
        run_gaussian_linear_sweep,
    ],
)
def test_each_sweep_individually(sweep):
    result = sweep(SMALL)
    assert result.passed, result.failures
    assert result.cases > 0
