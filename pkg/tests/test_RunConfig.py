from pathlib import Path

import pytest
from numpy.testing import assert_equal, assert_raises

from pyscl import Caps, RunConfig
from pyscl.constants import (
    DEFAULT_SEED,
    MAX_ENUMERATION_SIZE,
    MAX_JOHNSTONE_BOUND,
    MAX_KOU_BOUND,
)

CONFIG_LOC = Path(__file__).parent / "data/run_config.toml"


def test_caps_defaults():
    """
    Tests that the default caps are the package constants.
    """
    caps = Caps()
    assert_equal(caps.enumeration_max, MAX_ENUMERATION_SIZE)
    assert_equal(caps.witness_bound("johnstone"), MAX_JOHNSTONE_BOUND)
    assert_equal(caps.witness_bound("johnstone-star"), MAX_JOHNSTONE_BOUND)
    assert_equal(caps.witness_bound("kou"), MAX_KOU_BOUND)
    assert_equal(caps.witness_bound("kou-star"), MAX_KOU_BOUND)


@pytest.mark.parametrize("field", ["family_size", "enumeration_max"])
def test_caps_raises_non_positive(field: str):
    with assert_raises(ValueError):
        Caps(**{field: 0})


def test_caps_from_env():
    """
    Tests that environment variables override the given caps, and that unset
    variables leave them alone.
    """
    env = {"PYSCL_ENUMERATION_MAX": "4", "PYSCL_KOU_BOUND": "3"}
    caps = Caps.from_env(env, Caps(beneath_size=10))

    assert_equal(caps.enumeration_max, 4)
    assert_equal(caps.kou_bound, 3)
    assert_equal(caps.beneath_size, 10)
    assert_equal(caps.johnstone_bound, MAX_JOHNSTONE_BOUND)


@pytest.mark.parametrize("value", ["abc", "0", "-2"])
def test_caps_from_env_raises_invalid_values(value: str):
    """
    Tests that environment values that are not positive integers are
    rejected.
    """
    with assert_raises(ValueError):
        Caps.from_env({"PYSCL_FAMILY_SIZE": value})


def test_run_config_raises_invalid_arguments():
    with assert_raises(ValueError):
        RunConfig("scan", jobs=0)

    with assert_raises(ValueError):
        RunConfig("scan", fmt="xml")  # type: ignore


def test_from_sources_defaults():
    """
    Tests that without a file, environment or flags, the defaults are used.
    """
    config = RunConfig.from_sources("scan", env={})

    assert_equal(config.command, "scan")
    assert_equal(config.caps, Caps())
    assert_equal(config.jobs, 1)
    assert_equal(config.fmt, "text")
    assert_equal(config.seed, DEFAULT_SEED)
    assert_equal(config.out, None)


def test_from_sources_precedence():
    """
    Tests that the TOML file overrides the defaults, the environment
    overrides the file's caps, and flags override the file's run settings.
    """
    env = {"PYSCL_KOU_BOUND": "2"}
    config = RunConfig.from_sources(
        "witness", CONFIG_LOC, env, seed=11, jobs=None, out="report.json"
    )

    assert_equal(config.caps.enumeration_max, 4)  # from the file
    assert_equal(config.caps.kou_bound, 2)  # environment beats the file
    assert_equal(config.jobs, 2)  # unset flag does not override the file
    assert_equal(config.fmt, "json")
    assert_equal(config.seed, 11)  # flag beats the file
    assert_equal(config.out, Path("report.json"))
