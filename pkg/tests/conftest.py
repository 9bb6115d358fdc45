"""
vequil
~~~~~~

Exact verification toolkit for perturbed weak vector equilibrium problems
"""

import os

import pytest

from vequil.terrain import world
from vequil.core import Core, Configuration
from vequil.taskregistry import TaskRegistry
from vequil.hookregistry import HookRegistry
from vequil.extensionregistry import ExtensionRegistry
from vequil.ordered_space import orthant, icecream2, interval
from vequil.verdict import SamplingBudget
from vequil.catalog import CatalogId, build, default_cone, default_domain
import vequil.tasks  # noqa: F401 pylint: disable=unused-import

#: Holds the path to the problem file resources
__TEST_BASE_DIR__ = os.path.dirname(__file__)
__PROBLEM_FILES_DIR__ = os.path.join(__TEST_BASE_DIR__, "problems")


@pytest.fixture(scope="function", autouse=True)
def mock_world_config():
    """
    Fixture to mock the terrain.world.config object
    with some default fake data.
    """
    # default command line arguments
    arguments = {
        "--budget": None,
        "--config": None,
        "--early-exit": False,
        "--grid": None,
        "--help": False,
        "--json": False,
        "--marker": "run",
        "--no-ansi": True,
        "--report": None,
        "--seed": None,
        "--syslog": False,
        "--tags": None,
        "--timing": False,
        "--version": False,
        "--with-traceback": False,
        "<problems>": [],
        "<report-file>": None,
        "check-condition": False,
        "coercivity": False,
        "eval": False,
        "levelset": False,
        "paper-suite": False,
        "probe": False,
        "semicont": False,
        "solve": False,
        "validate-cone": False,
        "verify": False,
    }
    world.config = Configuration(arguments)
    world.config.verb = None
    yield world.config
    delattr(world, "config")


@pytest.fixture(scope="function", autouse=True)
def reset_registries():
    """
    Fixture to automatically reset singleton registries.

    The task definitions of vequil.tasks are registered once at import time,
    thus the task registry is restored instead of cleared.
    """
    tasks = dict(TaskRegistry().tasks)
    HookRegistry().reset()
    ExtensionRegistry().reset()
    yield
    TaskRegistry()._tasks = tasks  # pylint: disable=protected-access
    HookRegistry().reset()
    ExtensionRegistry().reset()


@pytest.fixture
def world_config(mock_world_config):
    """
    Fixture to work with world.config object
    """
    yield mock_world_config


@pytest.fixture()
def core():
    """
    Fixture to vequil.core.Core
    """
    return Core()


@pytest.fixture()
def problemfiledir():
    """
    Fixture to return the location of the test problem file dir
    """
    return __PROBLEM_FILES_DIR__


@pytest.fixture()
def problemfile(request):
    """
    Fixture to get the path to a problem file
    """
    return os.path.join(__PROBLEM_FILES_DIR__, request.param + ".vq")


@pytest.fixture()
def orthant2():
    return orthant(2)


@pytest.fixture()
def icecream():
    return icecream2()


@pytest.fixture()
def budget():
    """
    Fixture for a small sampling budget which keeps the quantified checks fast
    """
    return SamplingBudget(directions=2, depth=16, density=4)


@pytest.fixture()
def unit_interval():
    return interval(0, 1, 8)


@pytest.fixture()
def catalog_map(request):
    """
    Fixture to build a catalog map together with its cone and domain
    """
    cid = CatalogId(request.param)
    domain = default_domain(cid)
    return build(cid, domain), default_cone(cid), domain


@pytest.fixture()
def taskregistry():
    """
    Fixture to get the TaskRegistry instance
    """
    yield TaskRegistry()


@pytest.fixture()
def hookregistry():
    """
    Fixture to create and get a clean HookRegistry instance.
    """
    yield HookRegistry()


@pytest.fixture()
def extensionregistry():
    """
    Fixture to create and get a clean ExtensionRegistry instance.
    """
    yield ExtensionRegistry()
