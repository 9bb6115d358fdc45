import os
import sys

from docopt import docopt
import colorful
import tagexpressions

from . import __VERSION__
from .core import Core
from .core import Configuration
from .loader import load_extensions
from .matcher import merge_tasks
from .taskregistry import TaskRegistry
from .hookregistry import HookRegistry
from .runner import Runner
from .extensionregistry import ExtensionRegistry
from .exceptions import ProblemFileNotFoundError
from .errororacle import error_oracle, catch_unhandled_exception
from .report import load_report
from .replay import replay_report
from .terrain import world
from . import utils
from . import tasks  # noqa: F401 pylint: disable=unused-import

#: one verb per module capability
VERBS = ("validate-cone", "eval", "semicont", "levelset", "solve", "check-condition", "coercivity", "probe")

#: the bundled regression suite
PAPER_SUITE = os.path.join(os.path.dirname(__file__), "suites", "paper.vq")

# use only 8 ANSI colors
colorful.use_8_ansi_colors()


def setup_config(arguments):
    """
    Parses the docopt arguments and creates a configuration object in terrain.world
    """
    world.config = Configuration(arguments)
    world.config.verb = next((v for v in VERBS if arguments.get(v)), None)


def collect_problem_files(paths):
    """
    Expands the given paths to problem files; directories are searched for ``*.vq``
    """
    problem_files = []
    for given in paths:
        if not os.path.exists(given):
            raise ProblemFileNotFoundError(given)

        if os.path.isdir(given):
            problem_files.extend(sorted(utils.recursive_glob(given, "*.vq")))
            continue

        problem_files.append(given)
    return problem_files


def run_problems(core):
    """
    Run the parsed problems

    :param Core core: the vequil core object
    """
    problems = core.problems_to_run
    merge_tasks(problems, TaskRegistry().tasks)

    for problem in problems:
        problem.override(world.config.grid, world.config.budget, world.config.seed)

    runner = Runner(HookRegistry(), early_exit=world.config.early_exit, verb=world.config.verb)
    return runner.start(problems, marker=world.config.marker)


def verify_report(path):
    """
    Replays every certificate of the report at the given path

    :returns: 0 if all replay, 1 otherwise
    """
    outcomes = replay_report(load_report(path))
    if not outcomes:
        utils.console_write(colorful.cyan("nothing to replay"))
        return 0

    returncode = 0
    for outcome in outcomes:
        if outcome.mismatch is None:
            utils.console_write("{0} {1}: {2}".format(colorful.bold_green("+"), outcome.problem, outcome.sentence))
            continue
        returncode = 1
        index, reason = outcome.mismatch
        utils.console_write(
            "{0} {1}: {2}\n    {3}".format(
                colorful.bold_red("x"),
                outcome.problem,
                outcome.sentence,
                colorful.red("{0} certificate fails at index {1}: {2}".format(outcome.kind, index, reason)),
            )
        )
    utils.console_write("{0} certificates replayed".format(len(outcomes)))
    return returncode


def parse_problems(problem_files):
    core = Core()
    tag_expression = None
    if world.config.tags:
        tag_expression = tagexpressions.parse(world.config.tags)
    core.parse_problems(problem_files, tag_expression)
    return core


def build_usage(extensions):
    # note: using doc string for usage, messes up Sphinx documantation
    usage = """
Usage:
    vequil verify <report-file> [--no-ansi]
    vequil paper-suite [options] [--no-ansi]
           {0}
    vequil (validate-cone | eval | semicont | levelset | solve | check-condition | coercivity | probe)
           (<problems>... | --config=<path>) [options] [--no-ansi]
           {0}
    vequil (<problems>... | --config=<path>) [options] [--no-ansi]
           {0}
    vequil (-h | --help)
    vequil (-v | --version)

Arguments:
    problems                                    problem files or directories of *.vq files to run
    report-file                                 JSON run report whose certificates are replayed

Options:
    -h --help                                   show this screen
    -v --version                                show version
    -c=<path> --config=<path>                   problem file to run
    --json                                      write the JSON run report to stdout
    --budget=<n>                                tail depth of the quantified checks
    --grid=<n>                                  grid count per axis of every problem domain
    --seed=<n>                                  seed of additional random sequence directions
    --tags=<tags>                               only run tasks matching the given tag expression
    --no-ansi                                   do not colour the output
    -e --early-exit                             stop the run after the first failed task
    -t --with-traceback                         show the Exception traceback when a task fails
    -m=<marker> --marker=<marker>               specify the marker for this run [default: run]
    {1}
    """
    return usage.format(extensions.get_options(), extensions.get_option_description())


@error_oracle
def main(args=None):
    """
    Entrypont to vequil.
    Setup up configuration, loads extensions, reads problem files and runs
    their tasks or replays the certificates of a run report
    """

    if args is None:
        args = sys.argv[1:]

    # load extensions
    load_extensions()

    extensions = ExtensionRegistry()
    usage = build_usage(extensions)

    sys.excepthook = catch_unhandled_exception

    # add version to the usage
    arguments = docopt("vequil {0}\n{1}".format(__VERSION__, usage), argv=args, version=__VERSION__)

    # store all arguments to configuration dict in terrain.world
    setup_config(arguments)

    # disable colors if necessary
    if world.config.no_ansi:
        colorful.disable()
    else:
        colorful.use_8_ansi_colors()

    if world.config.verify:
        return verify_report(world.config.report_file)

    # load needed extensions
    extensions.load(world.config)

    if world.config.paper_suite:
        problem_files = [PAPER_SUITE]
    elif world.config.config:
        problem_files = collect_problem_files([world.config.config])
    else:
        problem_files = collect_problem_files(world.config.problems)

    return run_problems(parse_problems(problem_files))


def verify_main(args=None):
    """
    Entrypoint of ``vequil-verify``: certificate replay only
    """
    if args is None:
        args = sys.argv[1:]
    return main(["verify"] + list(args))


if __name__ == "__main__":
    sys.exit(main())
