"""
Maps the exceptions escaping a vequil run to console diagnostics and exit statuses.

Status 2 means the run could not start or crashed: unreadable problem
files, unknown maps or templates, unexpected exceptions. Status 1 means
the run itself went wrong: failing hooks, arithmetic errors inside a
check, an early exit or an interrupt.
"""

import sys
from collections import namedtuple
from functools import wraps

import colorful

from .exceptions import VequilError, InputError, HookError
from .utils import Failure, console_write

#: how an exception class is reported; the first matching rule wins
Diagnosis = namedtuple("Diagnosis", ["exception_class", "exit_status", "traceback"])

DIAGNOSES = (
    Diagnosis(InputError, 2, False),
    Diagnosis(HookError, 1, True),
    Diagnosis(VequilError, 1, False),
    Diagnosis(KeyboardInterrupt, 1, False),
    Diagnosis(BaseException, 2, True),
)


def diagnose(exception):
    return next(d for d in DIAGNOSES if isinstance(exception, d.exception_class))


def abort(return_code):
    sys.exit(return_code)


def _failure_of(exception):
    return exception.failure if isinstance(exception, HookError) else Failure(exception)


def handle_exception(exception):
    """
    Reports the exception on the console and aborts with its exit status
    """
    diagnosis = diagnose(exception)
    if isinstance(exception, KeyboardInterrupt):
        console_write("Aborted by the user...")
    else:
        console_write("{0}: {1}".format(colorful.bold_red("Error"), colorful.red(exception)))
    if diagnosis.traceback:
        console_write("\n{0}".format(colorful.red(_failure_of(exception).traceback)))
    abort(diagnosis.exit_status)


def error_oracle(func):
    """
    Decorator which diagnoses every exception escaping ``func``
    """

    @wraps(func)
    def _diagnosed(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (Exception, KeyboardInterrupt) as e:  # pylint: disable=broad-except
            handle_exception(e)

    return _diagnosed


def catch_unhandled_exception(exc_type, exc_value, traceback):
    handle_exception(exc_value)
