"""
This module provides several utility functions
"""

import os
import sys
import fnmatch
import traceback


class Failure(object):  # pylint: disable=too-few-public-methods
    """
    Represents the reason why a task could not complete
    """

    def __init__(self, exception):
        """
        Initalizes the task failure with a given Exception

        :param Exception exception: the exception raised by the task
        """
        self.exception = exception
        self.reason = str(exception)
        self.traceback = traceback.format_exc()
        self.name = exception.__class__.__name__
        traceback_info = traceback.extract_tb(sys.exc_info()[2])
        if traceback_info:
            self.filename = traceback_info[-1][0]
            self.line = int(traceback_info[-1][1])
        else:
            self.filename = None
            self.line = None


def console_write(text):
    """
    Writes the given text to the console

    :param str text: the text which is printed to the console
    """
    print(str(text))


def recursive_glob(root, pattern):
    """
    Recursively search for files with given pattern inside a path

    :param str root: the root location to start search
    :param str pattern: to pattern to look for. It's matched against the filenames under `root`.

    :rtype: list
    :returns: A sorted list of matching files
    """
    matches = []
    for root, dirnames, filenames in os.walk(root):
        for filename in fnmatch.filter(filenames, pattern):
            matches.append(os.path.join(root, filename))
    return sorted(matches)


def parse_key_values(text):
    """
    Parses ``key=value`` pairs separated by whitespace

    >>> parse_key_values("depth=16 radius=2")
    {'depth': '16', 'radius': '2'}
    """
    pairs = {}
    for item in text.split():
        key, sep, value = item.partition("=")
        if not sep or not key or not value:
            raise ValueError("expected key=value, got '{0}'".format(item))
        pairs[key] = value
    return pairs


def split_top_level(text, delim=","):
    """
    Splits the text on the delimiter outside of any parentheses or brackets

    >>> split_top_level("(1, 2), [3, 4], 5")
    ['(1, 2)', '[3, 4]', '5']
    """
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == delim and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    parts.append("".join(current).strip())
    return parts
