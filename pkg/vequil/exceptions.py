"""
This module provides the exceptions raised by vequil
"""

__DOCS__ = "docs/grammar.rst"


class VequilError(Exception):
    """
    General vequil specific error
    """

    pass


class InputError(VequilError):
    """
    Base for every error caused by the user's input.

    The command line front-end maps these errors to exit status 2.
    """

    pass


class ProblemFileNotFoundError(InputError):
    """
    Raised if a given problem file does not exist
    """

    def __init__(self, problemfile):
        self.problemfile = problemfile
        super(ProblemFileNotFoundError, self).__init__("Problem file '{0}': No such file".format(problemfile))


class ProblemFileSyntaxError(InputError, SyntaxError):
    """
    Raised if a syntax error occured in a problem file
    """

    MESSAGE_TEMPLATE = """{msg} in problem file {path} on line {line}, column {column}

Error Oracle says:
You have a SyntaxError in your problem file!
Please have a look into the grammar documentation to find out which
keys and literals a problem file supports:
Link: {docs_link}"""

    def __init__(self, msg, path, line, column=1):
        self.path = path
        self.line = line
        self.column = column
        super(ProblemFileSyntaxError, self).__init__(
            ProblemFileSyntaxError.MESSAGE_TEMPLATE.format(
                msg=msg, path=path, line=line, column=column, docs_link=__DOCS__
            )
        )


class MapTextSyntaxError(InputError, SyntaxError):
    """
    Raised if a piecewise map text cannot be parsed
    """

    def __init__(self, msg, text, column):
        self.text = text
        self.column = column
        super(MapTextSyntaxError, self).__init__("{0} at column {1} of '{2}'".format(msg, column, text))


class UnknownCatalogIdError(InputError):
    """
    Raised if a catalog id is not known
    """

    def __init__(self, name, known):
        self.name = name
        super(UnknownCatalogIdError, self).__init__(
            "Unknown catalog id '{0}'. Known ids are: {1}".format(name, ", ".join(known))
        )


class UnknownMapError(InputError):
    """
    Raised if a task refers to a map which the problem does not declare
    """

    def __init__(self, name, problem):
        self.name = name
        super(UnknownMapError, self).__init__("Problem '{0}' does not declare a map named '{1}'".format(problem, name))


class DimensionMismatchError(InputError):
    """
    Raised if the dimensions of two operands do not agree
    """

    def __init__(self, expected, actual, what="vector"):
        self.expected = expected
        self.actual = actual
        super(DimensionMismatchError, self).__init__(
            "Dimension mismatch for {0}: expected {1} but got {2}".format(what, expected, actual)
        )


class DomainError(InputError):
    """
    Raised if a point lies outside of a domain box
    """

    def __init__(self, point, domain):
        self.point = point
        self.domain = domain
        super(DomainError, self).__init__("Point {0} lies outside of the domain {1}".format(point, domain))


class ConeValidationError(InputError):
    """
    Raised if a cone violates the representation contract
    """

    def __init__(self, reason):
        self.reason = reason
        super(ConeValidationError, self).__init__("Invalid cone: {0}".format(reason))


class RegionPartitionError(InputError):
    """
    Raised if the regions of a piecewise map do not partition its domain
    """

    MESSAGE_TEMPLATE = """The point {point} matches {count} regions of map '{name}'

Error Oracle says:
The regions of a piecewise map must be pairwise disjoint and cover
the whole domain. Every grid point has to match exactly one piece."""

    def __init__(self, name, point, count):
        self.name = name
        self.point = point
        self.count = count
        super(RegionPartitionError, self).__init__(
            RegionPartitionError.MESSAGE_TEMPLATE.format(name=name, point=point, count=count)
        )


class PoleError(VequilError):
    """
    Raised if a reciprocal node is evaluated at its pole
    """

    def __init__(self, expression, point):
        self.expression = expression
        self.point = point
        super(PoleError, self).__init__("Expression {0} hits its pole at {1}".format(expression, point))


class SequenceError(InputError):
    """
    Raised if a sequence violates its contract
    """

    pass


class TemplateMismatchError(InputError):
    """
    Raised if a condition witness does not match the condition's template
    """

    pass


class ConditionPreconditionError(VequilError):
    """
    Raised if a w-net term of an A-condition witness lies in -int C
    """

    def __init__(self, condition, index, value):
        self.condition = condition
        self.index = index
        self.value = value
        super(ConditionPreconditionError, self).__init__(
            "Precondition of {0} violated: w-term {1} at index {2} lies in -int C".format(condition, value, index)
        )


class TransferDiscrepancyError(VequilError):
    """
    Raised if a transfer condition holds but the perturbed problem is not solved.

    This can only be caused by a defect of the checkers themselves.
    """

    def __init__(self, x0, y, value):
        self.x0 = x0
        self.y = y
        self.value = value
        super(TransferDiscrepancyError, self).__init__(
            "Transfer asserted at {0} but f+g at y = {1} is {2} which lies in -int C".format(x0, y, value)
        )


class ReductionOracleMismatchError(VequilError):
    """
    Raised if the witness grid oracle disagrees with the limit reduction
    """

    MESSAGE_TEMPLATE = """The a-usc limit reduction and the witness grid oracle disagree for {case}

Error Oracle says:
The limit reduction is only trusted after the brute-force oracle agreed
with it on every catalog sequence. Fix the reduction before using a-usc checks."""

    def __init__(self, case):
        self.case = case
        super(ReductionOracleMismatchError, self).__init__(
            ReductionOracleMismatchError.MESSAGE_TEMPLATE.format(case=case)
        )


class MalformedReportError(InputError):
    """
    Raised if a report cannot be read back
    """

    def __init__(self, path, reason):
        self.path = path
        self.reason = reason
        super(MalformedReportError, self).__init__("Malformed report '{0}': {1}".format(path, reason))


class TaskPatternError(VequilError, SyntaxError):
    """
    Raised if a task pattern cannot be compiled.
    """

    def __init__(self, pattern, task_func_name, error):
        self.pattern = pattern
        self.task_func_name = task_func_name
        self.error = error
        super(TaskPatternError, self).__init__(
            "Cannot compile pattern '{0}' of task '{1}': {2}".format(pattern, task_func_name, error)
        )


class SameTaskError(VequilError):
    """
    Raised if two task patterns are exactly the same.
    """

    MESSAGE_TEMPLATE = """Cannot register task {0} with pattern '{1}' because it is already used by task {2}

Error Oracle says:
You have defined two task definitions with the same pattern.
This is invalid since vequil does not know which one is the one to go with."""

    def __init__(self, pattern, func1, func2):
        self.pattern = pattern
        self.func1 = func1
        self.func2 = func2
        super(SameTaskError, self).__init__(
            SameTaskError.MESSAGE_TEMPLATE.format(func2.__name__, pattern, func1.__name__)
        )


class TaskDefinitionNotFoundError(InputError):
    """
    Raised if the matcher cannot find a registered task for a task sentence.
    """

    MESSAGE_TEMPLATE = """Cannot find task definition for task '{sentence}' in {path}:{line}

Error Oracle says:
There is no task definition for '{sentence}'.
Have a look at the task sentence table in the grammar documentation."""

    def __init__(self, task):
        self.task = task
        super(TaskDefinitionNotFoundError, self).__init__(
            TaskDefinitionNotFoundError.MESSAGE_TEMPLATE.format(sentence=task.sentence, path=task.path, line=task.line)
        )


class RunnerEarlyExit(VequilError):
    """
    Raised if the runner has to stop before all tasks ran.
    """

    pass


class HookError(VequilError):
    """
    Raised if an exception was raised inside a hook
    """

    def __init__(self, hook_function, failure):
        self.hook_function = hook_function
        self.failure = failure
        super(HookError, self).__init__(
            "Hook '{0}' from {1}:{2} raised: '{3}: {4}'".format(
                hook_function.__name__,
                hook_function.__code__.co_filename,
                hook_function.__code__.co_firstlineno,
                failure.name,
                failure.reason,
            )
        )
