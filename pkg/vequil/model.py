"""
Common ground of the two problem file models, Problem and Task: position in
the file, inherited tags and run timing.
"""

from dataclasses import dataclass

from .exceptions import VequilError


@dataclass(frozen=True)
class Tag:
    """
    Represents a tag like ``@assert`` or ``@seed(3)``
    """

    name: str
    arg: str = None

    @property
    def label(self):
        """
        The name tag expressions are evaluated against
        """
        return self.name if self.arg is None else "{0}({1})".format(self.name, self.arg)

    def __str__(self):
        return "@" + self.label


class Model(object):
    """
    Represents a located, tagged and timed part of a problem file
    """

    def __init__(self, id, keyword, sentence, path, line, parent=None, tags=None):
        self.id = id
        self.keyword = keyword
        self.sentence = sentence
        self.path = path
        self.line = line
        self.parent = parent
        self.tags = tags or []
        self.starttime = None
        self.endtime = None

    @property
    def all_tags(self):
        """
        Returns the tags of the parents followed by the own tags
        """
        inherited = self.parent.all_tags if self.parent else []
        return inherited + self.tags

    @property
    def tag_names(self):
        return [t.label for t in self.all_tags]

    @property
    def duration(self):
        if self.starttime is None or self.endtime is None:
            raise VequilError(
                "Cannot get duration of {0} '{1}' because either starttime or endtime is not set".format(
                    self.keyword, self.sentence
                )
            )
        return self.endtime - self.starttime
