"""
Plugin interface for the extensions of a vequil run: report writers, formatters and recorders
"""

from singleton import singleton

#: column width of an option in the usage text
OPTION_WIDTH = 43


@singleton()
class ExtensionRegistry(object):
    """
    Registers all extensions

    An extension class may define:
        * ``LOAD_IF(config)``: whether the extension is loaded for a run; extensions without it are never loaded
        * ``LOAD_PRIORITY``: extensions are loaded by ascending priority
        * ``OPTIONS``: (option, description) pairs added to the command line usage
    """

    DEFAULT_LOAD_PRIORITY = 1000

    def __init__(self):
        self.extensions = []
        self.loaded_extensions = []

    def reset(self):
        """
        Reset all registered extensions
        """
        self.extensions = []
        self.loaded_extensions = []

    def register(self, extension_class):
        """
        Registers the class as a vequil extension; a reloaded class replaces its former version
        """
        key = (extension_class.__module__, extension_class.__qualname__)
        self.extensions = [e for e in self.extensions if (e.__module__, e.__qualname__) != key]
        self.extensions.append(extension_class)

    def load(self, config):
        """
        Instantiates every extension whose LOAD_IF accepts the run configuration
        """
        by_priority = sorted(self.extensions, key=lambda e: getattr(e, "LOAD_PRIORITY", self.DEFAULT_LOAD_PRIORITY))
        for extension_class in by_priority:
            load_if = getattr(extension_class, "LOAD_IF", None)
            if load_if is not None and load_if(config):
                self.loaded_extensions.append(extension_class())

    def _options(self):
        for extension_class in self.extensions:
            for option, description in getattr(extension_class, "OPTIONS", []):
                yield option, description

    def get_options(self):
        """
        Returns the docopt usage fragment of all extension options
        """
        return "\n           ".join("[{0}]".format(option) for option, _ in self._options())

    def get_option_description(self):
        """
        Returns the docopt options section of all extension options
        """
        return "\n    ".join(
            "{0} {1}".format(option.ljust(OPTION_WIDTH), description) for option, description in self._options()
        )


def extension(klass):
    """
    Registers the class as a vequil extension
    """
    ExtensionRegistry().register(klass)
    return klass
