"""
This module loads the extension modules shipped with vequil
"""

import sys
import pkgutil
import importlib

#: package holding the bundled extensions
EXTENSIONS_PACKAGE = "vequil.extensions"


def load_extensions(package=EXTENSIONS_PACKAGE):
    """
    Imports every module below the given package.

    Modules which were imported before are executed again, thus their
    extensions register with a reset ExtensionRegistry, too.

    :returns: the loaded modules in name order
    """
    root = importlib.import_module(package)
    modules = []
    for info in sorted(pkgutil.walk_packages(root.__path__, prefix=package + "."), key=lambda i: i.name):
        if info.ispkg:
            continue
        try:
            if info.name in sys.modules:
                modules.append(importlib.reload(sys.modules[info.name]))
            else:
                modules.append(importlib.import_module(info.name))
        except Exception as e:
            raise ImportError("Unable to import extension module '{0}': {1}".format(info.name, e))
    return modules
