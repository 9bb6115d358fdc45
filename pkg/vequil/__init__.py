__DESCRIPTION__ = "Exact verification toolkit for perturbed weak vector equilibrium problems"
__LICENSE__ = "MIT"
__VERSION__ = "0.1.0"
__AUTHOR__ = "The vequil developers"
__AUTHOR_EMAIL__ = "vequil@users.noreply.github.com"
__URL__ = "https://github.com/vequil/vequil"
__DOWNLOAD_URL__ = "https://github.com/vequil/vequil"
__BUGTRACK_URL__ = "https://github.com/vequil/vequil/issues"

# export some functions for users
from .terrain import world
from .hookregistry import before, after
from .taskregistry import task
from .customtyperegistry import custom_type
from .extensionregistry import extension
