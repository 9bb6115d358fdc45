"""
Terrain module providing the run wide data container
"""

import threading

world = threading.local()  # pylint: disable=invalid-name
