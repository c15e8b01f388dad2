__TITLE__ = "openbaro"
__VERSION__ = "v0.1.0"
__DESCRIPTION__ = "Simulation Laboratory for Knapsack Secretary under Bursty Adversaries"
__AUTHOR__ = "OpenBARO Contributors"
__EMAIL__ = "openbaro@googlegroups.com"
__version__ = __VERSION__

import platform

python_version_list = list(map(int, platform.python_version_tuple()))
assert python_version_list >= [
    3,
    8,
    0,
], (
    "OpenBARO requires Python 3.8 or newer, but your Python is"
    f" {platform.python_version()}"
)
