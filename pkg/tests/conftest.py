import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

# expansion cost scales with the alternative product of the input, so a
# fixed per-example deadline only measures the generator's mood
settings.register_profile("suite", deadline=None)
settings.load_profile("suite")
