import os
import sys

from hypothesis import settings

settings.register_profile("bcchroma", max_examples=60, deadline=None)
settings.load_profile("bcchroma")

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))
