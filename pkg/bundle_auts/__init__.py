"""
bundle-auts

Exact arithmetic in the fundamental groups of circle bundles over closed
surfaces, the automorphisms relating them to the surface group, and a
randomized harness that checks the point-pushing identities.
"""

__version__ = "0.1.0"
