"""
Root test package.

Subdirectories under tests/unit/ have no __init__.py and load as namespace packages, so
every test module basename must be unique across the tree (pytest's rootdir-based
import mode would otherwise collide).
"""
