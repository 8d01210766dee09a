# Anchors the test directory on sys.path so shared helper modules
# (oracles, reference_tables) import as plain top-level names.
