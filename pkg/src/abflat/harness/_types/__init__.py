"""Types used by abflat.harness."""
