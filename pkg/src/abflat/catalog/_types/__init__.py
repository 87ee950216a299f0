"""Types used by abflat.catalog."""
