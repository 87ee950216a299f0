"""Types used by abflat.conditions."""
