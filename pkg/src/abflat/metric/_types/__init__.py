"""Types used by abflat.metric."""
