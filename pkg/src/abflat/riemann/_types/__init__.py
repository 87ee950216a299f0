"""Types used by abflat.riemann."""
