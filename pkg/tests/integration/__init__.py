"""End-to-end and randomized sweeps over generated instances."""
