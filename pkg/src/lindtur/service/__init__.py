"""HTTP service wrapping the core computations."""
