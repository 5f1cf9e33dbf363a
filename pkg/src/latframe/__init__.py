"""Self-dual codes over Z_k, Construction A lattices and k-frames."""

__version__ = "0.1.0"
