"""
spreadcheck: Laplacian spectra, effective resistance and certificate audits
for the bound lambda(G) + lambda(complement G) >= 1.
"""

__version__ = "0.1.0"
