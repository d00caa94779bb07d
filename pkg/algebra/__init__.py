# algebra/__init__.py
"""
Exact finite-dimensional local algebras:
1. Linear algebra over QQ / GF(p) (linalg)
2. Algebras by multiplication table, quotients, socle, Hilbert function (core)
3. Builders for the rings of the change-of-rings chain (builders, registry)
4. JSON import / export (io)
"""
