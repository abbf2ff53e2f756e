"""foliamod - Baum-Bott indices and the moduli map of polynomial foliations of CP².

Computes singular points and their characteristic numbers, checks the
Baum-Bott and Camacho-Sad index identities, realizes the moduli map for
quadratic fields, and estimates holonomy multipliers at infinity.
"""

__version__ = "0.1.0"
__all__ = ["__version__"]
