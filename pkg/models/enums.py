# models/enums.py
from enum import Enum

# --------------------------
# The four rings of the change-of-rings chain
class Variant(str, Enum):
    A = "A"        # almost stretched Gorenstein algebra R/I
    RK = "RK"      # A modulo its socle, R/K
    SL = "SL"      # S/L, two variables, x1^s killed
    SV = "SV"      # S/V, two variables, complete intersection
    FILE = "FILE"  # hand-written algebra imported from JSON

# --------------------------
# Gorenstein classes (decided from H(2))
class GorensteinKind(str, Enum):
    STRETCHED = "stretched"
    ALMOST_STRETCHED = "almost_stretched"
    OTHER = "other"

# --------------------------
# Output formats for the CLI
class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"

# --------------------------
# Named steps of the symbolic proof replay
class ProofStage(str, Enum):
    REGULAR = "P_S"                 # two-dimensional regular ring
    FIRST_REGULAR_ELEMENT = "P_S/(f)"
    SV = "P_S/V"
    SL = "P_S/L"
    SOCLE_PEEL = "P_R/K(partial)"   # one rule-b step, x3..xh peeled one at a time
    RK = "P_R/K"
    ARTINIAN = "P_A(artinian)"
    LIFT = "P_A(lift)"              # one rule-a step back up a regular element
    FINAL = "P_A"
