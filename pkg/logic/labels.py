from enum import Enum
from typing import Dict


class Connective(str, Enum):
    ATOM = "atom"
    UNIT = "I"
    TENSOR = "otimes"
    WITH = "and"
    PLUS = "or"
    TOP = "top"
    ZERO = "bot"
    LIMP = "limp"


class Rule(str, Enum):
    """Rule labels of the unfocused sequent calculus; values are the JSON labels."""

    AX = "ax"
    PASS = "pass"
    IL = "IL"
    IR = "IR"
    OTIMES_L = "otimesL"
    OTIMES_R = "otimesR"
    AND_L1 = "andL1"
    AND_L2 = "andL2"
    AND_R = "andR"
    OR_L = "orL"
    OR_R1 = "orR1"
    OR_R2 = "orR2"
    TOP_R = "topR"
    BOT_L = "botL"
    EX = "ex"
    LIMP_L = "limpL"
    LIMP_R = "limpR"


class Phase(str, Enum):
    RI = "RI"
    LI = "LI"
    F = "F"
    C = "C"


class FocusedRule(str, Enum):
    AND_R = "andR"
    LIMP_R = "limpR"
    TOP_R = "topR"
    LI2RI = "LI2RI"
    IL = "IL"
    OTIMES_L = "otimesL"
    OR_L = "orL"
    BOT_L = "botL"
    F2LI = "F2LI"
    PASS = "pass"
    AX = "ax"
    IR = "IR"
    AND_L1 = "andL1"
    AND_L2 = "andL2"
    OTIMES_R = "otimesR"
    OR_R1 = "orR1"
    OR_R2 = "orR2"
    LIMP_L = "limpL"
    RI2C = "RI2C"
    EX = "ex"


# phase of the conclusion of each focused rule
FOCUSED_PHASE: Dict[FocusedRule, Phase] = {
    FocusedRule.AND_R: Phase.RI,
    FocusedRule.LIMP_R: Phase.RI,
    FocusedRule.TOP_R: Phase.RI,
    FocusedRule.LI2RI: Phase.RI,
    FocusedRule.IL: Phase.LI,
    FocusedRule.OTIMES_L: Phase.LI,
    FocusedRule.OR_L: Phase.LI,
    FocusedRule.BOT_L: Phase.LI,
    FocusedRule.F2LI: Phase.LI,
    FocusedRule.PASS: Phase.F,
    FocusedRule.AX: Phase.F,
    FocusedRule.IR: Phase.F,
    FocusedRule.AND_L1: Phase.F,
    FocusedRule.AND_L2: Phase.F,
    FocusedRule.OTIMES_R: Phase.F,
    FocusedRule.OR_R1: Phase.F,
    FocusedRule.OR_R2: Phase.F,
    FocusedRule.LIMP_L: Phase.F,
    FocusedRule.RI2C: Phase.C,
    FocusedRule.EX: Phase.C,
}


class TagKind(str, Enum):
    P = "P"
    C1 = "C1"
    C2 = "C2"
    R = "R"
    T = "T"
    CTX = "ctx"
    BULLET = "bullet"


class Direction(str, Enum):
    LR = "lr"
    RL = "rl"


class EquationId(str, Enum):
    # eta-conversions
    ETA_I = "eta_I"
    ETA_TENSOR = "eta_otimes"
    ETA_WITH = "eta_and"
    ETA_PLUS = "eta_or"
    # permutative conversions
    OTIMESR_PASS = "otimesR_pass"
    OTIMESR_IL = "otimesR_IL"
    OTIMESR_OTIMESL = "otimesR_otimesL"
    OTIMESR_ANDL = "otimesR_andL"
    OTIMESR_ORL = "otimesR_orL"
    PASS_ANDR = "pass_andR"
    IL_ANDR = "IL_andR"
    OTIMESL_ANDR = "otimesL_andR"
    ANDL_ANDR = "andL_andR"
    ORL_ANDR = "orL_andR"
    ORR_PASS = "orR_pass"
    ORR_IL = "orR_IL"
    ORR_OTIMESL = "orR_otimesL"
    ORR_ANDL = "orR_andL"
    ORR_ORL = "orR_orL"
    # additive units
    TOP_UNIQUE = "topR_unique"
    BOT_UNIQUE = "botL_unique"
    # skew exchange
    EX_INVOLUTION = "ex_involution"
    EX_YANG_BAXTER = "ex_yang_baxter"
    EX_ANDL = "ex_andL"
    EX_ANDR = "ex_andR"
    EX_ORL = "ex_orL"
    EX_ORR = "ex_orR"
    EX_COMMUTE = "ex_commute"
    EX_PASS = "ex_pass"
    EX_IL = "ex_IL"
    EX_OTIMESL = "ex_otimesL"
    EX_OTIMESR_LEFT = "ex_otimesR_left"
    EX_OTIMESR_RIGHT = "ex_otimesR_right"
    # linear implication
    ETA_LIMP = "eta_limp"
    OTIMESR_LIMPL = "otimesR_limpL"
    PASS_LIMPR = "pass_limpR"
    IL_LIMPR = "IL_limpR"
    OTIMESL_LIMPR = "otimesL_limpR"
    LIMPL_LIMPR = "limpL_limpR"
    ANDL_LIMPR = "andL_limpR"
    ORL_LIMPR = "orL_limpR"
    ORR_LIMPL = "orR_limpL"
    LIMPL_ANDR = "limpL_andR"
