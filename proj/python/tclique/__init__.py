from ._tclique import *  # noqa: F401,F403
from ._tclique import __version__, BudgetExhausted, MaterializationRefused, ParseError  # noqa: F401
