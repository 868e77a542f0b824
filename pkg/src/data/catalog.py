"""Named presentations and shipped data files."""

import logging
from pathlib import Path

from src.groups.grammar import parse_word
from src.groups.words import EMPTY, X, Y, commutator
from src.presentations.presentation import Presentation

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent.parent.parent / "data"
PRESENTATION_P_PATH = DATA_DIR / "presentation_p.txt"
PRESENTATION_Q_PATH = DATA_DIR / "presentation_q.txt"
CERT_ENE_PATH = DATA_DIR / "cert_ene.txt"

R1_TEXT = "[x,[x,y^-1]]^2 y [y^-1,x] y^-1"
R2_TEXT = "[x,[[y^-1,x],x]]"

# <x, y | [x,y], 1>
P0 = Presentation.rank2([commutator(X, Y), EMPTY])

R1 = parse_word(R1_TEXT)
R2 = parse_word(R2_TEXT)

# <x, y | r1, r2>; same normal closure as P0, not Q*-equivalent to it
Q = Presentation.rank2([R1, R2])
