"""
# 🪞 Pal-Words

Pal-Words computes how many palindromes it takes to pin down a word.

A set of intervals of a word palindromically generates it when every interval
is a palindrome and the mirror symmetries they force leave no freedom but the
renaming of letters. The least size of such a set is `mu(w)`; it is infinite
when even every palindrome of the word is not enough.

The key features are:

-  an exact branch-and-bound solver for `mu(w)` with a minimal witness set
-  explicit generating sets: `S_u` for binary words, the three-interval set of
   `a x b` with `x` central, the dilation through a doubling morphism
-  Sturmian, standard, doubled standard and Thue-Morse words
-  `A(w)`, lean words and the double-Sturmian factor test
-  verification campaigns streaming JSON-lines reports, in one or many processes
-  a `palwords` command line for every operation

# 🔨 Installation ###

```bash
git clone <repository> && cd pal-words
python -m pip install .
```

# 🦮 Guide

```python
import asyncio

from palwords import Verifier, mu, parse_word

result = mu(parse_word("00101100"))
print(result.mu, result.witness)        # 5 (1,2),(2,4),(3,5),(4,7),(7,8)

verifier = Verifier()
report = asyncio.run(verifier.verify_theorem_main(max_len=8))
print(report.verdict)                   # pass
```

```bash
palwords mu 00101100
palwords classify 0010011
palwords verify theorem --max-len 10 --threads 4
palwords psi --source std:1 --len 60 --factor-cap 14 --cap 4
```

# 📝 LICENSE

[MIT](LICENSE)
"""


from . import utils
from .config import HarnessConfig
from .errors import PalWordsError
from .palgen import (
    closure,
    dilate,
    generates,
    heritage_witness,
    is_palindromically_generated,
    leaves,
    letter_power_witnesses,
    reflect,
    witness_su,
    witness_three,
)
from .schemas import DirectiveSequence, DoublingSet, GeneratorSet, MuResult
from .schemas import MuOutcomeEnum as MuOutcomeEnum
from .solver import mu
from .sturm import (
    double,
    doubling_set,
    is_double_sturmian_factor,
    lean,
    parse_source,
    standard_word,
    tau_iterate,
    thue_morse_prefix,
)
from .verify import Verifier
from .word import Interval, Word, parse_word

__all__ = [
    "HarnessConfig",
    "PalWordsError",
    "Verifier",
    "Word",
    "Interval",
    "parse_word",
    "GeneratorSet",
    "MuResult",
    "MuOutcomeEnum",
    "DirectiveSequence",
    "DoublingSet",
    "mu",
    "reflect",
    "closure",
    "generates",
    "leaves",
    "witness_su",
    "witness_three",
    "dilate",
    "heritage_witness",
    "letter_power_witnesses",
    "is_palindromically_generated",
    "thue_morse_prefix",
    "tau_iterate",
    "standard_word",
    "double",
    "doubling_set",
    "lean",
    "is_double_sturmian_factor",
    "parse_source",
    "utils",
]
