"""
Word helpers - words over an alphabet, military order enumeration and display labels
"""
from itertools import groupby, product
from typing import Iterator, Sequence, Tuple

from .errors import UnknownSymbol

Word = Tuple[str, ...]
EMPTY_WORD: Word = ()

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def check_word(word: Sequence[str], alphabet: Sequence[str]) -> Word:
    """Return the word as a tuple, raising UnknownSymbol on foreign symbols"""
    for symbol in word:
        if symbol not in alphabet:
            raise UnknownSymbol(symbol, alphabet)
    return tuple(word)


def parse_word(text: str, alphabet: Sequence[str]) -> Word:
    """Read a word from text.

    Symbols may be separated by whitespace or commas; without separators the
    text is split into single characters, which only makes sense when every
    symbol is one character long. "ε" and the empty string are the empty word.
    """
    stripped = text.strip()
    if stripped in ("", "ε", "eps"):
        return EMPTY_WORD
    if any(sep in stripped for sep in (" ", ",")):
        symbols = [s for s in stripped.replace(",", " ").split() if s]
    elif stripped in alphabet:
        symbols = [stripped]
    else:
        symbols = list(stripped)
    return check_word(symbols, alphabet)


def words_up_to(alphabet: Sequence[str], max_length: int) -> Iterator[Word]:
    """All words of length <= max_length in military order (length, then lexicographic by alphabet order)"""
    for length in range(max_length + 1):
        # product() varies the last position fastest, which is lexicographic order
        yield from product(alphabet, repeat=length)


def reverse_word(word: Sequence[str]) -> Word:
    return tuple(reversed(word))


def format_word(word: Sequence[str]) -> str:
    """Compact display form: xxy -> x²y, ε for the empty word"""
    if not word:
        return "ε"
    joiner = "" if all(len(s) == 1 for s in word) else "·"
    parts = []
    for symbol, run in groupby(word):
        count = len(list(run))
        parts.append(symbol if count == 1 else symbol + str(count).translate(_SUPERSCRIPTS))
    return joiner.join(parts)
