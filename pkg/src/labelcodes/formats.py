"""Text rendering of words and labeling sequences.

One word per line everywhere: DNA words are uppercase ACGT strings, other
alphabets use decimal digit characters.  Labeling symbols are rendered as
single characters '0'-'9' then lowercase letters ('a' = 10, ... 'f' = 15),
which covers both the 11-symbol minimal-set alphabet and the pair codes of
all-labels sets up to q = 4.
"""

LABEL_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def labeling_to_text(u):
    return "".join(LABEL_DIGITS[v] for v in u)


def labeling_from_text(s):
    try:
        return tuple(LABEL_DIGITS.index(ch) for ch in s)
    except ValueError:
        raise ValueError(f"bad labeling character in {s!r}") from None


def word_to_text(x, alphabet):
    return "".join(alphabet.chars[v] for v in x)


def word_from_text(s, alphabet):
    out = []
    for ch in s:
        idx = alphabet.chars.find(ch)
        if idx < 0:
            raise ValueError(f"symbol {ch!r} not in alphabet {alphabet.chars!r}")
        out.append(idx)
    return tuple(out)
